#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "wcong/bde.hpp"
#include "wcong/error.hpp"

namespace wcong {

namespace {

using Point = std::pair<double, double>;

constexpr double kPi = 3.14159265358979323846;

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

struct Tracer {
  const BdeField& field;
  int branch;  // 0 or 1
  double window, step;
  int max_steps;

  // Direction of the branch at p, signed to agree with heading.
  std::optional<Direction> dir(const Point& p, const Direction& heading) const {
    const auto pair = slope_pair(field, p.first, p.second);
    if (!pair) return std::nullopt;
    Direction d = (*pair)[static_cast<std::size_t>(branch)];
    if (d.first * heading.first + d.second * heading.second < 0) d = {-d.first, -d.second};
    return d;
  }

  bool inside(const Point& p) const { return std::fabs(p.first) <= window && std::fabs(p.second) <= window; }

  // Points after the start, and whether the step limit was hit.
  std::pair<std::vector<Point>, bool> run(Point p, Direction heading) const {
    std::vector<Point> out;
    for (int i = 0; i < max_steps; ++i) {
      if (field.delta(p.first, p.second) < step * step) return {out, false};
      const auto k1 = dir(p, heading);
      if (!k1) return {out, false};
      const auto k2 = dir({p.first + 0.5 * step * k1->first, p.second + 0.5 * step * k1->second}, *k1);
      if (!k2) return {out, false};
      const auto k3 = dir({p.first + 0.5 * step * k2->first, p.second + 0.5 * step * k2->second}, *k1);
      if (!k3) return {out, false};
      const auto k4 = dir({p.first + step * k3->first, p.second + step * k3->second}, *k1);
      if (!k4) return {out, false};
      const double dx = (k1->first + 2 * k2->first + 2 * k3->first + k4->first) / 6.0;
      const double dy = (k1->second + 2 * k2->second + 2 * k3->second + k4->second) / 6.0;
      const Point next{p.first + step * dx, p.second + step * dy};
      if (!inside(next)) return {out, false};
      out.push_back(next);
      heading = *k1;
      p = next;
    }
    return {out, true};
  }
};

std::vector<Point> seeds(double window, int per_side) {
  std::vector<Point> out;
  for (int i = 0; i < per_side; ++i) {
    const double t = -window + (2 * i + 1) * window / per_side;
    out.push_back({t, -window});
    out.push_back({window, t});
    out.push_back({-t, window});
    out.push_back({-window, -t});
  }
  const double r = window / 8;
  for (int k = 0; k < 8; ++k) {
    const double a = (2 * k + 1) * kPi / 8;
    out.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return out;
}

std::vector<std::array<Point, 2>> marching_squares(const BdeField& field, double window, int grid) {
  std::vector<std::array<Point, 2>> out;
  const double h = 2 * window / grid;
  std::vector<double> val(static_cast<std::size_t>((grid + 1) * (grid + 1)));
  const auto at = [&](int i, int j) -> double& { return val[static_cast<std::size_t>(j * (grid + 1) + i)]; };
  for (int j = 0; j <= grid; ++j)
    for (int i = 0; i <= grid; ++i) at(i, j) = field.delta(-window + i * h, -window + j * h);

  const auto cross = [](const Point& a, const Point& b, double va, double vb) {
    const double t = va / (va - vb);
    return Point{a.first + t * (b.first - a.first), a.second + t * (b.second - a.second)};
  };
  for (int j = 0; j < grid; ++j) {
    for (int i = 0; i < grid; ++i) {
      const Point c[4] = {{-window + i * h, -window + j * h},
                          {-window + (i + 1) * h, -window + j * h},
                          {-window + (i + 1) * h, -window + (j + 1) * h},
                          {-window + i * h, -window + (j + 1) * h}};
      const double v[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      std::vector<Point> hits;  // edges in order: bottom, right, top, left
      for (int e = 0; e < 4; ++e) {
        const int a = e, b = (e + 1) % 4;
        if ((v[a] >= 0) != (v[b] >= 0)) hits.push_back(cross(c[a], c[b], v[a], v[b]));
      }
      if (hits.size() == 2) {
        out.push_back({hits[0], hits[1]});
      } else if (hits.size() == 4) {
        const double centre = field.delta(c[0].first + h / 2, c[0].second + h / 2);
        // Saddle cell: pair edges so the centre's sign matches corner 0 or not.
        if ((centre >= 0) == (v[0] >= 0)) {
          out.push_back({hits[0], hits[1]});
          out.push_back({hits[2], hits[3]});
        } else {
          out.push_back({hits[0], hits[3]});
          out.push_back({hits[1], hits[2]});
        }
      }
    }
  }
  return out;
}

}  // namespace

FlowFigure integrate_configuration(const PrincipalBDE& bde, const IntegrationOptions& options) {
  if (!(options.window > 0) || !(options.step > 0)) throw Error(Errc::precondition, "window and step must be positive");
  if (options.seeds < 1 || options.grid < 1) throw Error(Errc::precondition, "seeds and grid must be positive");
  if (bde.P.is_zero() && bde.Q.is_zero() && bde.Rc.is_zero()) throw Error(Errc::domain, "degenerate field: zero BDE");

  const BdeField field(bde);
  FlowFigure fig;
  fig.window = options.window;
  fig.step = options.step;
  const int max_steps =
      options.max_steps > 0 ? options.max_steps : static_cast<int>(std::ceil(4 * options.window / options.step));

  const auto starts = seeds(options.window, options.seeds);
  for (int branch = 0; branch < 2; ++branch) {
    const Tracer tracer{field, branch, options.window, options.step, max_steps};
    for (const Point& s : starts) {
      if (field.delta(s.first, s.second) < options.step * options.step) continue;
      const auto pair = slope_pair(field, s.first, s.second);
      if (!pair) continue;
      const Direction d = (*pair)[static_cast<std::size_t>(branch)];
      auto [back, back_cut] = tracer.run(s, {-d.first, -d.second});
      auto [fwd, fwd_cut] = tracer.run(s, d);
      fig.truncated_trajectories += back_cut + fwd_cut;
      Polyline line;
      line.branch = branch + 1;
      line.points.assign(back.rbegin(), back.rend());
      line.points.push_back(s);
      line.points.insert(line.points.end(), fwd.begin(), fwd.end());
      if (line.points.size() >= 2) fig.polylines.push_back(std::move(line));
    }
  }
  fig.discriminant = marching_squares(field, options.window, options.grid);
  return fig;
}

void write_csv(const FlowFigure& figure, std::ostream& out) {
  out << "branch,traj_id,x,y\n";
  for (std::size_t t = 0; t < figure.polylines.size(); ++t) {
    const auto& line = figure.polylines[t];
    for (const auto& [x, y] : line.points) out << line.branch << ',' << t << ',' << fmt6(x) << ',' << fmt6(y) << '\n';
  }
  for (const auto& seg : figure.discriminant) {
    for (const auto& [x, y] : seg) out << "disc,0," << fmt6(x) << ',' << fmt6(y) << '\n';
  }
}

void write_svg(const FlowFigure& figure, std::ostream& out) {
  const double w = figure.window;
  const std::string sw = fmt6(w / 400);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt6(-w) << ' ' << fmt6(-w) << ' ' << fmt6(2 * w)
      << ' ' << fmt6(2 * w) << "\" width=\"600\" height=\"600\">\n";
  out << "<!-- wcong " WCONG_VERSION " -->\n";
  out << "<g transform=\"scale(1,-1)\" fill=\"none\">\n";
  for (const auto& line : figure.polylines) {
    out << "<path class=\"branch" << line.branch << "\" stroke=\"" << (line.branch == 1 ? "#1f4e99" : "#2a7f3a")
        << "\" stroke-width=\"" << sw << '"';
    if (line.branch == 2) out << " stroke-dasharray=\"" << fmt6(w / 80) << ' ' << fmt6(w / 160) << '"';
    out << " d=\"";
    for (std::size_t i = 0; i < line.points.size(); ++i) {
      out << (i == 0 ? "M" : " L") << fmt6(line.points[i].first) << ',' << fmt6(line.points[i].second);
    }
    out << "\"/>\n";
  }
  if (!figure.discriminant.empty()) {
    out << "<path class=\"discriminant\" stroke=\"#c0392b\" stroke-width=\"" << fmt6(w / 200) << "\" d=\"";
    bool first = true;
    for (const auto& seg : figure.discriminant) {
      out << (first ? "" : " ") << 'M' << fmt6(seg[0].first) << ',' << fmt6(seg[0].second) << " L"
          << fmt6(seg[1].first) << ',' << fmt6(seg[1].second);
      first = false;
    }
    out << "\"/>\n";
  }
  out << "<circle class=\"umbilic\" cx=\"0\" cy=\"0\" r=\"" << fmt6(w / 100) << "\" fill=\"#000\"/>\n";
  out << "</g>\n</svg>\n";
}

}  // namespace wcong
