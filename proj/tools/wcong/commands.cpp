#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "wcong/bde.hpp"
#include "wcong/classifier.hpp"
#include "wcong/jetsolver.hpp"

namespace wcong::cli {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string padded(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

// Writes a line to out, prefixed with "# " when it shares a stream with a germ file.
class ReportSink {
 public:
  ReportSink(std::ostream& out, bool commented) : out_(out), commented_(commented) {}
  void line(const std::string& text) { out_ << (commented_ ? "# " : "") << text << '\n'; }

 private:
  std::ostream& out_;
  bool commented_;
};

void print_series(std::ostream& out, const std::string& name, const Series2& s) {
  for (int n = 0; n <= s.cap(); ++n) {
    for (int k = 0; k <= n; ++k) {
      const Rational v = s.derivative(n - k, k);
      if (sgn(v) != 0) out << "  " << name << "_{" << n - k << "," << k << "} = " << to_string(v) << '\n';
    }
  }
}

CongruenceGerm random_germ(std::mt19937_64& rng, int cap) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  CongruenceGerm germ{Series2(cap), Series2(cap)};
  for (Series2* s : {&germ.xi1, &germ.xi2}) {
    for (int n = 0; n <= cap; ++n) {
      for (int k = 0; k <= n; ++k) s->set_coeff(n - k, k, coeff(rng));
    }
  }
  return germ;
}

}  // namespace

int cmd_wcheck(const CongruenceGerm& germ, std::ostream& out) {
  if (germ.cap() < 2) throw Error(Errc::insufficient_order, "wcheck needs order >= 2, got " + std::to_string(germ.cap()));
  const Series2 w = w_series(germ);
  if (w.is_zero()) {
    out << "W ≡ 0 through order " << w.cap() << '\n';
    return kOk;
  }
  out << "W is nonzero through order " << w.cap() << ":\n";
  print_series(out, "W", w);
  return kFalse;
}

int cmd_classify(const CongruenceGerm& germ, const ClassifyOptions& options, std::ostream& out) {
  if (germ.cap() < 2) throw Error(Errc::insufficient_order, "classify needs order >= 2");
  if (!is_umbilic(germ)) {
    throw Error(Errc::not_umbilic, "origin is not umbilical: p10=" + to_string(germ.p(1, 0)) + " p01=" +
                                       to_string(germ.p(0, 1)) + " q10=" + to_string(germ.q(1, 0)) +
                                       " q01=" + to_string(germ.q(0, 1)));
  }
  const NondegeneracyReport nd = nondegeneracy(germ);
  out << "umbilic: yes\n";
  out << "Omega: " << to_string(nd.omega[0]) << ' ' << to_string(nd.omega[1]) << ' ' << to_string(nd.omega[2]) << '\n';
  out << "J: " << to_string(nd.jay[0]) << ' ' << to_string(nd.jay[1]) << ' ' << to_string(nd.jay[2]) << '\n';
  out << "nondegenerate: " << (nd.nondegenerate ? "yes" : "no") << '\n';

  CongruenceGerm work = germ;
  std::optional<Rational> m;
  try {
    auto [normal, nf] = normalize_umbilic(germ);
    work = std::move(normal);
    m = nf.m;
    out << "normal form: m=" << to_string(nf.m) << " p11=" << to_string(nf.p11) << " q02=" << to_string(nf.q02)
        << " L=[" << to_string(nf.linear_change[0]) << ' ' << to_string(nf.linear_change[1]) << "; "
        << to_string(nf.linear_change[2]) << ' ' << to_string(nf.linear_change[3]) << "]\n";
  } catch (const Error& e) {
    out << "normal form: unavailable (" << e.what() << ")\n";
  }

  const Series2 delta = discriminant(work);
  const SingularityVerdict v = options.numeric ? classify_discriminant_numeric(delta, options.cap_ainf)
                                               : classify_discriminant(delta, options.cap_ainf);
  out << "verdict: " << v.label() << (v.numeric ? " (numeric)" : "") << '\n';
  for (const auto& w : v.witnesses) out << "  " << w.name << " = " << to_string(w.value) << '\n';
  if (!v.diagnostic.empty()) out << "  note: " << v.diagnostic << '\n';

  const RidgeWitness r = ridge_limit_witness(work, work.cap());
  if (r.found) {
    out << "ridge witness: R(" << r.j << "," << r.k << ") = " << to_string(r.value) << '\n';
  } else {
    out << "ridge witness: none through order " << r.searched_through << '\n';
  }

  out << "---\n";
  out << "umbilic=true\n";
  out << "nondegenerate=" << (nd.nondegenerate ? "true" : "false") << '\n';
  out << "m=" << (m ? to_string(*m) : "unknown") << '\n';
  out << "verdict=" << v.label() << '\n';
  out << "numeric=" << (v.numeric ? "true" : "false") << '\n';
  if (v.kind == SingularityKind::A_infinity_to_cap) out << "ainf_cap=" << v.ainf_cap << '\n';
  if (r.found) {
    out << "ridge_j=" << r.j << '\n' << "ridge_k=" << r.k << '\n' << "ridge_value=" << to_string(r.value) << '\n';
  } else {
    out << "ridge_searched_through=" << r.searched_through << '\n';
  }
  return kOk;
}

int cmd_jetsolve(const std::optional<CongruenceGerm>& input, const JetsolveOptions& options, bool json,
                 std::ostream& germ_out, std::ostream& report_out) {
  const auto m = parse_rational(options.m);
  if (!m) throw Error(Errc::parse, "--m: bad rational '" + options.m + "'");
  if (options.order < 1) throw Error(Errc::insufficient_order, "--order must be at least 1");
  const int cap = options.order + 2;

  Rational p11(1);
  if (input && sgn(input->p(1, 1)) != 0) p11 = input->p(1, 1);
  UmbilicNormalForm nf = UmbilicNormalForm::from_two_jet(p11, Rational(-*m * p11));
  if (input) {
    if (input->cap() > cap) throw Error(Errc::precondition, "input order exceeds --order + 2");
    for (Component comp : {Component::p, Component::q}) {
      for (int n = 0; n <= input->cap(); ++n) {
        for (int k = 0; k <= n; ++k) {
          const Slot slot{comp, n - k, k};
          const Rational v = get_slot(*input, slot);
          if (sgn(v) == 0) continue;
          switch (slot_role(nf.m, slot)) {
            case SlotRole::free:
              nf.free_coeffs[slot] = v;
              break;
            case SlotRole::fixed:
              if (slot == Slot{Component::p, 1, 1} || (slot == Slot{Component::q, 0, 2} && v == nf.q02)) break;
              throw Error(Errc::precondition, to_string(slot) + "=" + to_string(v) + " conflicts with the normal form (m=" +
                                                  to_string(nf.m) + ", p11=" + to_string(nf.p11) + ")");
            case SlotRole::dependent:
              throw Error(Errc::precondition, to_string(slot) + " is determined by the jet equations for m=" +
                                                  to_string(nf.m) + " and cannot be given");
          }
        }
      }
    }
  }
  if (options.random_free) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (const Slot& slot : free_slots(nf.m, options.order + 1)) {
      const int value = coeff(rng);
      if (!nf.free_coeffs.count(slot)) nf.free_coeffs[slot] = value;
    }
  }

  auto [germ, report] = solve_jet(nf, options.order);

  ReportSink sink(report_out, &germ_out == &report_out && !json);
  sink.line("jetsolve m=" + to_string(nf.m) + " p11=" + to_string(nf.p11) + " q02=" + to_string(nf.q02) +
            " order=" + std::to_string(options.order));
  sink.line("solved through order " + std::to_string(report.order_reached));
  for (const auto& e : report.equations_used) {
    sink.line(to_string(e.unknown) + " = " + to_string(e.value) + "  from W_{" + std::to_string(e.i) + "," +
              std::to_string(e.k) + "} (slope " + to_string(e.slope) + ")");
  }
  if (!report.extra_free_slots.empty()) {
    std::string names;
    for (const auto& s : report.extra_free_slots) names += " " + to_string(s);
    sink.line("extra free slots (zero slope, zero residual):" + names);
  }
  if (report.wm0_residual) {
    sink.line("W_{m0} residual = " + to_string(*report.wm0_residual));
  } else if (is_natural(nf.m)) {
    sink.line("W_{m0}: order " + to_string(nf.m) + " not reached");
  } else {
    sink.line("W_{m0}: not applicable (m is not a positive integer)");
  }
  germ_out << (json ? format_germ_json(germ) : format_germ_text(germ));
  return kOk;
}

int cmd_plot(const CongruenceGerm& germ, const PlotOptions& options, std::ostream& out) {
  const PrincipalBDE bde = principal_bde(germ);
  if (bde.P.is_zero() && bde.Q.is_zero() && bde.Rc.is_zero()) {
    throw Error(Errc::domain, "degenerate field: the principal BDE vanishes identically");
  }

  const auto m = bde_case(bde);
  std::vector<BlowUpChart> charts;
  if (m && *m == 1) charts = {BlowUpChart::H, BlowUpChart::H1};
  if (m && *m == 2) charts = {BlowUpChart::Hp, BlowUpChart::Hn, BlowUpChart::H1};
  out << "blow-up analysis, case m=" << (m ? to_string(*m) : "undefined") << '\n';
  if (charts.empty()) out << "  no chart for this case\n";
  if (!charts.empty()) out << padded("chart", 7) << padded("coord", 12) << padded("det", 14) << padded("trace", 14) << "type\n";
  for (BlowUpChart chart : charts) {
    try {
      const auto points = blow_up_analysis(bde, chart);
      if (points.empty()) out << padded(to_string(chart), 7) << "no singular points\n";
      for (const auto& p : points) {
        out << padded(to_string(chart), 7) << padded(fixed6(p.coord), 12) << padded(fixed6(p.jacobian_det), 14)
            << padded(fixed6(p.trace), 14) << to_string(p.type) << '\n';
      }
    } catch (const Error& e) {
      out << padded(to_string(chart), 7) << "unavailable: " << e.what() << '\n';
    }
  }

  if (options.svg_path.empty() && options.csv_path.empty()) return kOk;
  IntegrationOptions io;
  io.window = options.window;
  io.step = options.step;
  io.seeds = options.seeds;
  io.grid = options.grid;
  const FlowFigure fig = integrate_configuration(bde, io);
  out << "figure: " << fig.polylines.size() << " polylines, " << fig.discriminant.size()
      << " discriminant segments, " << fig.truncated_trajectories << " truncated\n";

  const auto write = [](const std::string& path, auto&& writer) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::io, "cannot write '" + path + "'");
    writer(f);
    f.flush();
    if (!f) throw Error(Errc::io, "write failed for '" + path + "'");
  };
  if (!options.csv_path.empty()) write(options.csv_path, [&](std::ostream& f) { write_csv(fig, f); });
  if (!options.svg_path.empty()) write(options.svg_path, [&](std::ostream& f) { write_svg(fig, f); });
  return kOk;
}

int cmd_identity(const std::optional<CongruenceGerm>& input, const IdentityOptions& options, std::ostream& out) {
  if (input) {
    if (input->cap() < 2) throw Error(Errc::insufficient_order, "identity needs order >= 2");
    const Series2 r = hw_identity_residual(*input);
    if (r.is_zero()) {
      out << "exact through order " << r.cap() << '\n';
      return kOk;
    }
    out << "residual is nonzero:\n";
    print_series(out, "r", r);
    return kFalse;
  }
  if (options.random < 1) throw Error(Errc::parse, "identity: give a germ file or --random N");
  if (options.cap < 2) throw Error(Errc::insufficient_order, "identity needs --cap >= 2");
  std::mt19937_64 rng(options.seed);
  int exact = 0;
  for (int i = 0; i < options.random; ++i) {
    if (hw_identity_residual(random_germ(rng, options.cap)).is_zero()) {
      ++exact;
    } else {
      out << "germ " << i << ": residual nonzero\n";
    }
  }
  out << exact << "/" << options.random << " exact\n";
  return exact == options.random ? kOk : kFalse;
}

}  // namespace wcong::cli
