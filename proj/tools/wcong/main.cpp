#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

using namespace wcong::cli;

int main(int argc, char** argv) {
  CLI::App app{"wcong: W-congruences, umbilic classification and principal configurations"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;

  auto* wcheck = app.add_subcommand("wcheck", "Check whether a germ is a W-congruence");
  wcheck->add_option("germ", path, "Germ file")->required();
  wcheck->add_flag("--json", json, "Read the JSON germ format");

  ClassifyOptions classify_opts;
  auto* classify = app.add_subcommand("classify", "Classify the umbilic at the origin");
  classify->add_option("germ", path, "Germ file")->required();
  classify->add_option("--cap-ainf", classify_opts.cap_ainf, "Highest order for the A_infinity check");
  classify->add_flag("--numeric", classify_opts.numeric, "Floating zero tests");
  classify->add_flag("--json", json, "Read the JSON germ format");

  JetsolveOptions jet_opts;
  std::string out_path;
  auto* jetsolve = app.add_subcommand("jetsolve", "Complete a normalized umbilic jet of a W-congruence");
  jetsolve->add_option("germ", path, "Partial germ file with free coefficients");
  jetsolve->add_option("--m", jet_opts.m, "Umbilic parameter m = -q02/p11")->required();
  jetsolve->add_option("--order", jet_opts.order, "Solve W_{i,k} = 0 for i + k <= N")->required();
  jetsolve->add_option("--seed", jet_opts.seed, "Seed for --random-free");
  jetsolve->add_flag("--random-free", jet_opts.random_free, "Fill unset free slots with integers in [-5, 5]");
  jetsolve->add_option("--out", out_path, "Write the germ here instead of stdout");
  jetsolve->add_flag("--json", json, "Use the JSON germ format");

  PlotOptions plot_opts;
  auto* plot = app.add_subcommand("plot", "Blow-up table and principal configuration figure");
  plot->add_option("germ", path, "Germ file")->required();
  plot->add_option("--window", plot_opts.window, "Half-width of the square window")->check(CLI::PositiveNumber);
  plot->add_option("--step", plot_opts.step, "Integration step")->check(CLI::PositiveNumber);
  plot->add_option("--seeds", plot_opts.seeds, "Seeds per window side")->check(CLI::PositiveNumber);
  plot->add_option("--grid", plot_opts.grid, "Marching-squares cells per side")->check(CLI::PositiveNumber);
  plot->add_option("--svg", plot_opts.svg_path, "SVG output path");
  plot->add_option("--csv", plot_opts.csv_path, "CSV output path");
  plot->add_flag("--json", json, "Read the JSON germ format");

  IdentityOptions id_opts;
  auto* identity = app.add_subcommand("identity", "Check c^2 R - S = -4 c^3 delta W exactly");
  identity->add_option("germ", path, "Germ file");
  identity->add_option("--random", id_opts.random, "Number of random germs");
  identity->add_option("--seed", id_opts.seed, "Random seed");
  identity->add_option("--cap", id_opts.cap, "Cap of the random germs");
  identity->add_flag("--json", json, "Read the JSON germ format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  return guarded(std::cerr, [&]() -> int {
    if (*wcheck) return cmd_wcheck(read_germ(path, json), std::cout);
    if (*classify) return cmd_classify(read_germ(path, json), classify_opts, std::cout);
    if (*plot) return cmd_plot(read_germ(path, json), plot_opts, std::cout);
    if (*identity) {
      std::optional<wcong::CongruenceGerm> input;
      if (!path.empty()) input = read_germ(path, json);
      return cmd_identity(input, id_opts, std::cout);
    }
    std::optional<wcong::CongruenceGerm> input;
    if (!path.empty()) input = read_germ(path, json);
    if (out_path.empty()) return cmd_jetsolve(input, jet_opts, json, std::cout, std::cout);
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw wcong::Error(wcong::Errc::io, "cannot write '" + out_path + "'");
    const int rc = cmd_jetsolve(input, jet_opts, json, f, std::cout);
    f.flush();
    if (!f) throw wcong::Error(wcong::Errc::io, "write failed for '" + out_path + "'");
    return rc;
  });
}
