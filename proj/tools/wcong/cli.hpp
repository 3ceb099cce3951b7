#pragma once

#include <cstdint>
#include <ostream>
#include <optional>
#include <string>
#include <string_view>

#include "wcong/congruence.hpp"
#include "wcong/error.hpp"

namespace wcong::cli {

enum ExitCode : int {
  kOk = 0,
  kFalse = 1,
  kParse = 2,
  kDomain = 3,
  kSolver = 4,
  kIo = 5,
};

int exit_code(Errc code);

/// Text format, one entry per line:
///   order N
///   xi1 j k value      (p_jk, derivative convention)
///   xi2 j k value      (q_jk)
/// '#' starts a comment. Without an order line the order is the largest
/// listed j + k, at least 2. Errors are Errc::parse with line and column.
CongruenceGerm parse_germ_text(std::string_view text);

/// {"order": N, "xi1": [[j, k, "num/den"], ...], "xi2": [...]}; values may
/// also be JSON integers.
CongruenceGerm parse_germ_json(std::string_view text);

/// Nonzero slots only, ordered by total degree then k.
std::string format_germ_text(const CongruenceGerm& germ);
std::string format_germ_json(const CongruenceGerm& germ);

/// Errc::io when the file cannot be read.
CongruenceGerm read_germ(const std::string& path, bool json);

struct ClassifyOptions {
  int cap_ainf = 1000;
  bool numeric = false;
};

struct JetsolveOptions {
  std::string m;
  int order = 0;
  std::uint64_t seed = 0;
  bool random_free = false;
};

struct PlotOptions {
  double window = 1.0;
  double step = 0.01;
  int seeds = 8;
  int grid = 128;
  std::string svg_path;
  std::string csv_path;
};

struct IdentityOptions {
  int random = 0;
  std::uint64_t seed = 1;
  int cap = 5;
};

// Each command writes its report to out, diagnostics to err, and returns an exit code.
int cmd_wcheck(const CongruenceGerm& germ, std::ostream& out);
int cmd_classify(const CongruenceGerm& germ, const ClassifyOptions& options, std::ostream& out);
/// input may be empty (minimal input). Writes the completed germ to germ_out
/// and the report to report_out; when they are the same stream the report
/// lines are prefixed with '#'.
int cmd_jetsolve(const std::optional<CongruenceGerm>& input, const JetsolveOptions& options, bool json,
                 std::ostream& germ_out, std::ostream& report_out);
int cmd_plot(const CongruenceGerm& germ, const PlotOptions& options, std::ostream& out);
int cmd_identity(const std::optional<CongruenceGerm>& input, const IdentityOptions& options, std::ostream& out);

/// Runs body and converts a thrown wcong::Error into its exit code, printing
/// "error: ..." to err.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
}

}  // namespace wcong::cli
