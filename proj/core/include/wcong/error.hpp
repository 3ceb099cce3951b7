#pragma once

#include <stdexcept>
#include <string>

namespace wcong {

/// Failure categories raised by the library. The command-line tool maps these
/// onto its exit-code ledger.
enum class Errc {
  structural,          // mismatched caps, out-of-range coefficient access
  unit_division,       // division by a series with zero constant term
  substitution,        // substituted series has a nonzero constant term
  unsupported_map,     // map inversion needs identity linear part
  insufficient_order,  // cap too small for the requested quantity
  degenerate_jet,      // vanishing denominator built from the 2-jet
  not_umbilic,         // origin is not an umbilical point
  normalization,       // no rational normal form for the 2-jet
  solver,              // inconsistent jet equation
  unsupported_branch,  // recursion branch not implemented
  not_applicable,      // e.g. W_{m0} requested for non-integral m
  class_violation,     // germ outside the p_{j0} = 0 example class
  precondition,        // other violated operation precondition
  domain,              // input outside the domain of the operation
  consistency,         // internal identity check failed
  parse,               // malformed germ file
  io,                  // file-system failure
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wcong
