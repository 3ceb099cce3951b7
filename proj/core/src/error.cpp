#include "wcong/error.hpp"

namespace wcong {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::structural: return "structural";
    case Errc::unit_division: return "unit-division";
    case Errc::substitution: return "substitution";
    case Errc::unsupported_map: return "unsupported-map";
    case Errc::insufficient_order: return "insufficient-order";
    case Errc::degenerate_jet: return "degenerate-jet";
    case Errc::not_umbilic: return "not-umbilic";
    case Errc::normalization: return "normalization";
    case Errc::solver: return "solver";
    case Errc::unsupported_branch: return "unsupported-branch";
    case Errc::not_applicable: return "not-applicable";
    case Errc::class_violation: return "class-violation";
    case Errc::precondition: return "precondition";
    case Errc::domain: return "domain";
    case Errc::consistency: return "consistency";
    case Errc::parse: return "parse";
    case Errc::io: return "io";
  }
  return "unknown";
}

}  // namespace wcong
