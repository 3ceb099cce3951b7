#include "wcong/rational.hpp"

#include <cctype>
#include <vector>

namespace wcong {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;

  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  Rational value(n, d);
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

Integer factorial(int n) {
  thread_local std::vector<Integer> local{Integer(1)};
  while (static_cast<int>(local.size()) <= n) {
    local.push_back(local.back() * static_cast<unsigned long>(local.size()));
  }
  return local[static_cast<std::size_t>(n)];
}

bool is_natural(const Rational& value) { return value.get_den() == 1 && sgn(value) > 0; }

}  // namespace wcong
