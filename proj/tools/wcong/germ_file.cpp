#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "cli.hpp"

namespace wcong::cli {

namespace {

struct Entry {
  int comp;  // 0: xi1, 1: xi2
  int j, k;
  Rational value;
};

[[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(Errc::parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::optional<int> parse_index(std::string_view s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

CongruenceGerm assemble(std::optional<int> order, const std::vector<Entry>& entries,
                        const std::vector<std::pair<std::size_t, std::size_t>>& where) {
  int cap = 2;
  for (const auto& e : entries) cap = std::max(cap, e.j + e.k);
  if (order) cap = *order;
  CongruenceGerm germ{Series2(cap), Series2(cap)};
  std::map<std::tuple<int, int, int>, bool> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.j + e.k > cap) {
      fail_at(where[i].first, where[i].second, "slot order " + std::to_string(e.j + e.k) + " exceeds order " +
                                                   std::to_string(cap));
    }
    if (seen[{e.comp, e.j, e.k}]) fail_at(where[i].first, where[i].second, "duplicate slot");
    seen[{e.comp, e.j, e.k}] = true;
    (e.comp == 0 ? germ.xi1 : germ.xi2).set_derivative(e.j, e.k, e.value);
  }
  return germ;
}

}  // namespace

int exit_code(Errc code) {
  switch (code) {
    case Errc::parse:
    case Errc::insufficient_order:
      return kParse;
    case Errc::solver:
    case Errc::consistency:
      return kSolver;
    case Errc::io:
      return kIo;
    default:
      return kDomain;
  }
}

CongruenceGerm parse_germ_text(std::string_view text) {
  std::optional<int> order;
  std::vector<Entry> entries;
  std::vector<std::pair<std::size_t, std::size_t>> where;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<std::string_view, std::size_t>> tokens;  // token, 1-based column
    for (std::size_t i = 0; i < line.size();) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      tokens.push_back({line.substr(i, j - i), i + 1});
      i = j;
    }
    if (tokens.empty()) continue;

    const auto& [head, col] = tokens[0];
    if (head == "order") {
      if (tokens.size() != 2) fail_at(line_no, col, "expected 'order N'");
      if (order) fail_at(line_no, col, "duplicate order line");
      const auto n = parse_index(tokens[1].first);
      if (!n) fail_at(line_no, tokens[1].second, "bad order '" + std::string(tokens[1].first) + "'");
      order = *n;
    } else if (head == "xi1" || head == "xi2") {
      if (tokens.size() != 4) fail_at(line_no, col, "expected '" + std::string(head) + " j k value'");
      const auto j = parse_index(tokens[1].first);
      if (!j) fail_at(line_no, tokens[1].second, "bad index '" + std::string(tokens[1].first) + "'");
      const auto k = parse_index(tokens[2].first);
      if (!k) fail_at(line_no, tokens[2].second, "bad index '" + std::string(tokens[2].first) + "'");
      const auto v = parse_rational(tokens[3].first);
      if (!v) fail_at(line_no, tokens[3].second, "bad rational '" + std::string(tokens[3].first) + "'");
      entries.push_back({head == "xi1" ? 0 : 1, *j, *k, *v});
      where.push_back({line_no, col});
    } else {
      fail_at(line_no, col, "unknown keyword '" + std::string(head) + "'");
    }
  }
  return assemble(order, entries, where);
}

CongruenceGerm parse_germ_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse, std::string("json: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::parse, "json: top level must be an object");
  std::optional<int> order;
  if (doc.contains("order")) {
    if (!doc["order"].is_number_unsigned()) throw Error(Errc::parse, "json: order must be a non-negative integer");
    order = doc["order"].get<int>();
  }
  std::vector<Entry> entries;
  std::vector<std::pair<std::size_t, std::size_t>> where;
  for (int comp = 0; comp < 2; ++comp) {
    const char* key = comp == 0 ? "xi1" : "xi2";
    if (!doc.contains(key)) continue;
    const auto& list = doc[key];
    if (!list.is_array()) throw Error(Errc::parse, std::string("json: ") + key + " must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& t = list[i];
      const std::string at = std::string("json: ") + key + "[" + std::to_string(i) + "]";
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned()) {
        throw Error(Errc::parse, at + ": expected [j, k, value]");
      }
      std::optional<Rational> v;
      if (t[2].is_string()) v = parse_rational(t[2].get<std::string>());
      if (t[2].is_number_integer()) v = parse_rational(std::to_string(t[2].get<long long>()));
      if (!v) throw Error(Errc::parse, at + ": value must be an integer or a \"num/den\" string");
      entries.push_back({comp, t[0].get<int>(), t[1].get<int>(), *v});
      where.push_back({0, i});
    }
  }
  try {
    return assemble(order, entries, where);
  } catch (const Error& e) {
    throw Error(Errc::parse, std::string("json: ") + e.what());
  }
}

std::string format_germ_text(const CongruenceGerm& germ) {
  std::ostringstream out;
  out << "order " << germ.cap() << '\n';
  for (int comp = 0; comp < 2; ++comp) {
    const Series2& s = comp == 0 ? germ.xi1 : germ.xi2;
    for (int n = 0; n <= s.cap(); ++n) {
      for (int k = 0; k <= n; ++k) {
        const Rational v = s.derivative(n - k, k);
        if (sgn(v) != 0) out << (comp == 0 ? "xi1 " : "xi2 ") << n - k << ' ' << k << ' ' << to_string(v) << '\n';
      }
    }
  }
  return out.str();
}

std::string format_germ_json(const CongruenceGerm& germ) {
  nlohmann::ordered_json doc;
  doc["order"] = germ.cap();
  for (int comp = 0; comp < 2; ++comp) {
    const Series2& s = comp == 0 ? germ.xi1 : germ.xi2;
    auto list = nlohmann::ordered_json::array();
    for (int n = 0; n <= s.cap(); ++n) {
      for (int k = 0; k <= n; ++k) {
        const Rational v = s.derivative(n - k, k);
        if (sgn(v) != 0) list.push_back({n - k, k, to_string(v)});
      }
    }
    doc[comp == 0 ? "xi1" : "xi2"] = list;
  }
  return doc.dump(2) + "\n";
}

CongruenceGerm read_germ(const std::string& path, bool json) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return json ? parse_germ_json(buf.str()) : parse_germ_text(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace wcong::cli
