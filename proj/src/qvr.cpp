#include "clusterscope/qvr.hpp"

#include <set>
#include <sstream>
#include <utility>

namespace clusterscope {

namespace {

bool next_content_line(std::istream& in, std::string* out, int* line) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++*line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = raw.find_last_not_of(" \t\r");
    *out = raw.substr(first, last - first + 1);
    return true;
  }
  return false;
}

long long parse_int(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + token + "'", line);
  }
}

}  // namespace

NamedQuiver read_qvr(std::istream& in, int* line_counter) {
  int local = 0;
  int& line = line_counter ? *line_counter : local;
  std::string text;
  auto expect = [&](const char* what) {
    if (!next_content_line(in, &text, &line))
      throw ParseError(std::string("unexpected end of input, expected ") + what, line);
    std::istringstream s(text);
    std::string keyword;
    s >> keyword;
    if (keyword != what) throw ParseError(std::string("expected '") + what + "'", line);
    std::string rest;
    std::getline(s, rest);
    const auto first = rest.find_first_not_of(' ');
    return first == std::string::npos ? std::string() : rest.substr(first);
  };

  NamedQuiver out;
  out.name = expect("quiver");
  const long long n = parse_int(expect("vertices"), line);
  if (n < 0 || n > 4096) throw ParseError("vertex count out of range", line);

  std::vector<Index> frozen;
  {
    std::istringstream s(expect("frozen"));
    std::string token;
    bool none = false;
    std::set<long long> seen;
    while (s >> token) {
      if (token == "none") {
        none = true;
        continue;
      }
      const long long v = parse_int(token, line);
      if (v < 1 || v > n) throw ParseError("frozen vertex " + token + " out of range", line);
      if (!seen.insert(v).second) throw ParseError("frozen vertex " + token + " repeated", line);
      frozen.push_back(static_cast<Index>(v - 1));
    }
    if (none && !frozen.empty()) throw ParseError("'none' mixed with frozen vertices", line);
  }
  expect("arrows");

  std::vector<Arrow> arrows;
  std::set<std::pair<long long, long long>> pairs;
  while (true) {
    if (!next_content_line(in, &text, &line)) throw ParseError("missing 'end'", line);
    if (text == "end") break;
    std::istringstream s(text);
    std::string a, b, m, extra;
    if (!(s >> a >> b >> m) || (s >> extra)) throw ParseError("arrow line needs 'i j m'", line);
    const long long i = parse_int(a, line), j = parse_int(b, line), mult = parse_int(m, line);
    if (i < 1 || i > n || j < 1 || j > n) throw ParseError("arrow endpoint out of range", line);
    if (i == j) throw ParseError("loop at vertex " + a, line);
    if (mult <= 0) throw ParseError("arrow multiplicity must be positive", line);
    if (pairs.count({i, j})) throw ParseError("duplicate pair " + a + " " + b, line);
    if (pairs.count({j, i})) throw ParseError("pair " + a + " " + b + " listed in both directions", line);
    pairs.insert({i, j});
    arrows.push_back({static_cast<Index>(i - 1), static_cast<Index>(j - 1), mult});
  }
  try {
    out.quiver = IceQuiver::from_arrows(static_cast<Index>(n), arrows, frozen);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line);
  }
  return out;
}

NamedQuiver parse_qvr(std::string_view text) {
  std::istringstream in{std::string(text)};
  int line = 0;
  NamedQuiver q = read_qvr(in, &line);
  std::string rest;
  if (next_content_line(in, &rest, &line)) throw ParseError("trailing content after 'end'", line);
  return q;
}

std::string to_qvr(const IceQuiver& q, std::string_view name) {
  std::ostringstream out;
  out << "quiver " << (name.empty() ? "unnamed" : name) << "\n";
  out << "vertices " << q.size() << "\n";
  out << "frozen";
  const auto frozen = q.frozen_vertices();
  if (frozen.empty()) out << " none";
  for (Index v : frozen) out << ' ' << v + 1;
  out << "\narrows\n";
  for (Index i = 0; i < q.size(); ++i)
    for (Index j = 0; j < q.size(); ++j)
      if (q(i, j) > 0) out << i + 1 << ' ' << j + 1 << ' ' << q(i, j) << "\n";
  out << "end\n";
  return out.str();
}

}  // namespace clusterscope
