#include "oturan/arclist.hpp"

#include <string>
#include <vector>

namespace oturan {

namespace {

struct Line {
  int number = 0;  // 1-based
  std::string text;
};

[[noreturn]] void syntax_error(int line, int column, const std::string& what) {
  fail(Errc::syntax_error, "line " + std::to_string(line) + ", column " +
                               std::to_string(column) + ": " + what);
}

// Exactly two non-negative integers per data line.
std::pair<long long, long long> parse_two(const Line& line) {
  long long values[2];
  size_t pos = 0;
  const std::string& s = line.text;
  for (int which = 0; which < 2; ++which) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos >= s.size())
      syntax_error(line.number, (int)pos + 1, "expected a number");
    if (s[pos] < '0' || s[pos] > '9')
      syntax_error(line.number, (int)pos + 1,
                   std::string("unexpected character '") + s[pos] + "'");
    long long value = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      value = value * 10 + (s[pos] - '0');
      if (value > 2000000000LL)
        syntax_error(line.number, (int)pos + 1, "number too large");
      ++pos;
    }
    values[which] = value;
  }
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  if (pos < s.size())
    syntax_error(line.number, (int)pos + 1, "trailing characters");
  return {values[0], values[1]};
}

}  // namespace

OrientedGraph parse_arclist(const std::string& text) {
  std::vector<Line> data;
  {
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string::npos) end = text.size();
      ++number;
      std::string line = text.substr(pos, end - pos);
      pos = end + 1;
      size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;  // blank
      if (line[first] == '#') continue;          // comment
      if (!line.empty() && line.back() == '\r') line.pop_back();
      data.push_back({number, line});
    }
  }
  if (data.empty()) fail(Errc::syntax_error, "line 1, column 1: empty input");

  auto [n, m] = parse_two(data[0]);
  if (n > 1000000)
    syntax_error(data[0].number, 1, "vertex count too large");
  if ((long long)data.size() - 1 != m)
    fail(Errc::count_mismatch,
         "header declares " + std::to_string(m) + " arcs but " +
             std::to_string(data.size() - 1) + " arc lines follow");

  std::vector<Arc> arcs;
  arcs.reserve((size_t)m);
  for (size_t i = 1; i < data.size(); ++i) {
    auto [u, v] = parse_two(data[i]);
    arcs.emplace_back((int)u, (int)v);
  }
  return OrientedGraph::build((int)n, arcs);
}

std::string serialize_arclist(const OrientedGraph& g) {
  std::string out =
      std::to_string(g.order()) + " " + std::to_string(g.arc_count()) + "\n";
  for (auto [u, v] : g.arcs())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace oturan
