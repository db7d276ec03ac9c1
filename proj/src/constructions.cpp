#include "oturan/constructions.hpp"

#include <numeric>

namespace oturan {

long long turan_formula(int n, int k) {
  if (n < 1 || k < 1)
    fail(Errc::domain_error, "turan_formula needs n >= 1 and k >= 1");
  long long m = n + k - 1;
  return m * m / 4;
}

Bounds turan_bounds(int n, int k) {
  if (k < 4)
    fail(Errc::domain_error,
         "bounds apply to k >= 4 (smaller k is solved exactly)");
  if (n < 3 * k + 1)
    fail(Errc::domain_error, "bounds apply to n >= 3k+1");
  Bounds b;
  b.lower = turan_formula(n, k);
  b.upper = b.lower + (long long)(k - 1) * n;
  return b;
}

OrientedGraph circulant_inregular(int t, int r) {
  if (r < 0 || t < 1) fail(Errc::domain_error, "need t >= 1 and r >= 0");
  if (t < 2 * r + 1)
    fail(Errc::domain_error,
         "circulant with in-degree " + std::to_string(r) + " needs at least " +
             std::to_string(2 * r + 1) + " vertices to stay oriented");
  std::vector<Arc> arcs;
  arcs.reserve((size_t)t * r);
  for (int i = 0; i < t; ++i)
    for (int d = 1; d <= r; ++d) arcs.emplace_back(i, (i - d + t * 2) % t);
  return OrientedGraph::build(t, arcs);
}

YScheme YScheme::cycles(std::vector<int> sizes) {
  YScheme s;
  s.kind = Kind::cycles;
  s.blocks = std::move(sizes);
  return s;
}

YScheme YScheme::parse(const std::string& text) {
  if (text == "circulant") return {};
  const std::string prefix = "cycles:";
  if (text.rfind(prefix, 0) != 0)
    fail(Errc::scheme_error,
         "unknown scheme '" + text + "' (want circulant or cycles:<a,b,...>)");
  std::vector<int> sizes;
  size_t pos = prefix.size();
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty())
      fail(Errc::scheme_error, "empty block size in scheme '" + text + "'");
    int value = 0;
    for (char c : item) {
      if (c < '0' || c > '9')
        fail(Errc::scheme_error,
             "bad block size '" + item + "' in scheme '" + text + "'");
      value = value * 10 + (c - '0');
      if (value > 1000000)
        fail(Errc::scheme_error, "block size too large in '" + text + "'");
    }
    sizes.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (sizes.empty())
    fail(Errc::scheme_error, "scheme '" + text + "' lists no blocks");
  return cycles(std::move(sizes));
}

std::string YScheme::to_string() const {
  if (kind == Kind::circulant) return "circulant";
  std::string out = "cycles:";
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(blocks[i]);
  }
  return out;
}

OrientedGraph construct_lower(const ConstructionParams& p) {
  int n = p.n, k = p.k;
  if (n < 1 || k < 1) fail(Errc::domain_error, "need n >= 1 and k >= 1");
  int s;
  if (p.split) {
    s = *p.split;
    if (s < 0 || s > n)
      fail(Errc::domain_error, "split " + std::to_string(s) +
                                   " out of range for order " +
                                   std::to_string(n));
    if (n - s < 2 * k - 1)
      fail(Errc::domain_error,
           "split leaves " + std::to_string(n - s) +
               " vertices for Y; the in-regular part needs at least " +
               std::to_string(2 * k - 1));
  } else {
    if (n < 3 * k + 1)
      fail(Errc::domain_error,
           "default construction needs n >= 3k+1 = " +
               std::to_string(3 * k + 1) +
               "; give an explicit split to build smaller instances");
    s = (n - k + 1) / 2;
  }
  int t = n - s;

  std::vector<int> blocks;
  if (p.y_scheme.kind == YScheme::Kind::circulant) {
    blocks = {t};
  } else {
    blocks = p.y_scheme.blocks;
    if (blocks.empty()) fail(Errc::scheme_error, "scheme lists no blocks");
    long long total = 0;
    for (int b : blocks) {
      if (b < 2 * k - 1)
        fail(Errc::scheme_error,
             "block of size " + std::to_string(b) +
                 " cannot be in-degree " + std::to_string(k - 1) +
                 "-regular and oriented (needs >= " +
                 std::to_string(2 * k - 1) + ")");
      total += b;
    }
    if (total != t)
      fail(Errc::scheme_error, "blocks cover " + std::to_string(total) +
                                   " vertices but Y has " + std::to_string(t));
  }

  std::vector<Arc> arcs;
  arcs.reserve((size_t)s * t + (size_t)(k - 1) * t);
  for (int x = 0; x < s; ++x)
    for (int y = s; y < n; ++y) arcs.emplace_back(x, y);
  int base = s;
  for (int len : blocks) {
    for (int i = 0; i < len; ++i)
      for (int d = 1; d <= k - 1; ++d)
        arcs.emplace_back(base + i, base + (i - d + 2 * len) % len);
    base += len;
  }
  return OrientedGraph::build(n, arcs);
}

OrientedGraph extremal_member(int n, int k, const YScheme& scheme,
                              std::optional<int> split) {
  int lo, hi;
  if (k == 2) {
    if (n < 16)
      fail(Errc::domain_error, "the k=2 family is characterized for n >= 16");
    lo = (n - 1) / 2;
    hi = n / 2;
  } else if (k == 3) {
    if (n < 40)
      fail(Errc::domain_error, "the k=3 family is characterized for n >= 40");
    lo = n / 2 - 1;
    hi = (n + 1) / 2 - 1;
  } else {
    fail(Errc::domain_error,
         "extremal families are characterized for k = 2 and k = 3 only");
  }
  int s = split ? *split : (n - k + 1) / 2;
  if (s < lo || s > hi)
    fail(Errc::domain_error, "X size " + std::to_string(s) +
                                 " outside the family window [" +
                                 std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
  ConstructionParams p;
  p.n = n;
  p.k = k;
  p.split = s;
  p.y_scheme = scheme;
  return construct_lower(p);
}

namespace {

// Figure digraphs. Shared vertex roles, reading the figures top to
// bottom: leaves w1,w2(,w3), then spokes u1..u3(,u4), then center v.
// Exact maps:
//   H1/H2/H3: w1=0 w2=1 u1=2 u2=3 u3=4 v=5
//   H4:       w1=0 w2=1 w3=2 u1=3 u2=4 u3=5 u4=6 v=7
//   H5/H6:    w1=0 w2=1 u1=2 u2=3 u3=4 u4=5 v=6
//   H7:       w1=0 w2=1 w3=2 u1=3 u2=4 u3=5 v=6
OrientedGraph make_h(int which) {
  switch (which) {
    case 1:
      return OrientedGraph::build(6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                      {1, 4}, {2, 5}, {3, 5}, {4, 5}});
    case 2:
    case 3:
      // The nine arcs above plus the directed triangle u1->u2->u3->u1.
      return OrientedGraph::build(
          6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5},
              {4, 5}, {2, 3}, {3, 4}, {4, 2}});
    case 4:
      // Triangle pattern plus a fourth spoke u4 fed by its own leaf w3.
      return OrientedGraph::build(
          8, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {3, 7}, {4, 7},
              {5, 7}, {3, 4}, {4, 5}, {5, 3}, {6, 7}, {2, 6}});
    case 5:
      // Fourth spoke u4 fed by u3 doubling as its leaf.
      return OrientedGraph::build(
          7, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 6}, {3, 6},
              {4, 6}, {2, 3}, {3, 4}, {4, 2}, {5, 6}, {4, 5}});
    case 6:
      // Fourth spoke u4 fed by w2 doubling as its leaf.
      return OrientedGraph::build(
          7, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 6}, {3, 6},
              {4, 6}, {2, 3}, {3, 4}, {4, 2}, {5, 6}, {1, 5}});
    case 7:
      // w1 promoted to a fourth spoke, fed by a new leaf w3.
      return OrientedGraph::build(
          7, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {3, 6}, {4, 6},
              {5, 6}, {3, 4}, {4, 5}, {5, 3}, {2, 0}, {0, 6}});
  }
  fail(Errc::unknown_fixture, "no such figure digraph");
}

}  // namespace

OrientedGraph fixture(FixtureKind kind, int k) {
  switch (kind) {
    case FixtureKind::h1: return make_h(1);
    case FixtureKind::h2: return make_h(2);
    case FixtureKind::h3: return make_h(3);
    case FixtureKind::h4: return make_h(4);
    case FixtureKind::h5: return make_h(5);
    case FixtureKind::h6: return make_h(6);
    case FixtureKind::h7: return make_h(7);
    case FixtureKind::in_star: {
      // Spokes 0..k-1, center k.
      if (k < 1) fail(Errc::domain_error, "star needs k >= 1");
      std::vector<Arc> arcs;
      for (int i = 0; i < k; ++i) arcs.emplace_back(i, k);
      return OrientedGraph::build(k + 1, arcs);
    }
    case FixtureKind::in_star_subdivision: {
      // Spokes 0..k-1, center k, leaves k+1..2k; leaf k+1+i feeds spoke i.
      if (k < 1) fail(Errc::domain_error, "star needs k >= 1");
      std::vector<Arc> arcs;
      for (int i = 0; i < k; ++i) {
        arcs.emplace_back(i, k);
        arcs.emplace_back(k + 1 + i, i);
      }
      return OrientedGraph::build(2 * k + 1, arcs);
    }
  }
  fail(Errc::unknown_fixture, "unhandled fixture kind");
}

OrientedGraph fixture_by_name(const std::string& name) {
  if (name.size() == 2 && name[0] == 'H' && name[1] >= '1' && name[1] <= '7')
    return make_h(name[1] - '0');
  for (const char* prefix : {"star:", "subdiv:"}) {
    std::string p = prefix;
    if (name.rfind(p, 0) != 0) continue;
    std::string rest = name.substr(p.size());
    if (rest.empty() || rest.size() > 3) break;
    int k = 0;
    for (char c : rest) {
      if (c < '0' || c > '9') { k = -1; break; }
      k = k * 10 + (c - '0');
    }
    if (k < 1) break;
    return fixture(p == "star:" ? FixtureKind::in_star
                                : FixtureKind::in_star_subdivision,
                   k);
  }
  fail(Errc::unknown_fixture,
       "unknown fixture '" + name + "' (want H1..H7, star:K, or subdiv:K)");
}

}  // namespace oturan
