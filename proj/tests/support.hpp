#pragma once
// Shared fixtures and independent oracles for the test suites. Nothing here
// calls the library routine it is used to check.

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "slicecert/diagrams.hpp"
#include "slicecert/groups/finite_group.hpp"

namespace testsupport {

using slicecert::diagrams::Letter;
using slicecert::diagrams::PlatWord;

inline PlatWord unknot() { return PlatWord{2, {}}; }
inline PlatWord trefoil() { return PlatWord{4, {{2, 1}, {2, 1}, {2, 1}}}; }
inline PlatWord figure8() { return PlatWord{4, {{2, 1}, {2, 1}, {1, -1}, {2, 1}}}; }
inline PlatWord t35() {
  PlatWord p{6, {{2, 1}, {3, 1}, {4, -1}, {3, -1}, {2, -1}, {1, -1}}};
  for (int i = 0; i < 5; ++i) {
    p.word.push_back({1, 1});
    p.word.push_back({2, 1});
  }
  for (Letter l : {Letter{1, 1}, Letter{2, 1}, Letter{3, 1}, Letter{4, 1}, Letter{3, -1}, Letter{2, -1}}) {
    p.word.push_back(l);
  }
  return p;
}

struct NamedKnot {
  std::string name;
  PlatWord plat;
  int det;
};

inline std::vector<NamedKnot> corpus() {
  return {{"unknot", unknot(), 1}, {"trefoil", trefoil(), 3}, {"figure8", figure8(), 5}, {"t35", t35(), 1}};
}

/// |det| of the Fox colouring matrix 2·over - in - out, built straight from
/// PD crossings with its own arc bookkeeping and exact rational elimination.
inline boost::multiprecision::cpp_int colouring_determinant(const slicecert::diagrams::PDCode& pd) {
  using boost::multiprecision::cpp_rational;
  const int n = static_cast<int>(pd.crossings.size());
  if (n == 0) return 1;
  const int edges = 2 * n;
  std::vector<int> arc(edges + 1);
  std::iota(arc.begin(), arc.end(), 0);
  std::function<int(int)> root = [&](int e) { return arc[e] == e ? e : arc[e] = root(arc[e]); };
  for (const auto& c : pd.crossings) arc[root(c.edges[1])] = root(c.edges[3]);
  std::map<int, int> index;
  for (int e = 1; e <= edges; ++e) index.emplace(root(e), static_cast<int>(index.size()));
  const int arcs = static_cast<int>(index.size());
  std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(arcs, 0));
  for (int i = 0; i < n; ++i) {
    const auto& c = pd.crossings[i];
    m[i][index[root(c.edges[1])]] += 2;
    m[i][index[root(c.edges[0])]] -= 1;
    m[i][index[root(c.edges[2])]] -= 1;
  }
  const int k = std::min(n, arcs) - 1;
  cpp_rational det = 1;
  std::vector<std::vector<cpp_rational>> a(k, std::vector<cpp_rational>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i][j] = m[i][j];
  for (int col = 0; col < k; ++col) {
    int piv = col;
    while (piv < k && a[piv][col] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < k; ++r) {
      cpp_rational f = a[r][col] / a[col][col];
      for (int j = col; j < k; ++j) a[r][j] -= f * a[col][j];
    }
  }
  boost::multiprecision::cpp_int out = boost::multiprecision::numerator(det);
  return out < 0 ? -out : out;
}

/// Homomorphism count by enumerating every assignment of generators.
inline std::uint64_t brute_force_homs(const slicecert::groups::GroupPresentation& pres,
                                      const slicecert::groups::FiniteGroup& g) {
  const int n = pres.generators;
  std::vector<int> value(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : pres.relators) {
      int acc = 0;
      for (int l : r) acc = g.mul(acc, l > 0 ? value[l - 1] : g.inv(value[-l - 1]));
      if (acc != 0) {
        ok = false;
        break;
      }
    }
    count += ok;
    int i = 0;
    while (i < n && ++value[i] == g.order()) value[i++] = 0;
    if (i == n) break;
  }
  return count;
}

/// Twist vectors with even entries in [-range, range], in a fixed order.
inline std::vector<std::vector<int>> even_twist_battery(int bridges, int range) {
  std::vector<std::vector<int>> out{{}};
  for (int b = 0; b < bridges; ++b) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out)
      for (int t = -range; t <= range; t += 2) {
        auto w = v;
        w.push_back(t);
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

}  // namespace testsupport
