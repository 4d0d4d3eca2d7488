#include <map>
#include <numeric>

#include "slicecert/errors.hpp"
#include "slicecert/groups/finite_group.hpp"

namespace slicecert::groups {

namespace {

// Breadth-first closure under right multiplication by generators. Row a of
// the table is filled along the BFS tree: a*b = (a*parent(b))*gen(b).
template <typename T, typename Mul>
FiniteGroup closure_impl(const std::vector<T>& gens, const T& identity, Mul mul, int max_order) {
  std::vector<T> elems{identity};
  std::map<T, int> index{{identity, 0}};
  std::vector<int> parent{-1}, via{-1};
  std::vector<std::vector<int>> right;  // right[g][a] = a * gens[g]
  right.assign(gens.size(), {});
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      T prod = mul(elems[head], gens[g]);
      auto [it, inserted] = index.emplace(prod, static_cast<int>(elems.size()));
      if (inserted) {
        if (static_cast<int>(elems.size()) >= max_order) {
          throw InputError("group closure exceeds order bound " + std::to_string(max_order));
        }
        elems.push_back(prod);
        parent.push_back(static_cast<int>(head));
        via.push_back(static_cast<int>(g));
      }
      right[g].resize(elems.size(), -1);
      right[g][head] = it->second;
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    table[a][0] = a;
    for (int b = 1; b < n; ++b) table[a][b] = right[via[b]][table[a][parent[b]]];
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const T& e : elems) labels.push_back(to_string(e));
  return FiniteGroup(std::move(table), std::move(labels));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[static_cast<std::size_t>(p[x])];
  return r;
}

Permutation cycle(std::size_t n, std::vector<int> points) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) p[points[i]] = points[(i + 1) % points.size()];
  return p;
}

}  // namespace

FiniteGroup closure(const std::vector<Permutation>& gens, int max_order) {
  std::size_t n = 0;
  for (const auto& g : gens) {
    if (n != 0 && g.size() != n) throw InputError("permutations of different degrees");
    n = g.size();
    std::vector<bool> seen(n, false);
    for (int x : g) {
      if (x < 0 || x >= static_cast<int>(n) || seen[x]) throw InputError("not a permutation");
      seen[x] = true;
    }
  }
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  return closure_impl(gens, id, compose, max_order);
}

FiniteGroup closure(const std::vector<MatrixF5>& gens, int max_order) {
  for (const auto& m : gens) {
    for (int e : m)
      if (e < 0 || e > 4) throw InputError("matrix entry outside F5");
    if (((m[0] * m[3] - m[1] * m[2]) % 5 + 5) % 5 == 0) throw InputError("singular matrix over F5");
  }
  auto mul = [](const MatrixF5& a, const MatrixF5& b) {
    return MatrixF5{(a[0] * b[0] + a[1] * b[2]) % 5, (a[0] * b[1] + a[1] * b[3]) % 5,
                    (a[2] * b[0] + a[3] * b[2]) % 5, (a[2] * b[1] + a[3] * b[3]) % 5};
  };
  return closure_impl(gens, MatrixF5{1, 0, 0, 1}, mul, max_order);
}

FiniteGroup closure(const std::vector<Quaternion>& gens, int max_order) {
  Quaternion one{{1, 0}, {}, {}, {}};
  for (const auto& q : gens) {
    if (!(q.norm() == QuadraticNumber{1, 0})) throw InputError("quaternion generator is not a unit");
  }
  return closure_impl(gens, one, [](const Quaternion& a, const Quaternion& b) { return a * b; },
                      max_order);
}

FiniteGroup trivial_group() {
  FiniteGroup g;
  g.set_name("1");
  return g;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  FiniteGroup g = n == 1 ? trivial_group() : closure({cycle(n, pts)});
  g.set_name("C" + std::to_string(n));
  return g;
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 7) throw InputError("symmetric group degree must be in 1..7");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<int> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    gens = {cycle(n, {0, 1}), cycle(n, pts)};
  }
  FiniteGroup g = gens.empty() ? trivial_group() : closure(gens);
  g.set_name("S" + std::to_string(n));
  return g;
}

FiniteGroup alternating_group(int n) {
  if (n < 1 || n > 7) throw InputError("alternating group degree must be in 1..7");
  std::vector<Permutation> gens;
  for (int i = 0; i + 2 < n; ++i) gens.push_back(cycle(n, {i, i + 1, i + 2}));
  FiniteGroup g = gens.empty() ? trivial_group() : closure(gens);
  g.set_name("A" + std::to_string(n));
  return g;
}

FiniteGroup sl2_f5() {
  FiniteGroup g = closure(std::vector<MatrixF5>{{0, 4, 1, 0}, {1, 1, 0, 1}});
  g.set_name("SL(2,5)");
  return g;
}

}  // namespace slicecert::groups
