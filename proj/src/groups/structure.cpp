#include <algorithm>
#include <functional>
#include <set>

#include "slicecert/errors.hpp"
#include "slicecert/groups/finite_group.hpp"

namespace slicecert::groups {

std::vector<int> StructureReport::class_sizes() const {
  std::vector<int> sizes;
  for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> elems{0};
  in[0] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int s : gens) {
      int p = g.mul(elems[head], s);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

StructureReport structure_report(const FiniteGroup& g) {
  if (g.order() > 1000) throw InputError("structure_report is limited to order 1000");
  const int n = g.order();
  StructureReport r;
  r.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (r.class_of[x] >= 0) continue;
    std::set<int> cls;
    for (int h = 0; h < n; ++h) cls.insert(g.conj(h, x));
    for (int y : cls) r.class_of[y] = static_cast<int>(r.classes.size());
    r.classes.emplace_back(cls.begin(), cls.end());
  }
  for (int x = 0; x < n; ++x) {
    if (r.classes[r.class_of[x]].size() == 1) r.center.push_back(x);
    if (g.element_order(x) == 2) ++r.involutions;
  }

  // Every normal subgroup is a join of normal closures of classes.
  std::set<std::vector<int>> normals{{0}};
  std::vector<std::vector<int>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& base : frontier) {
      std::vector<bool> in(n, false);
      for (int x : base) in[x] = true;
      for (const auto& cls : r.classes) {
        if (in[cls.front()]) continue;
        std::vector<int> gens = cls;
        gens.insert(gens.end(), base.begin(), base.end());
        std::vector<int> joined = generated_subgroup(g, gens);
        if (normals.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  r.normal_subgroups.assign(normals.begin(), normals.end());
  std::stable_sort(r.normal_subgroups.begin(), r.normal_subgroups.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  r.simple = n > 1 && r.normal_subgroups.size() == 2;

  for (const auto& normal : r.normal_subgroups) {
    if (normal.size() == 1 || static_cast<int>(normal.size()) == n) continue;
    Quotient q;
    q.kernel_order = static_cast<int>(normal.size());
    q.projection.assign(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
      if (q.projection[x] >= 0) continue;
      for (int k : normal) q.projection[g.mul(x, k)] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
    const int m = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> labels;
    for (int a = 0; a < m; ++a) {
      labels.push_back(g.label(reps[a]) + "N");
      for (int b = 0; b < m; ++b) table[a][b] = q.projection[g.mul(reps[a], reps[b])];
    }
    q.group = FiniteGroup(std::move(table), std::move(labels),
                          g.name() + "/N" + std::to_string(q.kernel_order));
    r.proper_quotients.push_back(std::move(q));
  }
  return r;
}

namespace {

// Greedy generating set, largest element orders first.
std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> elems(g.order());
  for (int i = 0; i < g.order(); ++i) elems[i] = i;
  std::stable_sort(elems.begin(), elems.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  std::vector<int> sub{0};
  for (int x : elems) {
    if (static_cast<int>(sub.size()) == g.order()) break;
    if (std::binary_search(sub.begin(), sub.end(), x)) continue;
    gens.push_back(x);
    sub = generated_subgroup(g, gens);
  }
  return gens;
}

}  // namespace

std::optional<std::vector<int>> iso_check(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  StructureReport ra = structure_report(a), rb = structure_report(b);
  auto signature = [](const FiniteGroup& g, const StructureReport& r) {
    std::vector<std::pair<int, int>> sig;
    for (const auto& c : r.classes) sig.emplace_back(g.element_order(c.front()), c.size());
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  if (signature(a, ra) != signature(b, rb)) return std::nullopt;

  std::vector<int> gens = generating_set(a);
  // BFS words: every element of a as parent * gens[via].
  std::vector<int> parent(n, -1), via(n, -1), order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int p = a.mul(order[head], gens[k]);
      if (!seen[p]) {
        seen[p] = true;
        parent[p] = order[head];
        via[p] = static_cast<int>(k);
        order.push_back(p);
      }
    }
  }

  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    int ord = a.element_order(gens[k]);
    std::size_t size = ra.classes[ra.class_of[gens[k]]].size();
    for (int y = 0; y < n; ++y) {
      if (b.element_order(y) == ord && rb.classes[rb.class_of[y]].size() == size) {
        candidates[k].push_back(y);
      }
    }
  }

  std::vector<int> images(gens.size());
  std::vector<int> phi(n);
  auto try_map = [&]() -> bool {
    phi[0] = 0;
    std::vector<bool> hit(n, false);
    hit[0] = true;
    for (std::size_t i = 1; i < order.size(); ++i) {
      int x = order[i];
      phi[x] = b.mul(phi[parent[x]], images[via[x]]);
      if (hit[phi[x]]) return false;
      hit[phi[x]] = true;
    }
    for (int x = 0; x < n; ++x)
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (phi[a.mul(x, gens[k])] != b.mul(phi[x], images[k])) return false;
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == gens.size()) return try_map();
    for (int y : candidates[k]) {
      images[k] = y;
      if (search(k + 1)) return true;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return phi;
}

std::string to_string(SU2Verdict v) {
  switch (v) {
    case SU2Verdict::kNoNontrivialRep: return "no-nontrivial-rep";
    case SU2Verdict::kEmbedsPossible: return "embeds-possible";
    case SU2Verdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

SU2Verdict su2_obstruction(const FiniteGroup& g, const StructureReport& report) {
  if (g.order() == 1 || report.involutions <= 1) return SU2Verdict::kEmbedsPossible;
  if (report.simple) return SU2Verdict::kNoNontrivialRep;
  return SU2Verdict::kInconclusive;
}

}  // namespace slicecert::groups
