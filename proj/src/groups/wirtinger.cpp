#include <algorithm>
#include <numeric>

#include "slicecert/errors.hpp"
#include "slicecert/groups/presentation.hpp"

namespace slicecert::groups {

std::vector<int> wirtinger_arc_of_edge(const diagrams::PDCode& pd) {
  diagrams::check_pd(pd);
  const int edges = pd.edge_count();
  if (edges == 0) return {0, 1};
  std::vector<int> parent(edges + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : pd.crossings) parent[find(c.edges[1])] = find(c.edges[3]);
  std::vector<int> arc(edges + 1, 0), root_arc(edges + 1, 0);
  int next = 0;
  for (int e = 1; e <= edges; ++e) {
    const int r = find(e);
    if (!root_arc[r]) root_arc[r] = ++next;
    arc[e] = root_arc[r];
  }
  return arc;
}

GroupPresentation wirtinger(const diagrams::PDCode& pd) {
  const std::vector<int> arc = wirtinger_arc_of_edge(pd);
  GroupPresentation pres;
  pres.generators = pd.crossings.empty() ? 1 : *std::max_element(arc.begin(), arc.end());
  for (const auto& c : pd.crossings) {
    const int o = arc[c.edges[1]];
    const int a = arc[c.edges[0]];
    const int out = arc[c.edges[2]];
    pres.relators.push_back({c.sign * o, a, -c.sign * o, -out});
  }
  pres.meridian.assign(pres.generators, true);
  certify_meridian_conjugacy(pres);
  return pres;
}

GroupPresentation cobordism_presentation(const diagrams::SymmetricUnion& su) {
  if (su.bands.size() != su.twists.entries.size()) {
    throw StructuralError("symmetric union is missing band bookkeeping");
  }
  const diagrams::PlatDiagram sum = diagrams::plat_to_pd(su.sum);
  const std::vector<int> arc = wirtinger_arc_of_edge(sum.pd);
  GroupPresentation pres = wirtinger(sum.pd);
  for (std::size_t j = 0; j < su.bands.size(); ++j) {
    if (su.twists.entries[j] == 0) continue;
    const auto& band = su.bands[j];
    const int a = arc[sum.edge_at(band.k_side)];
    const int b = arc[sum.edge_at(band.mirror_side)];
    pres.relators.push_back({sum.direction_at(band.k_side) * a, sum.direction_at(band.mirror_side) * b});
  }
  certify_meridian_conjugacy(pres);
  return pres;
}

}  // namespace slicecert::groups
