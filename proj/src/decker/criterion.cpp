#include <numeric>
#include <set>

#include "slicecert/decker.hpp"
#include "slicecert/errors.hpp"

namespace slicecert::decker {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPassForward: return "pass-forward";
    case Verdict::kPassReverse: return "pass-reverse";
    case Verdict::kFail: return "fail";
  }
  return "fail";
}

namespace {

// Faces: squares below row r (r < R-1), then north wedges, then south
// wedges; each block has M faces indexed by the western longitude.
struct FaceGrid {
  int R, M;
  int square(int r, int k) const { return r * M + k; }
  int north(int k) const { return (R - 1) * M + k; }
  int south(int k) const { return R * M + k; }
  int count() const { return (R + 1) * M; }
};

using Edge = std::pair<GridVertex, GridVertex>;

Edge edge(GridVertex a, GridVertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

SideMap side_map(const DeckerSet& ds, const SliceCurve& c) {
  validate_curve(ds, c);
  const int R = c.total_rows(), M = c.M;
  const FaceGrid grid{R, M};
  const GridVertex north{-1, 0}, south{R, 0};
  std::set<Edge> cut;
  for (std::size_t i = 0; i < c.cycle.size(); ++i) cut.insert(edge(c.cycle[i], c.cycle[(i + 1) % c.cycle.size()]));

  std::vector<int> parent(grid.count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int f, int g, const Edge& e) {
    if (!cut.count(e)) parent[find(f)] = find(g);
  };
  for (int k = 0; k < M; ++k) {
    const int k1 = (k + 1) % M;
    for (int r = 0; r + 1 < R; ++r) join(grid.square(r, k), grid.square(r, k1), edge({r, k1}, {r + 1, k1}));
    for (int r = 0; r < R; ++r) {
      int above = r == 0 ? grid.north(k) : grid.square(r - 1, k);
      int below = r == R - 1 ? grid.south(k) : grid.square(r, k);
      join(above, below, edge({r, k}, {r, k1}));
    }
    join(grid.north(k), grid.north(k1), edge(north, {0, k1}));
    join(grid.south(k), grid.south(k1), edge({R - 1, k1}, south));
  }
  std::set<int> roots;
  for (int f = 0; f < grid.count(); ++f) roots.insert(find(f));
  if (roots.size() != 2) {
    throw StructuralError("curve complement has " + std::to_string(roots.size()) + " components");
  }

  int anchor = grid.north(0);
  for (std::size_t i = 0; i < c.cycle.size(); ++i) {
    if (c.is_north(c.cycle[i])) anchor = grid.north(c.cycle[(i + 1) % c.cycle.size()].lon);
  }
  const int one = find(anchor);
  auto label = [&](int face) { return find(face) == one ? 1 : 2; };

  SideMap sm;
  sm.M = M;
  sm.midpoint.assign(ds.L + 1, {});
  sm.point.assign(ds.L + 1, {});
  for (int l = 1; l <= ds.L; ++l) {
    const int r = c.first_row(l) - 1;
    for (int k = 0; k < M; ++k) {
      sm.midpoint[l].push_back(label(grid.square(r, k)));
      sm.point[l].push_back(cut.count(edge({r, k}, {r + 1, k})) ? 0 : label(grid.square(r, k)));
    }
  }
  return sm;
}

CriterionResult check_slice_criterion(const DeckerSet& ds, const SliceCurve& c) {
  CriterionResult res;
  res.sides = side_map(ds, c);
  const SideMap& s = res.sides;
  auto included = [&](int from, int to, std::string* witness) {
    for (int k = 0; k < s.M; ++k) {
      if (s.midpoint[from][k] == 1 && s.midpoint[to][k] != 1) {
        if (witness) *witness = "circle " + std::to_string(from) + " at " + std::to_string(k) + "+1/2";
        return false;
      }
      if (s.point[from][k] == 1 && s.point[to][k] != 1) {
        if (witness) *witness = "circle " + std::to_string(from) + " at " + std::to_string(k);
        return false;
      }
    }
    return true;
  };
  res.forward = res.reverse = true;
  for (const auto& p : ds.pairs) {
    if (res.forward && !included(p.over_circle, p.under_circle, &res.witness)) res.forward = false;
    if (res.reverse && !included(p.under_circle, p.over_circle, nullptr)) res.reverse = false;
  }
  return res;
}

}  // namespace slicecert::decker
