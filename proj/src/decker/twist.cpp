#include <algorithm>
#include <cstdlib>

#include "slicecert/decker.hpp"
#include "slicecert/errors.hpp"

namespace slicecert::decker {

namespace {

// Smallest cyclic distance between longitudes at which γ crosses from the
// row above `top` into `top`.
int min_gap(const SliceCurve& c, int top) {
  std::vector<int> lons;
  for (std::size_t i = 0; i < c.cycle.size(); ++i) {
    const GridVertex& a = c.cycle[i];
    const GridVertex& b = c.cycle[(i + 1) % c.cycle.size()];
    if (std::min(a.row, b.row) == top - 1 && std::max(a.row, b.row) == top && a.lon == b.lon) {
      lons.push_back(a.lon);
    }
  }
  if (lons.size() < 2) return c.M;
  std::sort(lons.begin(), lons.end());
  int gap = c.M - lons.back() + lons.front();
  for (std::size_t i = 1; i < lons.size(); ++i) gap = std::min(gap, lons[i] - lons[i - 1]);
  return gap;
}

}  // namespace

SliceCurve dehn_twist_annulus(const SliceCurve& curve, int region, int n) {
  const int L = static_cast<int>(curve.rows.size()) - 1;
  if (region < 1 || region > L - 1) {
    throw InputError("Dehn twist region " + std::to_string(region) + " is not an annulus");
  }
  if (n == 0) return curve;
  SliceCurve c = curve;
  const int top = c.first_row(region);
  while (min_gap(c, top) < 2) c = refine_longitudes(c, 2);

  const int s = n > 0 ? 1 : -1;
  const int added = std::abs(n) * c.M;
  const int M = c.M;
  auto shift = [&](GridVertex v) {
    if (v.row >= top) v.row += added;
    return v;
  };
  std::vector<GridVertex> stair;
  SliceCurve out;
  out.M = M;
  out.rows = c.rows;
  out.rows[region] += added;
  for (std::size_t i = 0; i < c.cycle.size(); ++i) {
    const GridVertex& a = c.cycle[i];
    const GridVertex& b = c.cycle[(i + 1) % c.cycle.size()];
    out.cycle.push_back(shift(a));
    bool down = a.row == top - 1 && b.row == top && a.lon == b.lon;
    bool up = a.row == top && b.row == top - 1 && a.lon == b.lon;
    if (!down && !up) continue;
    stair.clear();
    for (int r = 0; r < added; ++r) {
      stair.push_back({top + r, ((a.lon + s * r) % M + M) % M});
      stair.push_back({top + r, ((a.lon + s * (r + 1)) % M + M) % M});
    }
    if (up) std::reverse(stair.begin(), stair.end());
    out.cycle.insert(out.cycle.end(), stair.begin(), stair.end());
  }
  return out;
}

SliceCurve symmetric_union_curve(const DeckerSet& ds, const diagrams::ChordDiagram& cd,
                                 const diagrams::TwistVector& tv) {
  if (tv.entries.size() != ds.bridge_region.size()) {
    throw InputError("twist vector has " + std::to_string(tv.entries.size()) + " entries, expected " +
                     std::to_string(ds.bridge_region.size()));
  }
  if (!tv.all_even()) throw InputError("symmetric union curves need an even twist vector");
  SliceCurve c = trace_double_curve(ds, cd);
  for (std::size_t j = 0; j < tv.entries.size(); ++j) {
    const int region = ds.bridge_region[j];
    if (tv.entries[j] == 0 || region == 0 || region == ds.L) continue;
    c = dehn_twist_annulus(c, region, tv.entries[j] / 2);
  }
  return c;
}

}  // namespace slicecert::decker
