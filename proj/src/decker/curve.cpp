#include <numeric>
#include <set>

#include "slicecert/decker.hpp"
#include "slicecert/errors.hpp"

namespace slicecert::decker {

int SliceCurve::total_rows() const { return std::accumulate(rows.begin(), rows.end(), 0); }

int SliceCurve::first_row(int region) const {
  return std::accumulate(rows.begin(), rows.begin() + region, 0);
}

namespace {

int region_of_row(const SliceCurve& c, int row) {
  int acc = 0;
  for (std::size_t r = 0; r < c.rows.size(); ++r) {
    acc += c.rows[r];
    if (row < acc) return static_cast<int>(r);
  }
  return static_cast<int>(c.rows.size()) - 1;
}

int mod(int a, int m) { return ((a % m) + m) % m; }

std::string where(const GridVertex& v) {
  return "(" + std::to_string(v.row) + "," + std::to_string(v.lon) + ")";
}

// Appends the horizontal run from the last vertex of `path` to longitude b.
void walk_to(std::vector<GridVertex>& path, int b, int M) {
  GridVertex v = path.back();
  int diff = mod(b - v.lon, M);
  int step = diff <= M / 2 ? 1 : -1;
  while (v.lon != b) {
    v.lon = mod(v.lon + step, M);
    path.push_back(v);
  }
}

}  // namespace

MoveKind classify_move(const SliceCurve& c, const GridVertex& a, const GridVertex& b) {
  const int last = c.total_rows() - 1;
  auto bad = [&]() { return StructuralError("no grid edge from " + where(a) + " to " + where(b)); };
  if (c.is_north(a) || c.is_north(b)) {
    const GridVertex& o = c.is_north(a) ? b : a;
    if (o.row != 0) throw bad();
    return MoveKind::kP;
  }
  if (c.is_south(a) || c.is_south(b)) {
    const GridVertex& o = c.is_south(a) ? b : a;
    if (o.row != last) throw bad();
    return MoveKind::kP;
  }
  if (a.row == b.row) {
    if (mod(a.lon - b.lon, c.M) == 1 || mod(b.lon - a.lon, c.M) == 1) return MoveKind::kH;
    throw bad();
  }
  if (a.lon == b.lon && std::abs(a.row - b.row) == 1) {
    return region_of_row(c, a.row) == region_of_row(c, b.row) ? MoveKind::kV : MoveKind::kX;
  }
  throw bad();
}

void validate_curve(const DeckerSet& ds, const SliceCurve& c) {
  if (static_cast<int>(c.rows.size()) != ds.L + 1) {
    throw StructuralError("curve has " + std::to_string(c.rows.size()) + " regions, decker set has " +
                          std::to_string(ds.L + 1));
  }
  for (int h : c.rows)
    if (h < 1) throw StructuralError("every region needs at least one row");
  if (c.M < 4 || c.M % 2) throw StructuralError("curve resolution must be even and at least 4");
  if (c.cycle.size() < 3) throw StructuralError("curve has fewer than 3 vertices");
  const int total = c.total_rows();
  std::set<GridVertex> seen;
  for (const auto& v : c.cycle) {
    if (v.row < -1 || v.row > total) throw StructuralError("vertex row out of range " + where(v));
    bool pole = v.row == -1 || v.row == total;
    if (pole ? v.lon != 0 : (v.lon < 0 || v.lon >= c.M)) {
      throw StructuralError("vertex longitude out of range " + where(v));
    }
    if (!seen.insert(v).second) throw StructuralError("curve revisits " + where(v));
  }
  for (std::size_t i = 0; i < c.cycle.size(); ++i) {
    classify_move(c, c.cycle[i], c.cycle[(i + 1) % c.cycle.size()]);
  }
  std::vector<int> count(ds.L + 1, 0);
  for (const auto& x : crossings(c)) ++count[x.circle];
  for (int l = 1; l <= ds.L; ++l) {
    if (count[l] % 2) throw StructuralError("curve crosses circle " + std::to_string(l) + " an odd number of times");
  }
}

std::vector<CircleCrossing> crossings(const SliceCurve& c) {
  std::vector<CircleCrossing> out;
  for (std::size_t i = 0; i < c.cycle.size(); ++i) {
    const GridVertex& a = c.cycle[i];
    const GridVertex& b = c.cycle[(i + 1) % c.cycle.size()];
    if (classify_move(c, a, b) != MoveKind::kX) continue;
    out.push_back({region_of_row(c, std::max(a.row, b.row)), boost::rational<int>(a.lon, c.M)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

SliceCurve pole_to_pole_curve(int M) {
  SliceCurve c;
  c.M = M;
  c.rows = {1};
  c.cycle = {{-1, 0}, {0, 0}, {1, 0}, {0, M / 2}};
  return c;
}

SliceCurve two_strand_curve(const DeckerSet& ds, int M, const std::vector<int>& descent,
                            const std::vector<int>& ascent) {
  if (static_cast<int>(descent.size()) != ds.L || static_cast<int>(ascent.size()) != ds.L) {
    throw InputError("need one descent and one ascent longitude per circle");
  }
  if (ds.L == 0) return pole_to_pole_curve(M);
  SliceCurve c;
  c.M = M;
  c.rows.assign(ds.L + 1, 1);
  auto& p = c.cycle;
  p.push_back({-1, 0});
  p.push_back({0, mod(descent[0], M)});
  for (int l = 1; l <= ds.L; ++l) {
    p.push_back({l, p.back().lon});
    if (l < ds.L) walk_to(p, mod(descent[l], M), M);
  }
  p.push_back({ds.L + 1, 0});
  p.push_back({ds.L, mod(ascent[ds.L - 1], M)});
  for (int l = ds.L; l >= 1; --l) {
    p.push_back({l - 1, p.back().lon});
    if (l > 1) walk_to(p, mod(ascent[l - 2], M), M);
  }
  validate_curve(ds, c);
  return c;
}

SliceCurve trace_double_curve(const DeckerSet& ds, const diagrams::ChordDiagram& cd) {
  if (cd.endpoints != ds.L || cd.chords.size() != ds.pairs.size()) {
    throw InputError("chord diagram does not match the decker set");
  }
  if (ds.L == 0) return pole_to_pole_curve(ds.M);
  std::vector<int> descent(ds.L), ascent(ds.L);
  for (int l = 1; l <= ds.L; ++l) {
    bool over = ds.circle_over[l];
    descent[l - 1] = over ? 1 : -1;
    ascent[l - 1] = ds.M / 2 + (over ? -1 : 1);
  }
  return two_strand_curve(ds, ds.M, descent, ascent);
}

SliceCurve refine_longitudes(const SliceCurve& c, int factor) {
  if (factor < 1) throw InputError("refinement factor must be positive");
  SliceCurve out;
  out.M = c.M * factor;
  out.rows = c.rows;
  auto scale = [&](GridVertex v) {
    if (!c.is_north(v) && !c.is_south(v)) v.lon *= factor;
    return v;
  };
  for (std::size_t i = 0; i < c.cycle.size(); ++i) {
    const GridVertex& a = c.cycle[i];
    const GridVertex& b = c.cycle[(i + 1) % c.cycle.size()];
    out.cycle.push_back(scale(a));
    if (classify_move(c, a, b) == MoveKind::kH) {
      int step = mod(b.lon - a.lon, c.M) == 1 ? 1 : -1;
      GridVertex v = scale(a);
      for (int k = 1; k < factor; ++k) {
        v.lon = mod(v.lon + step, out.M);
        out.cycle.push_back(v);
      }
    }
  }
  return out;
}

SliceCurve rotate_longitudes(const SliceCurve& c, int shift) {
  SliceCurve out = c;
  for (auto& v : out.cycle)
    if (!c.is_north(v) && !c.is_south(v)) v.lon = mod(v.lon + shift, c.M);
  return out;
}

SliceCurve reverse_orientation(const SliceCurve& c) {
  SliceCurve out = c;
  std::reverse(out.cycle.begin() + 1, out.cycle.end());
  return out;
}

}  // namespace slicecert::decker
