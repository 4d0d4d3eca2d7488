#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "slicecert/decker.hpp"
#include "slicecert/errors.hpp"
#include "support.hpp"

using namespace slicecert;
using namespace slicecert::decker;
using namespace testsupport;

namespace {

DeckerSet spun(const diagrams::PlatWord& p, int M = kMinResolution) {
  return spin_chord_diagram(diagrams::chord_diagram_of_tangle(p), M);
}

diagrams::ChordDiagram one_chord() {
  diagrams::ChordDiagram cd;
  cd.endpoints = 2;
  cd.chords = {{1, 2, 1}};
  cd.bridge_segments = {0};
  return cd;
}

}  // namespace

TEST_CASE("spinning chord diagrams") {
  auto empty = spun(unknot());
  CHECK(empty.L == 0);
  CHECK(empty.regions() == 1);
  CHECK(empty.pairs.empty());

  auto ds = spun(trefoil());
  CHECK(ds.L == 6);
  CHECK(ds.pairs.size() == 3);
  CHECK_NOTHROW(check_decker_set(ds));
  for (const auto& pr : ds.pairs) {
    CHECK(ds.circle_over[pr.over_circle]);
    CHECK_FALSE(ds.circle_over[pr.under_circle]);
  }
  CHECK(ds.bridge_region.back() == 0);
  CHECK_THROWS_AS(spin_chord_diagram(diagrams::chord_diagram_of_tangle(trefoil()), 6), InputError);
  CHECK_THROWS_AS(spin_chord_diagram(diagrams::chord_diagram_of_tangle(trefoil()), 9), InputError);
}

TEST_CASE("the trace curve satisfies the criterion") {
  for (const auto& k : corpus()) {
    CAPTURE(k.name);
    auto cd = diagrams::chord_diagram_of_tangle(k.plat);
    auto ds = spin_chord_diagram(cd);
    auto c = trace_double_curve(ds, cd);
    CHECK_NOTHROW(validate_curve(ds, c));
    auto xs = crossings(c);
    CHECK(xs.size() == 2 * static_cast<std::size_t>(ds.L));
    std::map<int, int> per_circle;
    for (const auto& x : xs) ++per_circle[x.circle];
    for (const auto& [circle, n] : per_circle) CHECK(n == 2);
    auto r = check_slice_criterion(ds, c);
    CHECK(r.verdict() == Verdict::kPassForward);
    CHECK(r.witness.empty());
    if (ds.L > 0) {
      CHECK(check_slice_criterion(ds, reverse_orientation(c)).verdict() == Verdict::kPassReverse);
    }
  }
}

TEST_CASE("a misplaced crossing breaks the criterion") {
  auto cd = one_chord();
  auto ds = spin_chord_diagram(cd);
  CHECK(check_slice_criterion(ds, trace_double_curve(ds, cd)).pass());
  // Cross the over circle on the wrong side of the pole going down.
  auto bad = two_strand_curve(ds, ds.M, {-1, 1}, {3, 5});
  auto r = check_slice_criterion(ds, bad);
  CHECK(r.verdict() == Verdict::kFail);
  CHECK(r.witness.find("circle 1") != std::string::npos);
}

TEST_CASE("a disc curve on the empty decker set passes") {
  auto ds = spun(unknot());
  auto c = pole_to_pole_curve(ds.M);
  CHECK(c.cycle.size() == 4);
  CHECK(crossings(c).empty());
  CHECK(check_slice_criterion(ds, c).pass());
}

TEST_CASE("curve validation") {
  auto ds = spun(trefoil());
  auto c = trace_double_curve(ds, diagrams::chord_diagram_of_tangle(trefoil()));
  CHECK(classify_move(c, c.cycle[0], c.cycle[1]) == MoveKind::kP);
  auto broken = c;
  broken.cycle.push_back(broken.cycle[2]);
  CHECK_THROWS(validate_curve(ds, broken));
  auto jump = c;
  jump.cycle[2].lon += 3;
  CHECK_THROWS(validate_curve(ds, jump));
}

TEST_CASE("twists, refinement and rotation preserve the crossing set") {
  auto cd = diagrams::chord_diagram_of_tangle(trefoil());
  auto ds = spin_chord_diagram(cd);
  auto c = trace_double_curve(ds, cd);
  CHECK(dehn_twist_annulus(c, 2, 0) == c);
  CHECK(crossings(refine_longitudes(c, 3)) == crossings(c));
  CHECK_THROWS_AS(dehn_twist_annulus(c, 0, 1), InputError);
  CHECK_THROWS_AS(dehn_twist_annulus(c, ds.L, 1), InputError);

  std::mt19937 rng(2024);
  int cases = 0;
  for (const auto& k : corpus()) {
    auto kcd = diagrams::chord_diagram_of_tangle(k.plat);
    auto kds = spin_chord_diagram(kcd);
    if (kds.L < 2) continue;
    auto base = trace_double_curve(kds, kcd);
    const auto base_x = crossings(base);
    for (int trial = 0; trial < 40; ++trial, ++cases) {
      int region = 1 + static_cast<int>(rng() % (kds.L - 1));
      int n = static_cast<int>(rng() % 5) - 2;
      auto t = dehn_twist_annulus(base, region, n);
      CHECK_NOTHROW(validate_curve(kds, t));
      CHECK(crossings(t) == base_x);
      CHECK(check_slice_criterion(kds, t).verdict() == Verdict::kPassForward);
      int shift = static_cast<int>(rng() % kds.M);
      CHECK(check_slice_criterion(kds, rotate_longitudes(t, shift)).verdict() == Verdict::kPassForward);
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("symmetric union curves") {
  std::mt19937 rng(99);
  int cases = 0;
  for (const auto& k : corpus()) {
    if (k.plat.bridges() < 2) continue;
    auto kcd = diagrams::chord_diagram_of_tangle(k.plat);
    auto kds = spin_chord_diagram(kcd);
    const auto base_x = crossings(trace_double_curve(kds, kcd));
    for (int trial = 0; trial < 40; ++trial, ++cases) {
      diagrams::TwistVector tv;
      for (int b = 0; b < k.plat.bridges(); ++b) tv.entries.push_back(2 * (static_cast<int>(rng() % 5) - 2));
      auto c = symmetric_union_curve(kds, kcd, tv);
      CHECK(crossings(c) == base_x);
      CHECK(check_slice_criterion(kds, c).pass());
    }
  }
  CHECK(cases >= 100);
  auto cd = diagrams::chord_diagram_of_tangle(trefoil());
  CHECK_THROWS_AS(symmetric_union_curve(spin_chord_diagram(cd), cd, {{1, 0}}), InputError);
}

TEST_CASE("side maps flip across crossings") {
  auto cd = diagrams::chord_diagram_of_tangle(figure8());
  auto ds = spin_chord_diagram(cd);
  auto c = trace_double_curve(ds, cd);
  auto sides = side_map(ds, c);
  std::set<std::pair<int, int>> at;
  for (const auto& x : crossings(c)) {
    auto scaled = x.lon * ds.M;
    REQUIRE(scaled.denominator() == 1);
    at.insert({x.circle, scaled.numerator()});
  }
  for (int circle = 1; circle <= ds.L; ++circle) {
    for (int k = 0; k < ds.M; ++k) {
      const int before = sides.midpoint[circle][(k + ds.M - 1) % ds.M];
      const int after = sides.midpoint[circle][k];
      if (at.count({circle, k})) {
        CHECK(sides.point[circle][k] == 0);
        CHECK(before != after);
      } else {
        CHECK(before == after);
        CHECK(sides.point[circle][k] == after);
      }
    }
  }
}

TEST_CASE("text formats round-trip") {
  for (const auto& k : corpus()) {
    auto cd = diagrams::chord_diagram_of_tangle(k.plat);
    auto ds = spin_chord_diagram(cd);
    std::istringstream ds_in(format_decker_set(ds));
    auto back = parse_decker_set(ds_in);
    CHECK(format_decker_set(back) == format_decker_set(ds));
    auto c = trace_double_curve(ds, cd);
    std::istringstream c_in(format_curve(c));
    CHECK(parse_curve(c_in) == c);
  }
  std::istringstream bad("curve 8 rows 1\nstart N\nmove H +\n");
  CHECK_THROWS_AS(parse_curve(bad), InputError);
  std::istringstream bad_ds("decker 2 8\ncircle 1 pair 0 sideways\n");
  CHECK_THROWS_WITH_AS(parse_decker_set(bad_ds), doctest::Contains("line 2"), InputError);
}
