#include <doctest.h>

#include <map>

#include "slicecert/covers.hpp"
#include "slicecert/diagrams.hpp"
#include "slicecert/errors.hpp"
#include "support.hpp"

using namespace slicecert;
using namespace slicecert::diagrams;
using namespace testsupport;

TEST_CASE("plat parsing reports line numbers") {
  auto p = parse_plat_string("# comment\nstrands 4\ng2 +   # trailing\ng1 -\n");
  CHECK(p.strands == 4);
  REQUIRE(p.word.size() == 2);
  CHECK(p.word[1] == Letter{1, -1});
  CHECK_THROWS_WITH_AS(parse_plat_string("strands 4\ng7 +\n"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_AS(parse_plat_string("strands 3\n"), InputError);
  CHECK_THROWS_AS(parse_plat_string("g1 +\n"), InputError);
  CHECK(parse_plat_string(format_plat(t35())) == t35());
}

TEST_CASE("validate_plat") {
  CHECK(validate_plat(unknot()).components == 1);
  CHECK(validate_plat(trefoil()).components == 1);
  PlatWord two{4, {{2, 1}, {2, 1}}};
  CHECK(plat_components(two) == 2);
  CHECK_THROWS_WITH_AS(validate_plat(two), doctest::Contains("2 components"), InputError);
}

TEST_CASE("twist vectors") {
  CHECK(parse_twists("2,-2,2") == std::vector<int>{2, -2, 2});
  CHECK_THROWS_AS(parse_twists("2,x"), InputError);
  CHECK(TwistVector{{2, -4}}.all_even());
  CHECK_FALSE(TwistVector{{2, 1}}.all_even());
  CHECK(TwistVector{{0, 0}}.all_zero());
}

TEST_CASE("plat_to_pd invariants") {
  CHECK(plat_to_pd(unknot()).pd.crossings.empty());
  for (const auto& k : corpus()) {
    CAPTURE(k.name);
    auto dia = plat_to_pd(k.plat);
    CHECK(dia.pd.crossings.size() == k.plat.word.size());
    std::map<int, int> seen;
    for (const auto& c : dia.pd.crossings)
      for (int e : c.edges) ++seen[e];
    for (const auto& [e, n] : seen) CHECK(n == 2);
    CHECK(static_cast<int>(seen.size()) == dia.pd.edge_count());
    CHECK_NOTHROW(check_pd(dia.pd));
  }
  auto text = format_pd(plat_to_pd(trefoil()).pd);
  CHECK(text.rfind("PD[X[", 0) == 0);
}

TEST_CASE("segment bookkeeping follows the traversal") {
  auto dia = plat_to_pd(trefoil());
  // Edge 1 starts at the top of position 1 heading down.
  CHECK(dia.edge_at({1, 0}) == 1);
  CHECK(dia.direction_at({1, 0}) == 1);
}

TEST_CASE("mirror") {
  CHECK(mirror(unknot()) == unknot());
  CHECK(mirror(trefoil()) == PlatWord{4, {{2, -1}, {2, -1}, {2, -1}}});
  for (const auto& k : corpus()) {
    CAPTURE(k.name);
    auto a = covers::determinant(plat_to_pd(k.plat).pd);
    CHECK(covers::determinant(plat_to_pd(mirror(k.plat)).pd) == a);
    CHECK(covers::determinant(plat_to_pd(reflect_left_right(k.plat)).pd) == a);
  }
}

TEST_CASE("chord diagram of the tangle") {
  auto empty = chord_diagram_of_tangle(unknot());
  CHECK(empty.endpoints == 0);
  CHECK(empty.chords.empty());

  auto cd = chord_diagram_of_tangle(trefoil());
  CHECK(cd.endpoints == 6);
  REQUIRE(cd.chords.size() == 3);
  CHECK_NOTHROW(check_chord_diagram(cd));
  // The trefoil's chords pairwise interleave.
  auto interleave = [](const Chord& a, const Chord& b) {
    auto [a0, a1] = std::minmax(a.over, a.under);
    auto [b0, b1] = std::minmax(b.over, b.under);
    return (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1);
  };
  CHECK(interleave(cd.chords[0], cd.chords[1]));
  CHECK(interleave(cd.chords[0], cd.chords[2]));
  CHECK(interleave(cd.chords[1], cd.chords[2]));
  for (const auto& k : corpus()) {
    auto c = chord_diagram_of_tangle(k.plat);
    CHECK(c.endpoints == 2 * static_cast<int>(k.plat.word.size()));
    CHECK(static_cast<int>(c.bridge_segments.size()) == k.plat.bridges());
  }
}

TEST_CASE("connected sum with the mirror") {
  auto sum = connected_sum_with_mirror(trefoil());
  CHECK(sum.strands == 8);
  CHECK(validate_plat(sum).components == 1);
  CHECK(covers::determinant(plat_to_pd(sum).pd) == 9);

  // Zero twists reproduce the documented joining convention exactly.
  for (const auto& k : corpus()) {
    auto su = build_symmetric_union(k.plat, {std::vector<int>(k.plat.bridges(), 0)});
    PlatWord expected{4 * k.plat.bridges(), k.plat.word};
    for (const auto& l : k.plat.word) expected.word.push_back({4 * k.plat.bridges() - l.gen, -l.sign});
    expected.word.push_back({2 * k.plat.bridges() - 1, 1});
    expected.word.push_back({2 * k.plat.bridges(), 1});
    CHECK(su.knot == expected);
    CHECK(su.sum == expected);
  }
}

TEST_CASE("symmetric unions") {
  CHECK_THROWS_AS(build_symmetric_union(trefoil(), {{2, 1}}), InputError);
  CHECK_THROWS_AS(build_symmetric_union(trefoil(), {{2}}), InputError);
  SymmetricUnionConfig odd_ok;
  odd_ok.require_even = false;
  CHECK_NOTHROW(build_symmetric_union(trefoil(), {{1, 0}}, odd_ok));

  auto su = build_symmetric_union(t35(), {{2, 2, 2}});
  CHECK(validate_plat(su.knot).components == 1);
  CHECK(su.bands.size() == 3);
  CHECK(su.knot.word.size() == su.sum.word.size() + 30);
}

TEST_CASE("det(J) = det(K)^2 against the colouring oracle") {
  for (const auto& k : corpus()) {
    if (k.plat.bridges() < 2) continue;
    int range = k.plat.bridges() == 2 ? 4 : 2;
    for (const auto& tv : even_twist_battery(k.plat.bridges(), range)) {
      auto su = build_symmetric_union(k.plat, {tv});
      auto pd = plat_to_pd(su.knot).pd;
      auto oracle = colouring_determinant(pd);
      CAPTURE(k.name);
      CHECK(oracle == k.det * k.det);
      CHECK(covers::determinant(pd) == oracle);
    }
  }
}

TEST_CASE("handedness is a configuration choice") {
  SymmetricUnionConfig right;
  right.positive_twist = Handedness::kRightOver;
  auto a = build_symmetric_union(trefoil(), {{2, 2}});
  auto b = build_symmetric_union(trefoil(), {{2, 2}}, right);
  CHECK_FALSE(a.knot == b.knot);
  CHECK(covers::determinant(plat_to_pd(b.knot).pd) == 9);
}
