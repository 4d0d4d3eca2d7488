#include <doctest.h>

#include <random>

#include "slicecert/covers.hpp"
#include "slicecert/errors.hpp"
#include "slicecert/groups/presentation.hpp"
#include "support.hpp"

using namespace slicecert;
using namespace slicecert::covers;
using namespace testsupport;

namespace {

// Cofactor expansion along the first row; fine for the small sizes used here.
BigInt cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    BigInt term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

}  // namespace

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int n = 0; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix m(n, std::vector<BigInt>(n));
      for (auto& row : m)
        for (auto& x : row) x = small(rng);
      if (n >= 2 && trial % 5 == 0) m[1] = m[0];
      CHECK(integer_determinant(m) == cofactor_det(m));
    }
  }
}

TEST_CASE("Goeritz determinants") {
  for (const auto& k : corpus()) {
    CAPTURE(k.name);
    auto pd = diagrams::plat_to_pd(k.plat).pd;
    auto g = goeritz(pd);
    CHECK(g.region_count == static_cast<int>(pd.crossings.size()) + 2);
    CHECK(determinant(pd) == k.det);
    CHECK(determinant(pd) == colouring_determinant(pd));
  }
  auto sum = diagrams::plat_to_pd(diagrams::connected_sum_with_mirror(trefoil())).pd;
  CHECK(determinant(sum) == 9);
  CHECK(colouring_determinant(sum) == 9);
}

TEST_CASE("Fox calculus at t = -1") {
  for (const auto& k : corpus()) {
    CAPTURE(k.name);
    auto pd = diagrams::plat_to_pd(k.plat).pd;
    CHECK(alexander_det(groups::wirtinger(pd)) == k.det);
  }
  auto bad = groups::parse_presentation_string("gens 3\n1 2\n");
  CHECK_THROWS(alexander_det(bad));
}

TEST_CASE("surgery description and linking matrix") {
  auto sd = surgery_description(t35(), {{2, -2, 2}});
  REQUIRE(sd.curves.size() == 3);
  CHECK(sd.curves[0].framing == -1);
  CHECK(sd.curves[1].framing == 1);
  CHECK(sd.curves[0].k_arc != sd.curves[0].mirror_arc);
  CHECK(sd.ambient == diagrams::connected_sum_with_mirror(t35()));

  CHECK(surgery_description(t35(), {{0, 0, 0}}).curves.empty());
  auto tref = surgery_description(trefoil(), {{2, -2}});
  REQUIRE(tref.curves.size() == 2);
  CHECK(tref.curves[0].framing == -1);
  CHECK(tref.curves[1].framing == 1);

  auto lm = cobordism_linking_matrix(sd);
  REQUIRE(lm.matrix.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(lm.matrix[i][j] == 0);
  BigInt d = integer_determinant(lm.matrix);
  CHECK((d == 1 || d == -1));
  CHECK(is_definite(lm) == Definiteness::kIndefinite);
  CHECK(lm.basis[0] == "band 1");

  CHECK(is_definite(cobordism_linking_matrix(surgery_description(t35(), {{2, 2, 2}}))) ==
        Definiteness::kPositive);
  CHECK(is_definite(cobordism_linking_matrix(surgery_description(t35(), {{-2, -4, -2}}))) ==
        Definiteness::kNegative);
  CHECK(is_definite(LinkingMatrix{}) == Definiteness::kEmpty);
  LinkingMatrix off{{{1, 1}, {1, 1}}, {"band 1", "band 2"}};
  CHECK_THROWS(is_definite(off));
}

TEST_CASE("matrix formatting") {
  IntMatrix m{{1, -2}, {0, 3}};
  CHECK(matrix_json(m) == "[[1,-2],[0,3]]");
  CHECK(format_matrix(m).find("-2") != std::string::npos);
  CHECK(to_string(Definiteness::kPositive) == "positive");
}
