#include <algorithm>
#include <set>

#include "slicecert/errors.hpp"
#include "slicecert/groups/finite_group.hpp"

namespace slicecert::groups {

namespace {
using Q = boost::rational<long long>;

Quaternion from_coords(const std::array<QuadraticNumber, 4>& c) { return {c[0], c[1], c[2], c[3]}; }
}  // namespace

std::vector<Quaternion> unit_icosians() {
  const QuadraticNumber zero{0, 0};
  const QuadraticNumber half{Q(1, 2), 0};
  const QuadraticNumber one{1, 0};
  const QuadraticNumber phi_half{Q(1, 4), Q(1, 4)};         // φ/2
  const QuadraticNumber phi_inv_half{Q(-1, 4), Q(1, 4)};    // φ⁻¹/2
  auto neg = [&](const QuadraticNumber& q) { return zero - q; };

  std::set<Quaternion> out;
  for (int axis = 0; axis < 4; ++axis) {
    for (int s : {1, -1}) {
      std::array<QuadraticNumber, 4> c{zero, zero, zero, zero};
      c[axis] = s > 0 ? one : neg(one);
      out.insert(from_coords(c));
    }
  }
  for (int mask = 0; mask < 16; ++mask) {
    std::array<QuadraticNumber, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = (mask >> i) & 1 ? neg(half) : half;
    out.insert(from_coords(c));
  }
  const std::array<QuadraticNumber, 4> base{zero, half, phi_inv_half, phi_half};
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
    if (inversions % 2) continue;
    for (int mask = 0; mask < 8; ++mask) {
      std::array<QuadraticNumber, 4> c;
      for (int i = 0; i < 4; ++i) {
        QuadraticNumber v = base[perm[i]];
        if (perm[i] > 0 && (mask >> (perm[i] - 1)) & 1) v = neg(v);
        c[i] = v;
      }
      out.insert(from_coords(c));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {out.begin(), out.end()};
}

FiniteGroup icosian_group() {
  std::vector<Quaternion> units = unit_icosians();
  if (units.size() != 120) throw StructuralError("icosian list does not have 120 elements");
  std::set<Quaternion> members(units.begin(), units.end());
  for (const auto& a : units)
    for (const auto& b : units)
      if (!members.count(a * b)) throw StructuralError("icosians are not closed under product");
  FiniteGroup g = closure(units, 120);
  g.set_name("icosians");
  return g;
}

int check_unique_involution(const std::vector<Quaternion>& elements) {
  const Quaternion one{{1, 0}, {}, {}, {}};
  const Quaternion minus_one{{-1, 0}, {}, {}, {}};
  for (const auto& x : elements) {
    if (x * x == one && !(x == one) && !(x == minus_one)) {
      throw StructuralError("unit quaternion " + to_string(x) + " squares to 1");
    }
  }
  return static_cast<int>(elements.size());
}

}  // namespace slicecert::groups
