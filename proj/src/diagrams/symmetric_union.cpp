#include <cstdlib>

#include "slicecert/diagrams.hpp"
#include "slicecert/errors.hpp"

namespace slicecert::diagrams {

PlatWord connected_sum_with_mirror(const PlatWord& plat) {
  validate_plat(plat);
  const int b2 = plat.strands;
  PlatWord sum{2 * b2, plat.word};
  for (const Letter& l : plat.word) sum.word.push_back({2 * b2 - l.gen, -l.sign});
  sum.word.push_back({b2 - 1, 1});
  sum.word.push_back({b2, 1});
  return sum;
}

SymmetricUnion build_symmetric_union(const PlatWord& plat, const TwistVector& tv,
                                     const SymmetricUnionConfig& config) {
  validate_plat(plat);
  const int b = plat.bridges();
  const int b2 = plat.strands;
  const int total = 2 * b2;
  if (static_cast<int>(tv.entries.size()) != b) {
    throw InputError("twist vector has " + std::to_string(tv.entries.size()) +
                     " entries but the plat has " + std::to_string(b) + " bridges");
  }
  if (config.require_even && !tv.all_even()) {
    throw InputError("even symmetric union requested but a twist entry is odd");
  }

  SymmetricUnion su;
  su.base = plat;
  su.twists = tv;
  su.sum = connected_sum_with_mirror(plat);
  for (int j = 1; j <= b; ++j) {
    su.bands.push_back({j, Segment{2 * j, 0}, Segment{total + 1 - 2 * j, 0}});
  }

  PlatWord top{total, {}};
  for (int j = 1; j <= b; ++j) {
    const int t = tv.entries[j - 1];
    if (t == 0) continue;
    for (int p = 2 * j; p <= b2 - 1; ++p) {
      top.word.push_back({p, 1});
      top.word.push_back({total - p, -1});
    }
    const bool left_over = config.positive_twist == Handedness::kLeftOver;
    const int s = ((t > 0) == left_over) ? 1 : -1;
    for (int i = 0; i < std::abs(t); ++i) top.word.push_back({b2, s});
    for (int p = b2 - 1; p >= 2 * j; --p) {
      top.word.push_back({p, -1});
      top.word.push_back({total - p, 1});
    }
  }
  su.knot = top;
  su.knot.word.insert(su.knot.word.end(), su.sum.word.begin(), su.sum.word.end());
  validate_plat(su.knot);
  return su;
}

}  // namespace slicecert::diagrams
