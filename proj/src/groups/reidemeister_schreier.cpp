#include <cstdlib>
#include <map>

#include "slicecert/errors.hpp"
#include "slicecert/groups/presentation.hpp"

namespace slicecert::groups {
namespace {

// Schreier generators for the transversal {1, m}. Coset 0 is the subgroup,
// coset 1 is m·H.
class Rewriter {
 public:
  explicit Rewriter(const GroupPresentation& pres) : pres_(pres), m_(pres.first_meridian()) {
    for (int j = 1; j <= pres.generators; ++j) {
      if (j != m_) ids_[{0, j}] = ++count_;
    }
    for (int j = 1; j <= pres.generators; ++j) ids_[{1, j}] = ++count_;
  }

  int weight(int g) const { return pres_.meridian[g - 1] ? 1 : 0; }
  int count() const { return count_; }

  // gamma(c, x_g) = rep(c) x_g rep(c x_g)^-1; 0 if trivial.
  int gamma(int coset, int g) const {
    auto it = ids_.find({coset, g});
    return it == ids_.end() ? 0 : it->second;
  }

  Word rewrite(const Word& w, int start) const {
    Word out;
    int c = start;
    for (int x : w) {
      const int g = std::abs(x);
      if (x > 0) {
        if (int s = gamma(c, g)) out.push_back(s);
        c ^= weight(g);
      } else {
        c ^= weight(g);
        if (int s = gamma(c, g)) out.push_back(-s);
      }
    }
    if (c != start) throw InputError("relator has odd meridian weight; no index-2 kernel");
    return free_reduce(out);
  }

 private:
  const GroupPresentation& pres_;
  int m_;
  int count_ = 0;
  std::map<std::pair<int, int>, int> ids_;
};

void require_marked(const GroupPresentation& pres) {
  check_presentation(pres);
  if (!pres.has_meridians()) {
    throw InputError("index-2 rewriting needs a meridian-marked presentation");
  }
}

}  // namespace

GroupPresentation reidemeister_schreier_index2(const GroupPresentation& pres) {
  require_marked(pres);
  Rewriter rw(pres);
  GroupPresentation out;
  out.generators = rw.count();
  const Word m{pres.first_meridian()};
  for (const Word& r : pres.relators) {
    out.relators.push_back(rw.rewrite(r, 0));
    out.relators.push_back(rw.rewrite(concat(concat(m, r), inverse(m)), 0));
  }
  return normalize(out);
}

GroupPresentation branched_cover_presentation(const GroupPresentation& pres) {
  require_marked(pres);
  Rewriter rw(pres);
  GroupPresentation out = reidemeister_schreier_index2(pres);
  out.generators = rw.count();
  for (int j = 1; j <= pres.generators; ++j) {
    if (!pres.meridian[j - 1]) continue;
    out.relators.push_back(rw.rewrite({j, j}, 0));
    out.relators.push_back(rw.rewrite({j, j}, 1));
  }
  return normalize(out);
}

}  // namespace slicecert::groups
