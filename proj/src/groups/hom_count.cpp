#include <algorithm>
#include <cstdlib>

#include "slicecert/errors.hpp"
#include "slicecert/groups/finite_group.hpp"

namespace slicecert::groups {

namespace {

struct BudgetExceeded {};

class HomSearch {
 public:
  HomSearch(const GroupPresentation& pres, const FiniteGroup& g, const HomCountOptions& opt)
      : g_(g), opt_(opt), value_(pres.generators, -1) {
    for (const Word& r : pres.relators) {
      Word w = cyclic_reduce(free_reduce(r));
      if (!w.empty()) relators_.push_back(std::move(w));
    }
    meridian_ = pres.meridian;
    meridian_.resize(pres.generators, false);
  }

  std::uint64_t nodes() const { return nodes_; }

  /// Counts extensions of the current partial assignment.
  std::uint64_t count() {
    std::vector<int> trail;
    std::uint64_t total = 0;
    if (propagate(trail)) {
      int next = choose();
      if (next < 0) {
        total = 1;
      } else {
        for (int y = 0; y < g_.order(); ++y) {
          if (!allowed(next, y)) continue;
          if (++nodes_ > opt_.node_budget) throw BudgetExceeded{};
          value_[next] = y;
          total += count();
          value_[next] = -1;
        }
      }
    }
    for (int x : trail) value_[x] = -1;
    return total;
  }

  void assign(int gen, int y) { value_[gen] = y; }
  void restrict_meridians(std::vector<bool> cls) { meridian_class_ = std::move(cls); }

 private:
  bool allowed(int gen, int y) const {
    return meridian_class_.empty() || !meridian_[gen] || meridian_class_[y];
  }

  int image(int letter) const {
    int v = value_[std::abs(letter) - 1];
    return letter > 0 ? v : g_.inv(v);
  }

  // Evaluates fully assigned relators and solves relators with a single
  // unknown letter. Returns false on a contradiction.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Word& r : relators_) {
        int unknown_pos = -1, unknown_count = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (value_[std::abs(r[i]) - 1] < 0) {
            ++unknown_count;
            unknown_pos = static_cast<int>(i);
          }
        }
        if (unknown_count == 0) {
          int acc = 0;
          for (int l : r) acc = g_.mul(acc, image(l));
          if (acc != 0) return false;
        } else if (unknown_count == 1) {
          // x^e * rest = 1, with rest read cyclically after x.
          int acc = 0;
          const std::size_t len = r.size();
          for (std::size_t k = 1; k < len; ++k) acc = g_.mul(acc, image(r[(unknown_pos + k) % len]));
          int letter = r[unknown_pos];
          int x = letter > 0 ? g_.inv(acc) : acc;
          int gen = std::abs(letter) - 1;
          if (!allowed(gen, x)) return false;
          value_[gen] = x;
          trail.push_back(gen);
          changed = true;
        }
      }
    }
    return true;
  }

  // Unassigned generator that sits in the relators nearest completion.
  int choose() const {
    std::vector<double> score(value_.size(), 0.0);
    bool any = false;
    for (std::size_t x = 0; x < value_.size(); ++x) any = any || value_[x] < 0;
    if (!any) return -1;
    for (const Word& r : relators_) {
      int unknowns = 0;
      for (int l : r) unknowns += value_[std::abs(l) - 1] < 0;
      if (unknowns == 0) continue;
      for (int l : r)
        if (value_[std::abs(l) - 1] < 0) score[std::abs(l) - 1] += 1.0 / unknowns;
    }
    int best = -1;
    for (std::size_t x = 0; x < value_.size(); ++x) {
      if (value_[x] >= 0) continue;
      if (best < 0 || score[x] > score[best]) best = static_cast<int>(x);
    }
    return best;
  }

  const FiniteGroup& g_;
  HomCountOptions opt_;
  std::vector<Word> relators_;
  std::vector<int> value_;
  std::vector<bool> meridian_;
  std::vector<bool> meridian_class_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

HomCount hom_count(const GroupPresentation& pres, const FiniteGroup& g,
                   const HomCountOptions& options) {
  HomCount result;
  if (pres.generators == 0) {
    HomSearch search(pres, g, options);
    result.count = search.count();
    result.complete = true;
    return result;
  }
  // Any generator may be pinned to class representatives; a meridian is
  // preferred so the remaining meridians can be restricted to its class.
  const int first = std::max(pres.first_meridian(), 1) - 1;
  const bool prune = options.prune_conjugacy;
  std::uint64_t nodes = 0;
  try {
    if (!prune) {
      HomSearch search(pres, g, options);
      result.count = search.count();
      nodes = search.nodes();
    } else {
      // Conjugation by G permutes homomorphisms, so the first meridian can
      // be fixed to one element per class.
      std::vector<bool> done(g.order(), false);
      for (int rep = 0; rep < g.order(); ++rep) {
        if (done[rep]) continue;
        std::vector<bool> cls(g.order(), false);
        std::uint64_t size = 0;
        for (int h = 0; h < g.order(); ++h) {
          int c = g.conj(h, rep);
          if (!cls[c]) {
            cls[c] = true;
            done[c] = true;
            ++size;
          }
        }
        HomCountOptions sub = options;
        sub.node_budget = options.node_budget > nodes ? options.node_budget - nodes : 0;
        HomSearch search(pres, g, sub);
        if (pres.meridians_conjugate && pres.first_meridian() > 0) search.restrict_meridians(cls);
        search.assign(first, rep);
        result.count += size * search.count();
        nodes += search.nodes();
      }
    }
    result.complete = true;
  } catch (const BudgetExceeded&) {
    result.complete = false;
    result.count = 0;
    nodes = options.node_budget;
  }
  result.nodes = nodes;
  return result;
}

std::string to_string(CollapseVerdict v) {
  switch (v) {
    case CollapseVerdict::kConsistentCollapse: return "consistent-collapse";
    case CollapseVerdict::kDistinguished: return "distinguished";
    case CollapseVerdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CollapseReport collapse_check(const GroupPresentation& cobordism, const GroupPresentation& target,
                              const std::vector<FiniteGroup>& battery,
                              const HomCountOptions& options) {
  CollapseReport report;
  GroupPresentation src = simplify(cobordism);
  GroupPresentation dst = simplify(target);
  bool distinguished = false, incomplete = false;
  for (const FiniteGroup& g : battery) {
    CollapseReport::Row row{g.name(), hom_count(src, g, options), hom_count(dst, g, options)};
    if (!row.source.complete || !row.target.complete) {
      incomplete = true;
    } else if (row.source.count != row.target.count) {
      distinguished = true;
    }
    report.rows.push_back(row);
  }
  report.verdict = distinguished ? CollapseVerdict::kDistinguished
                   : incomplete  ? CollapseVerdict::kInconclusive
                                 : CollapseVerdict::kConsistentCollapse;
  return report;
}

}  // namespace slicecert::groups
