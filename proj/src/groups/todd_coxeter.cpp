#include <cstdlib>

#include "slicecert/groups/presentation.hpp"

namespace slicecert::groups {
namespace {

struct Overflow {};

inline int column(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }

// HLT coset enumeration with coincidence processing.
class Enumerator {
 public:
  Enumerator(int gens, std::size_t max_cosets) : cols_(2 * gens), max_(max_cosets) { add_coset(); }

  int add_coset() {
    if (parent_.size() >= max_) throw Overflow{};
    const int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.insert(table_.end(), cols_, -1);
    return c;
  }

  int& at(int c, int col) { return table_[static_cast<std::size_t>(c) * cols_ + col]; }
  bool live(int c) const { return parent_[c] == c; }
  std::size_t defined() const { return parent_.size(); }

  void define(int c, int col) {
    const int d = add_coset();
    at(c, col) = d;
    at(d, col ^ 1) = c;
  }

  void scan_and_fill(int alpha, const std::vector<int>& w) {
    const int r = static_cast<int>(w.size());
    if (r == 0) return;
    int f = alpha, b = alpha, i = 0, j = r - 1;
    while (true) {
      while (i < r && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i >= r) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int rep(int k) {
    int root = k;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[k] != root) {
      const int next = parent_[k];
      parent_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int phi = rep(k), psi = rep(l);
    if (phi == psi) return;
    const int mu = std::min(phi, psi), nu = std::max(phi, psi);
    parent_[nu] = mu;
    queue.push_back(nu);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int gamma = queue[qi];
      for (int x = 0; x < cols_; ++x) {
        const int delta = at(gamma, x);
        if (delta < 0) continue;
        if (at(delta, x ^ 1) == gamma) at(delta, x ^ 1) = -1;
        const int mu = rep(gamma), nu = rep(delta);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, x ^ 1) >= 0) {
          merge(mu, at(nu, x ^ 1), queue);
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1) = mu;
        }
      }
    }
  }

  CosetTable finish() {
    CosetTable out;
    out.status = EnumerationStatus::kComplete;
    out.cosets_defined = parent_.size();
    std::vector<int> index(parent_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (live(static_cast<int>(c))) index[c] = next++;
    }
    out.index = static_cast<std::size_t>(next);
    out.table.assign(next, std::vector<int>(cols_, -1));
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (index[c] < 0) continue;
      for (int x = 0; x < cols_; ++x) {
        const int d = at(static_cast<int>(c), x);
        out.table[index[c]][x] = d < 0 ? -1 : index[rep(d)];
      }
    }
    return out;
  }

 private:
  int cols_;
  std::size_t max_;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

CosetTable todd_coxeter(const GroupPresentation& pres, const std::vector<Word>& subgroup,
                        std::size_t max_cosets) {
  check_presentation(pres);
  if (pres.generators == 0) {
    CosetTable t;
    t.status = EnumerationStatus::kComplete;
    t.index = 1;
    t.cosets_defined = 1;
    t.table.assign(1, {});
    return t;
  }
  auto to_columns = [](const Word& w) {
    std::vector<int> out;
    for (int x : free_reduce(w)) out.push_back(column(x));
    return out;
  };
  std::vector<std::vector<int>> rels, subs;
  for (const Word& r : pres.relators) rels.push_back(to_columns(cyclic_reduce(r)));
  for (const Word& s : subgroup) subs.push_back(to_columns(s));

  const int cols = 2 * pres.generators;
  Enumerator e(pres.generators, max_cosets);
  try {
    for (const auto& s : subs) e.scan_and_fill(0, s);
    for (std::size_t alpha = 0; alpha < e.defined(); ++alpha) {
      const int a = static_cast<int>(alpha);
      for (const auto& r : rels) {
        if (!e.live(a)) break;
        e.scan_and_fill(a, r);
      }
      if (!e.live(a)) continue;
      for (int x = 0; x < cols; ++x) {
        if (e.at(a, x) < 0) e.define(a, x);
      }
    }
  } catch (const Overflow&) {
    CosetTable t;
    t.status = EnumerationStatus::kInconclusive;
    t.cosets_defined = e.defined();
    return t;
  }
  return e.finish();
}

}  // namespace slicecert::groups
