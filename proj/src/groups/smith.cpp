#include <sstream>

#include "slicecert/groups/presentation.hpp"

namespace slicecert::groups {
namespace {

IntMatrix identity(int n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

class Reducer {
 public:
  Reducer(IntMatrix a, int rows, int cols, bool transforms)
      : a_(std::move(a)), rows_(rows), cols_(cols), transforms_(transforms) {
    if (transforms_) {
      u_ = identity(rows_);
      v_ = identity(cols_);
    }
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(a_[i], a_[j]);
    if (transforms_) std::swap(u_[i], u_[j]);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (auto& row : a_) std::swap(row[i], row[j]);
    if (transforms_) {
      for (auto& row : v_) std::swap(row[i], row[j]);
    }
  }
  // row_i += q * row_j
  void add_row(int i, int j, const BigInt& q) {
    for (int c = 0; c < cols_; ++c) a_[i][c] += q * a_[j][c];
    if (transforms_) {
      for (int c = 0; c < rows_; ++c) u_[i][c] += q * u_[j][c];
    }
  }
  // col_i += q * col_j
  void add_col(int i, int j, const BigInt& q) {
    for (int r = 0; r < rows_; ++r) a_[r][i] += q * a_[r][j];
    if (transforms_) {
      for (int r = 0; r < cols_; ++r) v_[r][i] += q * v_[r][j];
    }
  }
  void negate_row(int i) {
    for (auto& x : a_[i]) x = -x;
    if (transforms_) {
      for (auto& x : u_[i]) x = -x;
    }
  }

  SmithResult run() {
    SmithResult res;
    int t = 0;
    for (; t < rows_ && t < cols_; ++t) {
      if (!move_min_to(t)) break;
      while (true) {
        bool dirty = false;
        for (int i = t + 1; i < rows_; ++i) {
          if (a_[i][t] == 0) continue;
          add_row(i, t, -(a_[i][t] / a_[t][t]));
          if (a_[i][t] != 0) dirty = true;
        }
        for (int j = t + 1; j < cols_; ++j) {
          if (a_[t][j] == 0) continue;
          add_col(j, t, -(a_[t][j] / a_[t][t]));
          if (a_[t][j] != 0) dirty = true;
        }
        if (dirty) {
          move_min_to(t);
          continue;
        }
        // divisibility of the remaining block
        int bad_row = -1;
        for (int i = t + 1; i < rows_ && bad_row < 0; ++i) {
          for (int j = t + 1; j < cols_; ++j) {
            if (a_[i][j] % a_[t][t] != 0) {
              bad_row = i;
              break;
            }
          }
        }
        if (bad_row < 0) break;
        add_row(t, bad_row, 1);
        move_min_to(t);
      }
      if (a_[t][t] < 0) negate_row(t);
      res.divisors.push_back(a_[t][t]);
    }
    res.rank = t;
    res.free_rank = cols_ - t;
    if (transforms_) {
      res.left = std::move(u_);
      res.right = std::move(v_);
    }
    return res;
  }

 private:
  bool move_min_to(int t) {
    int bi = -1, bj = -1;
    BigInt best = 0;
    for (int i = t; i < rows_; ++i) {
      for (int j = t; j < cols_; ++j) {
        if (a_[i][j] == 0) continue;
        BigInt v = abs(a_[i][j]);
        if (bi < 0 || v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  IntMatrix a_;
  int rows_, cols_;
  bool transforms_;
  IntMatrix u_, v_;
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m, int columns, bool want_transforms) {
  const int rows = static_cast<int>(m.size());
  Reducer r(m, rows, columns, want_transforms);
  return r.run();
}

IntMatrix relation_matrix(const GroupPresentation& pres) {
  IntMatrix m;
  for (const Word& r : pres.relators) {
    std::vector<BigInt> row(pres.generators, 0);
    for (int x : r) row[std::abs(x) - 1] += x > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants abelianization(const GroupPresentation& pres) {
  check_presentation(pres);
  const SmithResult s = smith_normal_form(relation_matrix(pres), pres.generators);
  AbelianInvariants out;
  for (const BigInt& d : s.divisors) {
    if (d != 1) out.torsion.push_back(d);
  }
  out.free_rank = s.free_rank;
  return out;
}

BigInt AbelianInvariants::torsion_order() const {
  BigInt n = 1;
  for (const BigInt& d : torsion) n *= d;
  return n;
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < free_rank; ++i) {
    out << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (const BigInt& d : torsion) {
    out << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace slicecert::groups
