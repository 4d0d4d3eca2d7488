#include <random>
#include <sstream>

#include "slicecert/errors.hpp"
#include "slicecert/groups/finite_group.hpp"

namespace slicecert::groups {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels,
                         std::string name)
    : n_(static_cast<int>(table.size())), labels_(std::move(labels)), name_(std::move(name)) {
  if (n_ == 0) throw StructuralError("group table is empty");
  if (n_ > 65535) throw StructuralError("group order exceeds table capacity");
  if (static_cast<int>(labels_.size()) != n_) throw StructuralError("label count differs from order");
  table_.resize(static_cast<std::size_t>(n_) * n_);
  for (int a = 0; a < n_; ++a) {
    if (static_cast<int>(table[a].size()) != n_) throw StructuralError("group table is not square");
    std::vector<bool> seen(n_, false);
    for (int b = 0; b < n_; ++b) {
      int c = table[a][b];
      if (c < 0 || c >= n_) throw StructuralError("group table entry out of range");
      if (seen[c]) throw StructuralError("group table row is not a permutation");
      seen[c] = true;
      table_[static_cast<std::size_t>(a) * n_ + b] = static_cast<std::uint16_t>(c);
    }
  }
  for (int a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw StructuralError("element 0 is not the identity");
  }
  for (int b = 0; b < n_; ++b) {
    std::vector<bool> seen(n_, false);
    for (int a = 0; a < n_; ++a) {
      if (seen[mul(a, b)]) throw StructuralError("group table column is not a permutation");
      seen[mul(a, b)] = true;
    }
  }
  auto assoc = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw StructuralError("group table is not associative");
  };
  if (n_ <= 200) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) assoc(a, b, c);
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (int t = 0; t < 200000; ++t) assoc(pick(rng), pick(rng), pick(rng));
  }
  inverse_.assign(n_, 0);
  element_order_.assign(n_, 1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++k;
    element_order_[a] = a == 0 ? 1 : k;
  }
}

std::string FiniteGroup::format_table() const {
  std::ostringstream out;
  out << "order " << n_ << "\n";
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) out << (b ? " " : "") << mul(a, b);
    out << "\n";
  }
  return out.str();
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

bool operator<(const Quaternion& p, const Quaternion& q) {
  if (!(p.w == q.w)) return p.w < q.w;
  if (!(p.x == q.x)) return p.x < q.x;
  if (!(p.y == q.y)) return p.y < q.y;
  return p.z < q.z;
}

QuadraticNumber Quaternion::norm() const { return w * w + x * x + y * y + z * z; }

std::string to_string(const Permutation& p) {
  // Cycle notation on 1-based points.
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      if (out.back() != '(') out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string to_string(const MatrixF5& m) {
  std::ostringstream out;
  out << "[[" << m[0] << "," << m[1] << "],[" << m[2] << "," << m[3] << "]]";
  return out.str();
}

namespace {
std::string rational_string(const boost::rational<long long>& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}
}  // namespace

std::string to_string(const QuadraticNumber& q) {
  if (q.b.numerator() == 0) return rational_string(q.a);
  std::string s = q.a.numerator() == 0 ? "" : rational_string(q.a) + (q.b.numerator() > 0 ? "+" : "");
  return s + rational_string(q.b) + "r5";
}

std::string to_string(const Quaternion& q) {
  return "(" + to_string(q.w) + "," + to_string(q.x) + "," + to_string(q.y) + "," + to_string(q.z) +
         ")";
}

}  // namespace slicecert::groups
