#pragma once

#include <array>
#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slicecert/groups/presentation.hpp"

namespace slicecert::groups {

/// A finite group given by its full multiplication table. Element 0 is the
/// identity.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup({{0}}, {"1"}) {}
  /// Throws StructuralError unless the table is a group (associativity is
  /// checked exhaustively up to order 200).
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels,
              std::string name = "");

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const { return element_order_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

  /// Multiplication table, one row per line, for external cross-checks.
  std::string format_table() const;

 private:
  int n_ = 1;
  std::vector<std::uint16_t> table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<std::string> labels_;
  std::string name_;
};

// ---------------------------------------------------------------------------
// Concrete element types for closures

/// Permutation of {0..n-1}; (p*q)(x) = q(p(x)), i.e. apply p first.
using Permutation = std::vector<int>;

/// 2x2 matrix over F_5, row-major, entries in 0..4.
using MatrixF5 = std::array<int, 4>;

/// a + b·√5 with rational a, b; exact.
struct QuadraticNumber {
  boost::rational<long long> a{0}, b{0};

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

/// Quaternion w + x i + y j + z k over Q(√5).
struct Quaternion {
  QuadraticNumber w, x, y, z;

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
  friend bool operator<(const Quaternion& p, const Quaternion& q);
  QuadraticNumber norm() const;
};

std::string to_string(const Permutation& p);
std::string to_string(const MatrixF5& m);
std::string to_string(const QuadraticNumber& q);
std::string to_string(const Quaternion& q);

/// Throws InputError if the closure exceeds `max_order`.
FiniteGroup closure(const std::vector<Permutation>& gens, int max_order = 10000);
FiniteGroup closure(const std::vector<MatrixF5>& gens, int max_order = 10000);
FiniteGroup closure(const std::vector<Quaternion>& gens, int max_order = 10000);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
/// SL(2,5) from [[0,-1],[1,0]] and [[1,1],[0,1]].
FiniteGroup sl2_f5();

/// The 120 unit icosians: the 24 Hurwitz units and the 96 elements
/// (0 ± i ± φ^-1 j ± φ k)/2 under even coordinate permutations.
std::vector<Quaternion> unit_icosians();
FiniteGroup icosian_group();

/// Checks exhaustively on the given quaternions that x*x = 1 with x != 1
/// forces x = -1. Returns the number of elements inspected.
int check_unique_involution(const std::vector<Quaternion>& elements);

// ---------------------------------------------------------------------------
// Structure

struct Quotient {
  FiniteGroup group;
  std::vector<int> projection;  // element of G -> element of G/N
  int kernel_order = 0;
};

struct StructureReport {
  std::vector<std::vector<int>> classes;  // sorted, identity class first
  std::vector<int> class_of;
  std::vector<std::vector<int>> normal_subgroups;  // sorted by order
  std::vector<int> center;
  std::vector<Quotient> proper_quotients;  // G/N for 1 < N < G
  bool simple = false;
  int involutions = 0;

  std::vector<int> class_sizes() const;
};

/// Exhaustive for |G| <= 1000; throws InputError above that.
StructureReport structure_report(const FiniteGroup& g);

/// Smallest subgroup containing `gens`, as a sorted element list.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

/// Searches generator images with order and class-size pruning.
std::optional<std::vector<int>> iso_check(const FiniteGroup& a, const FiniteGroup& b);

enum class SU2Verdict { kNoNontrivialRep, kEmbedsPossible, kInconclusive };
std::string to_string(SU2Verdict v);

/// Simple with at least two involutions: every nontrivial map to SU(2) would
/// be injective, but SU(2) has the single involution -1.
SU2Verdict su2_obstruction(const FiniteGroup& g, const StructureReport& report);

// ---------------------------------------------------------------------------
// Homomorphism counting

struct HomCount {
  bool complete = false;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
};

struct HomCountOptions {
  bool prune_conjugacy = true;
  std::uint64_t node_budget = 200000000;
};

/// Exact number of homomorphisms pres -> G by backtracking with relator
/// deduction. With pruning, the first meridian runs over class
/// representatives (weighted by class size) and, when the meridians are
/// certified conjugate, the others stay inside that class.
HomCount hom_count(const GroupPresentation& pres, const FiniteGroup& g,
                   const HomCountOptions& options = {});

enum class CollapseVerdict { kConsistentCollapse, kDistinguished, kInconclusive };
std::string to_string(CollapseVerdict v);

struct CollapseReport {
  CollapseVerdict verdict = CollapseVerdict::kInconclusive;
  struct Row {
    std::string group;
    HomCount source, target;
  };
  std::vector<Row> rows;
};

CollapseReport collapse_check(const GroupPresentation& cobordism, const GroupPresentation& target,
                              const std::vector<FiniteGroup>& battery,
                              const HomCountOptions& options = {});

}  // namespace slicecert::groups
