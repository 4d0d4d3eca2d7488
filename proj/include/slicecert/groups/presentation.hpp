#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slicecert/diagrams.hpp"

namespace slicecert::groups {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// A word in the generators: letter +g / -g stands for x_g / x_g^{-1},
/// generators numbered from 1.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;
  // meridian[g-1]: generator g is a meridian (weight 1 in Z/2). Empty when the
  // presentation carries no marking.
  std::vector<bool> meridian;
  // Set only when every meridian was shown conjugate to every other one by
  // the relators themselves (see certify_meridian_conjugacy).
  bool meridians_conjugate = false;

  bool has_meridians() const;
  int first_meridian() const;  // 1-based, 0 if none
};

/// Throws InputError on letters that reference missing generators.
void check_presentation(const GroupPresentation& pres);

/// Union-find over relators of the shapes x_o^e x_a x_o^-e x_c^-1 and
/// x_a x_c^-1: returns true (and sets the flag) if all meridians fall in one
/// class.
bool certify_meridian_conjugacy(GroupPresentation& pres);

/// `gens N`, optional `meridians i j ...`, then one relator per line as
/// space-separated signed indices. `#` starts a comment.
GroupPresentation parse_presentation(std::istream& in);
GroupPresentation parse_presentation_string(const std::string& text);
std::string format_presentation(const GroupPresentation& pres);

/// Free reduction of every relator and removal of empty or duplicate ones.
GroupPresentation normalize(const GroupPresentation& pres);

/// Tietze elimination of generators that occur exactly once in some relator.
/// Surviving generators keep their meridian marks.
GroupPresentation simplify(const GroupPresentation& pres, std::size_t max_total_length = 200000);

// ---------------------------------------------------------------------------
// Abelian invariants

struct SmithResult {
  std::vector<BigInt> divisors;  // nonzero diagonal entries, d1 | d2 | ...
  int rank = 0;
  int free_rank = 0;  // columns - rank
  std::optional<IntMatrix> left;   // U with U A V = D
  std::optional<IntMatrix> right;  // V
};

SmithResult smith_normal_form(const IntMatrix& m, int columns, bool want_transforms = false);

struct AbelianInvariants {
  std::vector<BigInt> torsion;  // divisors > 1
  int free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  BigInt torsion_order() const;
  std::string to_string() const;
};

IntMatrix relation_matrix(const GroupPresentation& pres);
AbelianInvariants abelianization(const GroupPresentation& pres);

// ---------------------------------------------------------------------------
// Knot-group presentations

/// One generator per over-arc, one relator x_o^e x_a x_o^-e x_c^-1 per
/// crossing (a incoming under, c outgoing under, e the crossing sign).
GroupPresentation wirtinger(const diagrams::PDCode& pd);

/// Over-arc index (1-based generator) of each PD edge label.
std::vector<int> wirtinger_arc_of_edge(const diagrams::PDCode& pd);

/// Wirtinger presentation of K#K̄ plus one relator per twisted band pairing
/// the K-side meridian with its mirror partner.
GroupPresentation cobordism_presentation(const diagrams::SymmetricUnion& su);

// ---------------------------------------------------------------------------
// Coset enumeration and subgroups

enum class EnumerationStatus { kComplete, kInconclusive };

struct CosetTable {
  EnumerationStatus status = EnumerationStatus::kInconclusive;
  std::size_t index = 0;
  std::size_t cosets_defined = 0;
  // table[c][2*(g-1)] = c·x_g, table[c][2*(g-1)+1] = c·x_g^{-1}; cosets
  // renumbered 0..index-1 with the subgroup coset first.
  std::vector<std::vector<int>> table;
};

CosetTable todd_coxeter(const GroupPresentation& pres, const std::vector<Word>& subgroup,
                        std::size_t max_cosets = 2000000);

/// Kernel of the map to Z/2 sending meridians to 1, via the transversal
/// {1, m} with m the first meridian. Generators: x_j m^-1 (j != m), then
/// m x_j for every j.
GroupPresentation reidemeister_schreier_index2(const GroupPresentation& pres);

/// The kernel presentation plus the lifts of every meridian square.
GroupPresentation branched_cover_presentation(const GroupPresentation& pres);

}  // namespace slicecert::groups
