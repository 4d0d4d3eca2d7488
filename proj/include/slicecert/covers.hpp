#pragma once

#include <string>
#include <vector>

#include "slicecert/diagrams.hpp"
#include "slicecert/groups/presentation.hpp"

namespace slicecert::covers {

using groups::BigInt;
using groups::IntMatrix;

/// Determinant by fraction-free (Bareiss) elimination. The 0x0 determinant
/// is 1.
BigInt integer_determinant(IntMatrix m);

struct GoeritzMatrix {
  IntMatrix matrix;           // one row/column per indexed region, deleted one removed
  int region_count = 0;       // all faces of the diagram
  std::vector<int> indexed;   // face ids of the colour class used, deleted first
};

/// Goeritz matrix over the colour class containing the face left of edge 1
/// (for plat diagrams, the unbounded face at the top-left). That face is the
/// deleted one. Throws StructuralError when the faces are not 2-colourable.
GoeritzMatrix goeritz(const diagrams::PDCode& pd);

/// |det(Goeritz)| = |H_1| of the double branched cover.
BigInt determinant(const diagrams::PDCode& pd);

/// |Δ(-1)| from the Fox Jacobian of a meridian-marked presentation.
/// Requires relators = generators or generators - 1.
BigInt alexander_det(const groups::GroupPresentation& pres);

struct SurgeryCurve {
  int band = 0;        // 1-based bridge index
  int half_twists = 0; // t_j
  int k_arc = 0;       // Wirtinger arc of K#K̄ on the K side
  int mirror_arc = 0;  // its partner on the mirror side
  int framing = 0;     // -sign(t_j)
};

struct SurgeryDescription {
  diagrams::PlatWord ambient;  // K#K̄
  std::vector<SurgeryCurve> curves;
};

/// One ±1-framed band meridian per nonzero entry of tv. A positive twist is
/// realised by -1 surgery.
SurgeryDescription surgery_description(const diagrams::PlatWord& plat,
                                       const diagrams::TwistVector& tv,
                                       const diagrams::SymmetricUnionConfig& config = {});

struct LinkingMatrix {
  IntMatrix matrix;
  std::vector<std::string> basis;  // "band j"
};

/// diag(-framing_j): the lifted curves are pairwise unlinked.
LinkingMatrix cobordism_linking_matrix(const SurgeryDescription& sd);

enum class Definiteness { kPositive, kNegative, kIndefinite, kEmpty };
std::string to_string(Definiteness d);

/// Throws InputError on a non-diagonal matrix.
Definiteness is_definite(const LinkingMatrix& m);

std::string format_matrix(const IntMatrix& m);
std::string matrix_json(const IntMatrix& m);

}  // namespace slicecert::covers
