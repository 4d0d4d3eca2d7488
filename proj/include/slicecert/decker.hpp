#pragma once

#include <boost/rational.hpp>
#include <iosfwd>
#include <string>
#include <vector>

#include "slicecert/diagrams.hpp"

namespace slicecert::decker {

/// Marked latitude circles 1..L on a sphere sampled at M longitudes. Region
/// ℓ lies between circles ℓ and ℓ+1; regions 0 and L are polar discs.
struct DeckerSet {
  struct Pair {
    int over_circle = 0;   // α_i
    int under_circle = 0;  // β_i
    int sign = 1;
  };
  int L = 0;
  int M = 0;
  std::vector<Pair> pairs;
  std::vector<int> circle_pair;    // index 1..L, 0-based pair id
  std::vector<bool> circle_over;   // index 1..L
  std::vector<int> bridge_region;  // per bridge, the spun region of its top arc

  int regions() const { return L + 1; }
};

constexpr int kMinResolution = 8;

/// Throws StructuralError on broken pairing.
void check_decker_set(const DeckerSet& ds);

/// Circle c+1 is chord endpoint c in tangle order. Throws InputError when
/// M < kMinResolution.
DeckerSet spin_chord_diagram(const diagrams::ChordDiagram& cd, int M = kMinResolution);

/// Grid vertex. row -1 is the north pole, row == total rows is the south
/// pole; lon is ignored at poles.
struct GridVertex {
  int row = 0;
  int lon = 0;
  friend bool operator==(const GridVertex&, const GridVertex&) = default;
  friend auto operator<=>(const GridVertex&, const GridVertex&) = default;
};

/// Simple cycle on the grid. Region ℓ owns rows[ℓ] consecutive rows; circle
/// ℓ runs between the last row of region ℓ-1 and the first row of region ℓ.
struct SliceCurve {
  int M = 0;
  std::vector<int> rows;          // per region, each >= 1
  std::vector<GridVertex> cycle;  // closed implicitly

  int total_rows() const;
  int first_row(int region) const;
  bool is_north(const GridVertex& v) const { return v.row < 0; }
  bool is_south(const GridVertex& v) const { return v.row >= total_rows(); }
  friend bool operator==(const SliceCurve&, const SliceCurve&) = default;
};

enum class MoveKind { kH, kV, kX, kP };

/// Classifies the step a -> b; throws StructuralError if it is not a grid
/// edge.
MoveKind classify_move(const SliceCurve& c, const GridVertex& a, const GridVertex& b);

/// Throws StructuralError unless the curve is a vertex-simple grid cycle
/// with an even number of crossings on every circle of ds.
void validate_curve(const DeckerSet& ds, const SliceCurve& c);

struct CircleCrossing {
  int circle = 0;
  boost::rational<int> lon;  // k / M, so resolution changes compare equal
  friend bool operator==(const CircleCrossing&, const CircleCrossing&) = default;
  friend bool operator<(const CircleCrossing& a, const CircleCrossing& b) {
    return a.circle != b.circle ? a.circle < b.circle : a.lon < b.lon;
  }
};

/// Sorted crossing set of γ with the marked circles.
std::vector<CircleCrossing> crossings(const SliceCurve& c);

/// Descends along `descent[ℓ-1]` and climbs back along `ascent[ℓ-1]`,
/// passing both poles. Horizontal runs take the shorter way round.
SliceCurve two_strand_curve(const DeckerSet& ds, int M, const std::vector<int>& descent,
                            const std::vector<int>& ascent);

/// The K#K̄ curve: descent near longitude 0, ascent near M/2. Over circles
/// are crossed at +1 going down and -1 going up, under circles the reverse.
SliceCurve trace_double_curve(const DeckerSet& ds, const diagrams::ChordDiagram& cd);

/// Unknot curve on a circle-free decker set: N, (0,0), S, (0,M/2).
SliceCurve pole_to_pole_curve(int M);

/// Multiplies the resolution; crossing sets are unchanged.
SliceCurve refine_longitudes(const SliceCurve& c, int factor);
SliceCurve rotate_longitudes(const SliceCurve& c, int shift);
SliceCurve reverse_orientation(const SliceCurve& c);

/// Label at (circle ℓ, k+½) and at integer points, 1 or 2; 0 marks a
/// crossing of γ. Side 1 is the component of the north pole; when γ passes
/// through the pole it is the polar face east of γ's step leaving it.
struct SideMap {
  int M = 0;
  std::vector<std::vector<int>> midpoint;  // [circle][k] at k+½
  std::vector<std::vector<int>> point;     // [circle][k] at k
};

SideMap side_map(const DeckerSet& ds, const SliceCurve& c);

enum class Verdict { kPassForward, kPassReverse, kFail };
std::string to_string(Verdict v);

struct CriterionResult {
  bool forward = false;  // f_i(F1 ∩ α_i) ⊂ F1 ∩ β_i for all i
  bool reverse = false;  // f_i(F1 ∩ β_i) ⊂ F1 ∩ α_i for all i
  std::string witness;   // first violation of the forward inclusion
  SideMap sides;

  Verdict verdict() const {
    return forward ? Verdict::kPassForward : reverse ? Verdict::kPassReverse : Verdict::kFail;
  }
  bool pass() const { return forward || reverse; }
};

CriterionResult check_slice_criterion(const DeckerSet& ds, const SliceCurve& c);

/// Inserts |n|·M rows at the top of annular region ℓ and shears every strand
/// through them by one longitude per row, n full turns in total. Doubles M
/// first while strands entering the region are closer than 2 samples.
SliceCurve dehn_twist_annulus(const SliceCurve& c, int region, int n);

/// trace_double_curve plus t_j/2 full twists in each bridge region. Bridges
/// whose region is a polar disc are skipped: a twist there is isotopic to
/// the identity.
SliceCurve symmetric_union_curve(const DeckerSet& ds, const diagrams::ChordDiagram& cd,
                                 const diagrams::TwistVector& tv);

std::string format_decker_set(const DeckerSet& ds);
DeckerSet parse_decker_set(std::istream& in);
std::string format_curve(const SliceCurve& c);
SliceCurve parse_curve(std::istream& in);

}  // namespace slicecert::decker
