#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace slicecert::diagrams {

/// One elementary crossing between adjacent plat positions `gen` and
/// `gen + 1` (1-based). With sign +1 the strand entering from the upper
/// left passes over; with -1 the strand entering from the upper right does.
struct Letter {
  int gen = 1;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A plat: `strands` = 2b vertical positions, caps joining (1,2), (3,4), ...
/// at the top and at the bottom, and a word of crossings read top to bottom.
struct PlatWord {
  int strands = 2;
  std::vector<Letter> word;

  int bridges() const { return strands / 2; }
  friend bool operator==(const PlatWord&, const PlatWord&) = default;
};

/// A vertical piece of strand at `position` (1-based) just above letter
/// `level` (level == word length means below the last letter).
struct Segment {
  int position = 1;
  int level = 0;
};

/// Result of validate_plat: the word plus the strand tracing data.
struct PlatHandle {
  PlatWord plat;
  int components = 1;
  // permutation[p-1] = bottom position reached by the strand entering at top
  // position p, following crossings only (caps ignored).
  std::vector<int> permutation;
};

/// Checks the closure is a single-component knot; throws InputError otherwise.
PlatHandle validate_plat(const PlatWord& plat);

/// Number of closed components of the plat closure (no validation).
int plat_components(const PlatWord& plat);

/// Vertical reflection: reversed word with inverted signs. Closes to the
/// mirror image.
PlatWord mirror(const PlatWord& plat);

/// Reflection in a vertical line: letter (k, s) becomes (strands - k, -s).
/// Also closes to the mirror image, but keeps caps facing the same way.
PlatWord reflect_left_right(const PlatWord& plat);

PlatWord parse_plat(std::istream& in);
PlatWord parse_plat_string(const std::string& text);
PlatWord load_plat(const std::string& path);
std::string format_plat(const PlatWord& plat);

/// Comma-separated integers, e.g. "2,-2,2".
std::vector<int> parse_twists(const std::string& text);

// ---------------------------------------------------------------------------
// PD codes

/// One crossing: four edge labels counterclockwise starting from the
/// incoming under-strand; `sign` is the oriented crossing sign.
struct PDCrossing {
  std::array<int, 4> edges{};
  int sign = 1;

  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

struct PDCode {
  std::vector<PDCrossing> crossings;

  int edge_count() const { return 2 * static_cast<int>(crossings.size()); }
};

/// Throws StructuralError unless every label 1..2n occurs exactly twice and
/// the crossing graph is connected.
void check_pd(const PDCode& pd);

/// PD code together with the edge carried by each plat segment.
struct PlatDiagram {
  PDCode pd;
  // edge label of each segment, indexed [level][position - 1]. The
  // crossing-free unknot has a single edge labelled 1.
  std::vector<std::vector<int>> segment_edge;
  // +1 if the knot runs downward through the segment, -1 upward.
  std::vector<std::vector<int>> segment_direction;

  int edge_at(Segment s) const { return segment_edge[s.level][s.position - 1]; }
  int direction_at(Segment s) const {
    return segment_direction[s.level][s.position - 1];
  }
};

/// Edges are numbered along the knot starting at the top of position 1,
/// heading down.
PlatDiagram plat_to_pd(const PlatWord& plat);

std::string format_pd(const PDCode& pd);

// ---------------------------------------------------------------------------
// Chord diagrams of the (1,1)-tangle

struct Chord {
  int over = 0;   // endpoint index (1-based) of the over-crossing visit
  int under = 0;  // endpoint index of the under-crossing visit
  int sign = 1;   // sign of the plat letter the chord came from

  friend bool operator==(const Chord&, const Chord&) = default;
};

/// 2n endpoints on an interval, in traversal order of the tangle core.
struct ChordDiagram {
  int endpoints = 0;
  std::vector<Chord> chords;
  // For each bridge j of the source plat, the index of the tangle segment
  // containing the top of cap j: segment s lies between endpoints s and s+1
  // (0 = before the first endpoint, endpoints = after the last).
  std::vector<int> bridge_segments;
};

void check_chord_diagram(const ChordDiagram& cd);

/// Cuts the plat closure open on the last bottom cap and records each
/// crossing visit while walking the core from the cut.
ChordDiagram chord_diagram_of_tangle(const PlatWord& plat);

// ---------------------------------------------------------------------------
// Symmetric unions

/// Per-bridge half-twist counts.
struct TwistVector {
  std::vector<int> entries;

  bool all_even() const;
  bool all_zero() const;
};

enum class Handedness { kLeftOver, kRightOver };

struct SymmetricUnionConfig {
  // Which plat letter realises one positive (right-handed) half twist.
  Handedness positive_twist = Handedness::kLeftOver;
  bool require_even = true;
};

/// Location of one band of the canonical ribbon disc inside the K#K̄ plat.
struct BandSite {
  int bridge = 0;              // 1-based bridge index of K
  Segment k_side;              // top of the right leg of cap j
  Segment mirror_side;         // top of the left leg of the mirrored cap
};

struct SymmetricUnion {
  PlatWord base;       // K
  TwistVector twists;
  PlatWord sum;        // K # K̄, the zero-twist member
  PlatWord knot;       // J
  std::vector<BandSite> bands;  // one per bridge, located in `sum`
};

/// K # K̄ in plat form on 4b strands. The mirror copy is K reflected across
/// the vertical line between positions 2b and 2b+1, and the two bottom caps
/// adjacent to that line are joined by the letters (2b-1,+)(2b,+):
///   sum = w · reflect_left_right(w) shifted · (2b-1,+1)(2b,+1).
PlatWord connected_sum_with_mirror(const PlatWord& plat);

/// Adds t_j half twists to band j. Each band is brought next to the symmetry
/// line by sliding the right leg of cap j (and its mirror) over caps j+1..b,
/// twisted, and slid back. The twist blocks are inserted at the top of the
/// word in bridge order.
SymmetricUnion build_symmetric_union(const PlatWord& plat, const TwistVector& tv,
                                     const SymmetricUnionConfig& config = {});

}  // namespace slicecert::diagrams
