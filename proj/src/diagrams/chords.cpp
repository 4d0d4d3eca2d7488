#include "slicecert/diagrams.hpp"
#include "slicecert/errors.hpp"

namespace slicecert::diagrams {

void check_chord_diagram(const ChordDiagram& cd) {
  if (cd.endpoints != 2 * static_cast<int>(cd.chords.size())) {
    throw StructuralError("chord diagram endpoint count must be twice the chord count");
  }
  std::vector<int> used(cd.endpoints + 1, 0);
  for (const Chord& c : cd.chords) {
    if (c.over == c.under) throw StructuralError("chord with coincident endpoints");
    for (int e : {c.over, c.under}) {
      if (e < 1 || e > cd.endpoints) throw StructuralError("chord endpoint out of range");
      if (used[e]++) throw StructuralError("endpoint " + std::to_string(e) + " used twice");
    }
  }
}

ChordDiagram chord_diagram_of_tangle(const PlatWord& plat) {
  validate_plat(plat);
  const int n = plat.strands;
  const int len = static_cast<int>(plat.word.size());

  ChordDiagram cd;
  cd.endpoints = 2 * len;
  cd.chords.assign(len, Chord{});
  cd.bridge_segments.assign(plat.bridges(), -1);

  // Walk from the cut on the last bottom cap: up the right leg, around the
  // whole closure, and back down the left leg.
  int pos = n, level = len, dir = -1;
  int visits = 0;
  while (true) {
    if (dir < 0) {
      if (level == 0) {
        cd.bridge_segments[(pos - 1) / 2] = visits;
        pos = (pos % 2 == 1) ? pos + 1 : pos - 1;
        dir = 1;
        continue;
      }
      const Letter& l = plat.word[level - 1];
      if (pos == l.gen || pos == l.gen + 1) {
        const bool on_nw_se = pos == l.gen + 1;
        const bool over = (l.sign > 0) == on_nw_se;
        Chord& ch = cd.chords[level - 1];
        (over ? ch.over : ch.under) = ++visits;
        ch.sign = l.sign;
        pos = (pos == l.gen) ? l.gen + 1 : l.gen;
      }
      --level;
    } else {
      if (level == len) {
        if (pos == n - 1) break;  // back at the cut
        pos = (pos % 2 == 1) ? pos + 1 : pos - 1;
        dir = -1;
        continue;
      }
      const Letter& l = plat.word[level];
      if (pos == l.gen || pos == l.gen + 1) {
        const bool on_nw_se = pos == l.gen;
        const bool over = (l.sign > 0) == on_nw_se;
        Chord& ch = cd.chords[level];
        (over ? ch.over : ch.under) = ++visits;
        ch.sign = l.sign;
        pos = (pos == l.gen) ? l.gen + 1 : l.gen;
      }
      ++level;
    }
  }
  check_chord_diagram(cd);
  return cd;
}

}  // namespace slicecert::diagrams
