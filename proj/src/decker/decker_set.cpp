#include "slicecert/decker.hpp"
#include "slicecert/errors.hpp"

namespace slicecert::decker {

void check_decker_set(const DeckerSet& ds) {
  if (ds.L < 0 || ds.M < kMinResolution) throw StructuralError("decker set has bad dimensions");
  if (static_cast<int>(ds.circle_pair.size()) != ds.L + 1 ||
      static_cast<int>(ds.circle_over.size()) != ds.L + 1) {
    throw StructuralError("decker set circle tables have the wrong size");
  }
  std::vector<int> uses(ds.L + 1, 0);
  for (std::size_t i = 0; i < ds.pairs.size(); ++i) {
    const auto& p = ds.pairs[i];
    if (p.over_circle < 1 || p.over_circle > ds.L || p.under_circle < 1 || p.under_circle > ds.L) {
      throw StructuralError("pair " + std::to_string(i) + " names a missing circle");
    }
    if (p.over_circle == p.under_circle) {
      throw StructuralError("pair " + std::to_string(i) + " uses one circle twice");
    }
    for (int c : {p.over_circle, p.under_circle}) {
      ++uses[c];
      if (ds.circle_pair[c] != static_cast<int>(i)) throw StructuralError("circle table disagrees");
    }
    if (!ds.circle_over[p.over_circle] || ds.circle_over[p.under_circle]) {
      throw StructuralError("over flags disagree with pair " + std::to_string(i));
    }
  }
  for (int c = 1; c <= ds.L; ++c) {
    if (uses[c] != 1) throw StructuralError("circle " + std::to_string(c) + " is not in exactly one pair");
  }
  for (int r : ds.bridge_region) {
    if (r < 0 || r > ds.L) throw StructuralError("bridge region out of range");
  }
}

DeckerSet spin_chord_diagram(const diagrams::ChordDiagram& cd, int M) {
  diagrams::check_chord_diagram(cd);
  if (M < kMinResolution) {
    throw InputError("resolution " + std::to_string(M) + " is below the minimum " +
                     std::to_string(kMinResolution));
  }
  if (M % 2) throw InputError("resolution must be even");
  DeckerSet ds;
  ds.L = cd.endpoints;
  ds.M = M;
  ds.circle_pair.assign(ds.L + 1, -1);
  ds.circle_over.assign(ds.L + 1, false);
  for (const auto& ch : cd.chords) {
    ds.circle_pair[ch.over] = ds.circle_pair[ch.under] = static_cast<int>(ds.pairs.size());
    ds.circle_over[ch.over] = true;
    ds.pairs.push_back({ch.over, ch.under, ch.sign});
  }
  ds.bridge_region = cd.bridge_segments;
  check_decker_set(ds);
  return ds;
}

}  // namespace slicecert::decker
