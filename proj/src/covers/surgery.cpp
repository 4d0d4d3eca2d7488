#include <sstream>

#include "slicecert/covers.hpp"
#include "slicecert/errors.hpp"

namespace slicecert::covers {

SurgeryDescription surgery_description(const diagrams::PlatWord& plat,
                                       const diagrams::TwistVector& tv,
                                       const diagrams::SymmetricUnionConfig& config) {
  diagrams::SymmetricUnion su = diagrams::build_symmetric_union(plat, tv, config);
  diagrams::PlatDiagram dia = diagrams::plat_to_pd(su.sum);
  std::vector<int> arc = groups::wirtinger_arc_of_edge(dia.pd);
  SurgeryDescription sd;
  sd.ambient = su.sum;
  for (const auto& band : su.bands) {
    int t = tv.entries.at(static_cast<std::size_t>(band.bridge - 1));
    if (t == 0) continue;
    SurgeryCurve c;
    c.band = band.bridge;
    c.half_twists = t;
    c.k_arc = arc.at(dia.edge_at(band.k_side));
    c.mirror_arc = arc.at(dia.edge_at(band.mirror_side));
    c.framing = t > 0 ? -1 : 1;
    sd.curves.push_back(c);
  }
  return sd;
}

LinkingMatrix cobordism_linking_matrix(const SurgeryDescription& sd) {
  LinkingMatrix lm;
  const std::size_t m = sd.curves.size();
  lm.matrix.assign(m, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    lm.matrix[i][i] = -sd.curves[i].framing;
    lm.basis.push_back("band " + std::to_string(sd.curves[i].band));
  }
  return lm;
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::kPositive: return "positive";
    case Definiteness::kNegative: return "negative";
    case Definiteness::kIndefinite: return "indefinite";
    case Definiteness::kEmpty: return "empty";
  }
  return "empty";
}

Definiteness is_definite(const LinkingMatrix& m) {
  const std::size_t n = m.matrix.size();
  if (n == 0) return Definiteness::kEmpty;
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (m.matrix[i].size() != n) throw InputError("linking matrix is not square");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m.matrix[i][j] != 0) throw InputError("linking matrix is not diagonal");
    if (m.matrix[i][i] > 0) pos = true;
    if (m.matrix[i][i] < 0) neg = true;
    if (m.matrix[i][i] == 0) return Definiteness::kIndefinite;
  }
  if (pos && neg) return Definiteness::kIndefinite;
  return pos ? Definiteness::kPositive : Definiteness::kNegative;
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
  return out.str();
}

std::string matrix_json(const IntMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) out << (j ? "," : "") << m[i][j];
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace slicecert::covers
