#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "slicecert/decker.hpp"
#include "slicecert/diagrams.hpp"
#include "slicecert/groups/finite_group.hpp"

namespace slicecert::pipeline {

/// S<n>, A<n>, C<n> (n <= 7), "SL(2,5)", "icosians" or "1".
groups::FiniteGroup named_group(const std::string& name);
std::vector<std::string> default_battery();

struct CertifyConfig {
  int resolution = decker::kMinResolution;
  std::vector<std::string> battery = default_battery();
  std::size_t max_cosets = 2000000;
  std::uint64_t node_budget = 200000000;
  diagrams::SymmetricUnionConfig symmetric_union;
  bool record_timing = false;  // wall-clock seconds break byte determinism
};

enum class PremiseStatus { kPass, kFail, kInconclusive, kAxiom };
std::string to_string(PremiseStatus s);

struct Premise {
  std::string name;
  std::string statement;
  PremiseStatus status = PremiseStatus::kInconclusive;
  nlohmann::ordered_json evidence;
  double seconds = 0;
};

struct CaseRecord {
  std::string image;            // G_i
  std::string argument;
  std::vector<std::string> uses;  // premise and axiom names
  bool closed = false;
};

struct Certificate {
  std::string tool_version;
  std::string plat;  // echo in plat file format
  std::vector<int> twists;
  CertifyConfig config;
  std::vector<Premise> premises;  // checked premises, then axioms
  std::vector<CaseRecord> cases;
  std::string verdict;

  std::vector<std::string> axioms() const;
};

/// Checked premises run in a fixed order; the first red premise names the
/// failure, otherwise the first inconclusive one.
Certificate certify(const diagrams::PlatWord& plat, const diagrams::TwistVector& tv,
                    const CertifyConfig& config = {});

nlohmann::ordered_json to_json(const Certificate& c);
std::string to_text(const Certificate& c);

/// 0 verified, 1 failed premise, 2 inconclusive.
int exit_code(const Certificate& c);

// ---------------------------------------------------------------------------
// SVG

std::string render_chord_diagram_svg(const diagrams::ChordDiagram& cd);
/// Latitudes as horizontal lines: solid for over circles, dashed for under.
std::string render_decker_svg(const decker::DeckerSet& ds, const decker::SliceCurve* curve);
/// Gauss diagram of the PD traversal: edge labels round a circle, one chord
/// per crossing from its under passage to its over passage.
std::string render_pd_svg(const diagrams::PDCode& pd);

// ---------------------------------------------------------------------------
// Corpus

struct CorpusCheck {
  std::string field, expected, actual;
  bool ok = false;
};

struct CorpusRow {
  std::string name;
  int line = 0;
  std::vector<CorpusCheck> checks;
  std::string error;  // set when the row could not be evaluated
  bool ok() const;
};

struct CorpusReport {
  std::vector<CorpusRow> rows;
  bool all_pass() const;
  std::string table() const;
};

/// Manifest lines: `knot <name> <plat path> <twists|-> <field>=<value> ...`
/// with fields det, det_j, fox, cover_h1, slice, definite. Paths are
/// relative to the manifest. Throws InputError with the line number on
/// malformed lines.
CorpusReport corpus_run(const std::filesystem::path& manifest, int resolution = decker::kMinResolution);
CorpusReport corpus_run(std::istream& manifest, const std::filesystem::path& base_dir,
                        int resolution = decker::kMinResolution);

}  // namespace slicecert::pipeline
