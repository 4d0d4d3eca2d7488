#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "slicecert/covers.hpp"
#include "slicecert/errors.hpp"
#include "slicecert/pipeline.hpp"

namespace slicecert::pipeline {

bool CorpusRow::ok() const {
  if (!error.empty()) return false;
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

bool CorpusReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.ok()) return false;
  return true;
}

std::string CorpusReport::table() const {
  std::ostringstream out;
  out << "row\tfield\texpected\tactual\tresult\n";
  for (const auto& r : rows) {
    if (!r.error.empty()) out << r.name << "\t-\t-\t-\terror: " << r.error << "\n";
    for (const auto& c : r.checks) {
      out << r.name << "\t" << c.field << "\t" << c.expected << "\t" << c.actual << "\t"
          << (c.ok ? "pass" : "FAIL") << "\n";
    }
  }
  int passed = 0;
  for (const auto& r : rows) passed += r.ok();
  out << passed << "/" << rows.size() << " rows pass\n";
  return out.str();
}

namespace {

struct RowInput {
  diagrams::PlatWord plat;
  diagrams::TwistVector tv;
  int resolution;
};

using Field = std::function<std::string(const RowInput&)>;

const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> table = {
      {"det", [](const RowInput& in) { return covers::determinant(diagrams::plat_to_pd(in.plat).pd).str(); }},
      {"fox",
       [](const RowInput& in) {
         return covers::alexander_det(groups::wirtinger(diagrams::plat_to_pd(in.plat).pd)).str();
       }},
      {"cover_h1",
       [](const RowInput& in) {
         auto cover = groups::branched_cover_presentation(groups::wirtinger(diagrams::plat_to_pd(in.plat).pd));
         auto ab = groups::abelianization(cover);
         return ab.free_rank ? std::string("inf") : ab.torsion_order().str();
       }},
      {"det_j",
       [](const RowInput& in) {
         auto su = diagrams::build_symmetric_union(in.plat, in.tv);
         return covers::determinant(diagrams::plat_to_pd(su.knot).pd).str();
       }},
      {"slice",
       [](const RowInput& in) {
         auto cd = diagrams::chord_diagram_of_tangle(in.plat);
         auto ds = decker::spin_chord_diagram(cd, in.resolution);
         auto result = decker::check_slice_criterion(ds, decker::symmetric_union_curve(ds, cd, in.tv));
         return std::string(result.pass() ? "pass" : "fail");
       }},
      {"definite",
       [](const RowInput& in) {
         auto lm = covers::cobordism_linking_matrix(covers::surgery_description(in.plat, in.tv));
         return covers::to_string(covers::is_definite(lm));
       }},
  };
  return table;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InputError("manifest line " + std::to_string(line) + ": " + msg);
}

}  // namespace

CorpusReport corpus_run(std::istream& manifest, const std::filesystem::path& base_dir, int resolution) {
  CorpusReport report;
  std::string line;
  for (int n = 1; std::getline(manifest, line); ++n) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string kw, name, path, twists;
    if (!(ls >> kw)) continue;
    if (kw != "knot") fail(n, "expected 'knot <name> <plat> <twists|-> field=value...'");
    if (!(ls >> name >> path >> twists)) fail(n, "expected name, plat path and twists");

    RowInput in;
    in.resolution = resolution;
    try {
      in.plat = diagrams::load_plat((base_dir / path).string());
    } catch (const InputError& e) {
      fail(n, e.what());
    }
    if (twists == "-") {
      in.tv.entries.assign(in.plat.bridges(), 0);
    } else {
      try {
        in.tv.entries = diagrams::parse_twists(twists);
      } catch (const InputError& e) {
        fail(n, e.what());
      }
    }

    CorpusRow row;
    row.name = name;
    row.line = n;
    std::vector<std::pair<std::string, std::string>> wanted;
    for (std::string tok; ls >> tok;) {
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) fail(n, "expected field=value, got '" + tok + "'");
      std::string field = tok.substr(0, eq);
      if (!fields().count(field)) fail(n, "unknown field '" + field + "'");
      wanted.emplace_back(field, tok.substr(eq + 1));
    }
    for (const auto& [field, expected] : wanted) {
      CorpusCheck check{field, expected, "", false};
      try {
        check.actual = fields().at(field)(in);
        check.ok = check.actual == expected;
      } catch (const std::exception& e) {
        check.actual = std::string("error: ") + e.what();
      }
      row.checks.push_back(check);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

CorpusReport corpus_run(const std::filesystem::path& manifest, int resolution) {
  std::ifstream in(manifest);
  if (!in) throw InputError("cannot open manifest " + manifest.string());
  return corpus_run(in, manifest.parent_path(), resolution);
}

}  // namespace slicecert::pipeline
