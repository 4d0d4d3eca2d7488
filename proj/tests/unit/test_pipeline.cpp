#include <doctest.h>

#include <sstream>

#include "slicecert/errors.hpp"
#include "slicecert/pipeline.hpp"
#include "support.hpp"

using namespace slicecert;
using namespace slicecert::pipeline;
using namespace testsupport;

namespace {

const Premise& premise(const Certificate& c, const std::string& name) {
  for (const auto& p : c.premises)
    if (p.name == name) return p;
  FAIL("no premise " << name);
  return c.premises.front();
}

}  // namespace

TEST_CASE("named groups") {
  CHECK(named_group("S3").order() == 6);
  CHECK(named_group("A5").order() == 60);
  CHECK(named_group("C7").order() == 7);
  CHECK(named_group("SL(2,5)").order() == 120);
  CHECK(named_group("icosians").order() == 120);
  CHECK(named_group("1").order() == 1);
  CHECK_THROWS_AS(named_group("S9"), InputError);
  CHECK_THROWS_AS(named_group("PSL(2,7)"), InputError);
  CHECK(default_battery() == std::vector<std::string>{"S3", "A4", "S4", "A5"});
}

TEST_CASE("certify the homology-sphere example") {
  auto c = certify(t35(), {{2, 2, 2}});
  CHECK(c.verdict == "obstruction-premises-verified");
  CHECK(exit_code(c) == 0);
  CHECK(c.axioms().size() == 4);
  REQUIRE(c.cases.size() == 3);
  CHECK(c.cases[0].image == "1");
  CHECK(c.cases[1].image == "A5");
  CHECK(c.cases[2].image == "SL(2,5)");
  for (const auto& k : c.cases) CHECK(k.closed);
  for (const auto& p : c.premises)
    if (p.status != PremiseStatus::kAxiom) CHECK(p.status == PremiseStatus::kPass);
  CHECK(premise(c, "homology-sphere").evidence["det_goeritz"] == "1");
  CHECK(premise(c, "homology-sphere").evidence["det_fox"] == "1");
}

TEST_CASE("certificates fail at the first broken premise") {
  auto tref = certify(trefoil(), {{2, 2}});
  CHECK(tref.verdict == "failed: homology-sphere");
  CHECK(exit_code(tref) == 1);
  auto mixed = certify(t35(), {{2, -2, 2}});
  CHECK(mixed.verdict == "failed: definite-cobordism");
  CHECK(premise(mixed, "slice-of-spun-knot").status == PremiseStatus::kPass);
  CHECK(certify(t35(), {{0, 0, 0}}).verdict == "failed: definite-cobordism");
  CHECK_THROWS_AS(certify(t35(), {{2, 1, 2}}), InputError);
  CHECK_THROWS_AS(certify(t35(), {{2, 2}}), InputError);
}

TEST_CASE("budgets turn into inconclusive verdicts") {
  CertifyConfig cfg;
  cfg.max_cosets = 50;
  auto c = certify(t35(), {{2, 2, 2}}, cfg);
  CHECK(c.verdict.rfind("inconclusive: ", 0) == 0);
  CHECK(exit_code(c) == 2);
}

TEST_CASE("JSON output is deterministic") {
  auto a = to_json(certify(t35(), {{2, 2, 2}})).dump(2);
  auto b = to_json(certify(t35(), {{2, 2, 2}})).dump(2);
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["schema"] == 1);
  CHECK(a.find("\"seconds\"") == std::string::npos);
  CHECK(j["verdict"] == "obstruction-premises-verified");

  CertifyConfig timed;
  timed.record_timing = true;
  CHECK(to_json(certify(t35(), {{2, 2, 2}}, timed)).dump().find("\"seconds\"") != std::string::npos);
  CHECK(to_text(certify(trefoil(), {{2, 2}})).find("failed: homology-sphere") != std::string::npos);
}

TEST_CASE("rendering is byte-stable") {
  auto cd = diagrams::chord_diagram_of_tangle(figure8());
  auto ds = decker::spin_chord_diagram(cd);
  auto curve = decker::trace_double_curve(ds, cd);
  auto pd = diagrams::plat_to_pd(figure8()).pd;
  CHECK(render_chord_diagram_svg(cd) == render_chord_diagram_svg(cd));
  CHECK(render_decker_svg(ds, &curve) == render_decker_svg(ds, &curve));
  CHECK(render_pd_svg(pd) == render_pd_svg(pd));
  CHECK(render_decker_svg(ds, &curve) != render_decker_svg(ds, nullptr));
  auto empty = render_chord_diagram_svg(diagrams::chord_diagram_of_tangle(unknot()));
  CHECK(empty.find("<svg") != std::string::npos);
  CHECK(empty.find("</svg>") != std::string::npos);
}

TEST_CASE("corpus regression") {
  auto shipped = corpus_run(std::filesystem::path(SLICECERT_CORPUS_DIR) / "manifest.txt");
  CHECK(shipped.all_pass());
  CHECK(shipped.rows.size() >= 13);

  std::istringstream wrong("knot trefoil trefoil.plat - det=5\n");
  auto bad = corpus_run(wrong, SLICECERT_CORPUS_DIR);
  REQUIRE(bad.rows.size() == 1);
  CHECK_FALSE(bad.all_pass());
  CHECK(bad.rows[0].checks[0].actual == "3");
  CHECK(bad.table().find("trefoil") != std::string::npos);

  std::istringstream empty("# nothing\n\n");
  auto none = corpus_run(empty, SLICECERT_CORPUS_DIR);
  CHECK(none.rows.empty());
  CHECK(none.all_pass());

  std::istringstream malformed("knot a trefoil.plat - det=3\nknot b\n");
  CHECK_THROWS_WITH_AS(corpus_run(malformed, SLICECERT_CORPUS_DIR), doctest::Contains("manifest line 2"),
                       InputError);

  std::istringstream missing("knot ghost nowhere.plat - det=1\n");
  CHECK_THROWS_WITH_AS(corpus_run(missing, SLICECERT_CORPUS_DIR), doctest::Contains("manifest line 1"),
                       InputError);
}
