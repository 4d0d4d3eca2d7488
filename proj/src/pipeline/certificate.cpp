#include <chrono>
#include <functional>
#include <regex>
#include <sstream>

#include "slicecert/covers.hpp"
#include "slicecert/errors.hpp"
#include "slicecert/pipeline.hpp"

namespace slicecert::pipeline {

using nlohmann::ordered_json;

groups::FiniteGroup named_group(const std::string& name) {
  static const std::regex family("([SAC])([1-7])");
  std::smatch m;
  if (std::regex_match(name, m, family)) {
    int n = std::stoi(m[2]);
    switch (m[1].str()[0]) {
      case 'S': return groups::symmetric_group(n);
      case 'A': return groups::alternating_group(n);
      default: return groups::cyclic_group(n);
    }
  }
  if (name == "SL(2,5)" || name == "SL25") return groups::sl2_f5();
  if (name == "icosians") return groups::icosian_group();
  if (name == "1") return groups::trivial_group();
  throw InputError("unknown battery group '" + name + "'");
}

std::vector<std::string> default_battery() { return {"S3", "A4", "S4", "A5"}; }

std::string to_string(PremiseStatus s) {
  switch (s) {
    case PremiseStatus::kPass: return "pass";
    case PremiseStatus::kFail: return "fail";
    case PremiseStatus::kInconclusive: return "inconclusive";
    case PremiseStatus::kAxiom: return "axiom";
  }
  return "inconclusive";
}

std::vector<std::string> Certificate::axioms() const {
  std::vector<std::string> out;
  for (const auto& p : premises)
    if (p.status == PremiseStatus::kAxiom) out.push_back(p.name);
  return out;
}

namespace {

PremiseStatus pass_if(bool ok) { return ok ? PremiseStatus::kPass : PremiseStatus::kFail; }

std::string bigint(const groups::BigInt& v) { return v.str(); }

ordered_json hom_json(const groups::HomCount& h) {
  ordered_json j;
  j["complete"] = h.complete;
  if (h.complete) j["count"] = h.count;
  j["nodes"] = h.nodes;
  return j;
}

}  // namespace

Certificate certify(const diagrams::PlatWord& plat, const diagrams::TwistVector& tv,
                    const CertifyConfig& config) {
  diagrams::validate_plat(plat);
  if (static_cast<int>(tv.entries.size()) != plat.bridges()) {
    throw InputError("twist vector needs " + std::to_string(plat.bridges()) + " entries");
  }
  if (!tv.all_even()) throw InputError("certify needs an even twist vector");
  std::vector<groups::FiniteGroup> battery;
  for (const auto& name : config.battery) battery.push_back(named_group(name));

  Certificate cert;
  cert.tool_version = kToolVersion;
  cert.plat = diagrams::format_plat(plat);
  cert.twists = tv.entries;
  cert.config = config;

  const diagrams::SymmetricUnion su = diagrams::build_symmetric_union(plat, tv, config.symmetric_union);
  const diagrams::PDCode pd_k = diagrams::plat_to_pd(plat).pd;
  const diagrams::PDCode pd_j = diagrams::plat_to_pd(su.knot).pd;
  const groups::GroupPresentation knot_group = groups::wirtinger(pd_k);

  auto run = [&](std::string name, std::string statement, const std::function<void(Premise&)>& body) {
    Premise p;
    p.name = std::move(name);
    p.statement = std::move(statement);
    auto t0 = std::chrono::steady_clock::now();
    body(p);
    p.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    cert.premises.push_back(std::move(p));
  };

  run("slice-of-spun-knot", "J is drawn on the decker set of the spun knot and passes the slice criterion",
      [&](Premise& p) {
        const auto cd = diagrams::chord_diagram_of_tangle(plat);
        const auto ds = decker::spin_chord_diagram(cd, config.resolution);
        const auto curve = decker::symmetric_union_curve(ds, cd, tv);
        const auto result = decker::check_slice_criterion(ds, curve);
        p.status = pass_if(result.pass());
        p.evidence["circles"] = ds.L;
        p.evidence["pairs"] = ds.pairs.size();
        p.evidence["resolution"] = curve.M;
        p.evidence["curve_vertices"] = curve.cycle.size();
        p.evidence["crossings"] = decker::crossings(curve).size();
        p.evidence["forward"] = result.forward;
        p.evidence["reverse"] = result.reverse;
        p.evidence["verdict"] = decker::to_string(result.verdict());
        if (!result.pass()) p.evidence["witness"] = result.witness;
      });

  run("homology-sphere", "the double branched cover of J is an integer homology sphere (det J = 1)",
      [&](Premise& p) {
        const auto goeritz = covers::determinant(pd_j);
        const auto fox = covers::alexander_det(groups::wirtinger(pd_j));
        p.status = pass_if(goeritz == 1 && fox == 1);
        p.evidence["crossings"] = pd_j.crossings.size();
        p.evidence["det_goeritz"] = bigint(goeritz);
        p.evidence["det_fox"] = bigint(fox);
      });

  run("definite-cobordism", "the band surgery cobordism has a definite diagonal intersection form",
      [&](Premise& p) {
        const auto sd = covers::surgery_description(plat, tv, config.symmetric_union);
        const auto lm = covers::cobordism_linking_matrix(sd);
        const auto d = covers::is_definite(lm);
        p.status = pass_if(d == covers::Definiteness::kPositive || d == covers::Definiteness::kNegative);
        p.evidence["matrix"] = ordered_json::parse(covers::matrix_json(lm.matrix));
        p.evidence["basis"] = lm.basis;
        p.evidence["definiteness"] = covers::to_string(d);
      });

  run("cobordism-group-collapse",
      "hom counts of the cobordism group agree with the knot group on the battery (semi-decision)",
      [&](Premise& p) {
        const auto cob = groups::cobordism_presentation(su);
        groups::HomCountOptions opt;
        opt.node_budget = config.node_budget;
        const auto report = groups::collapse_check(cob, knot_group, battery, opt);
        p.status = report.verdict == groups::CollapseVerdict::kConsistentCollapse ? PremiseStatus::kPass
                   : report.verdict == groups::CollapseVerdict::kDistinguished ? PremiseStatus::kFail
                                                                               : PremiseStatus::kInconclusive;
        p.evidence["verdict"] = groups::to_string(report.verdict);
        p.evidence["cobordism_generators"] = cob.generators;
        p.evidence["cobordism_relators"] = cob.relators.size();
        ordered_json rows = ordered_json::array();
        for (const auto& r : report.rows) {
          ordered_json row;
          row["group"] = r.group;
          row["cobordism"] = hom_json(r.source);
          row["knot"] = hom_json(r.target);
          rows.push_back(row);
        }
        p.evidence["battery"] = rows;
      });

  run("branched-cover-group", "the double branched cover of K has fundamental group SL(2,5)",
      [&](Premise& p) {
        const auto cover = groups::branched_cover_presentation(knot_group);
        const auto ab = groups::abelianization(cover);
        const auto table = groups::todd_coxeter(cover, {}, config.max_cosets);
        p.evidence["generators"] = cover.generators;
        p.evidence["relators"] = cover.relators.size();
        p.evidence["h1"] = ab.to_string();
        if (table.status != groups::EnumerationStatus::kComplete) {
          p.status = PremiseStatus::kInconclusive;
          p.evidence["todd_coxeter"] = "overflow after " + std::to_string(table.cosets_defined) + " cosets";
          return;
        }
        p.evidence["order"] = table.index;
        bool iso = false;
        if (table.index == 120) {
          // The coset table on the trivial subgroup is the regular action.
          std::vector<groups::Permutation> gens;
          for (int g = 0; g < cover.generators; ++g) {
            groups::Permutation perm(table.index);
            for (std::size_t c = 0; c < table.index; ++c) perm[c] = table.table[c][2 * g];
            gens.push_back(perm);
          }
          iso = groups::iso_check(groups::closure(gens, 121), groups::sl2_f5()).has_value();
        }
        p.evidence["isomorphic_to_sl25"] = iso;
        p.status = pass_if(table.index == 120 && ab.trivial() && iso);
      });

  run("sl25-quotients", "SL(2,5) has exactly the normal subgroups 1, Z/2, SL(2,5), with quotient A5",
      [&](Premise& p) {
        const auto g = groups::sl2_f5();
        const auto r = groups::structure_report(g);
        std::vector<int> orders;
        for (const auto& n : r.normal_subgroups) orders.push_back(static_cast<int>(n.size()));
        bool a5 = r.proper_quotients.size() == 1 &&
                  groups::iso_check(r.proper_quotients[0].group, groups::alternating_group(5)).has_value();
        p.status = pass_if(orders == std::vector<int>{1, 2, 120} && a5 && r.involutions == 1);
        p.evidence["order"] = g.order();
        p.evidence["normal_subgroup_orders"] = orders;
        p.evidence["center_order"] = r.center.size();
        p.evidence["involutions"] = r.involutions;
        p.evidence["quotient_is_a5"] = a5;
      });

  run("a5-no-su2-rep", "A5 is simple with 15 involutions, so it has no nontrivial SU(2) representation",
      [&](Premise& p) {
        const auto g = groups::alternating_group(5);
        const auto r = groups::structure_report(g);
        const auto v = groups::su2_obstruction(g, r);
        p.status = pass_if(v == groups::SU2Verdict::kNoNontrivialRep);
        p.evidence["simple"] = r.simple;
        p.evidence["involutions"] = r.involutions;
        p.evidence["su2"] = groups::to_string(v);
      });

  run("su2-unique-involution",
      "-1 is the only involution among unit quaternions; SL(2,5) embeds via the icosians",
      [&](Premise& p) {
        const auto units = groups::unit_icosians();
        bool unique = true;
        try {
          groups::check_unique_involution(units);
        } catch (const StructuralError&) {
          unique = false;
        }
        const auto ico = groups::icosian_group();
        const auto sl = groups::sl2_f5();
        const bool iso = groups::iso_check(ico, sl).has_value();
        const auto v = groups::su2_obstruction(sl, groups::structure_report(sl));
        p.status = pass_if(unique && iso && v == groups::SU2Verdict::kEmbedsPossible);
        p.evidence["icosians"] = units.size();
        p.evidence["unique_involution"] = unique;
        p.evidence["icosians_isomorphic_to_sl25"] = iso;
        p.evidence["su2_sl25"] = groups::to_string(v);
      });

  auto axiom = [&](std::string name, std::string statement) {
    Premise p;
    p.name = std::move(name);
    p.statement = std::move(statement);
    p.status = PremiseStatus::kAxiom;
    cert.premises.push_back(std::move(p));
  };
  axiom("slice-from-decker-criterion",
        "a separating curve meeting the paired circles as in the criterion is a slice of the surface");
  axiom("taubes-definite-boundary-obstruction",
        "no simply connected definite manifold bounds the sum of the Poincare sphere with its reverse");
  axiom("daemi-su2-extension",
        "a definite manifold bounding that sum (h nonzero) carries a nontrivial SU(2) representation "
        "extending a nontrivial one on the boundary");
  axiom("amalgam-normal-form",
        "in a free product with amalgamation over injective maps the factors embed");

  auto status_of = [&](const std::string& name) {
    for (const auto& p : cert.premises)
      if (p.name == name) return p.status;
    return PremiseStatus::kFail;
  };
  auto closed = [&](const std::vector<std::string>& uses) {
    for (const auto& u : uses) {
      auto s = status_of(u);
      if (s != PremiseStatus::kPass && s != PremiseStatus::kAxiom) return false;
    }
    return true;
  };
  const std::vector<std::string> common{"slice-of-spun-knot", "homology-sphere", "definite-cobordism",
                                        "cobordism-group-collapse", "branched-cover-group",
                                        "sl25-quotients"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> all = common;
    all.insert(all.end(), extra.begin(), extra.end());
    return all;
  };
  cert.cases.push_back({"1", "the capped cobordism is simply connected and definite",
                        with({"slice-from-decker-criterion", "taubes-definite-boundary-obstruction"}),
                        false});
  cert.cases.push_back({"A5", "the boundary representation factors through A5, which has none in SU(2)",
                        with({"a5-no-su2-rep", "slice-from-decker-criterion", "daemi-su2-extension"}),
                        false});
  cert.cases.push_back({"SL(2,5)", "both maps inject, so the amalgam is nontrivial, contradicting pi1 = 1",
                        with({"su2-unique-involution", "slice-from-decker-criterion", "amalgam-normal-form"}),
                        false});
  for (auto& c : cert.cases) c.closed = closed(c.uses);

  cert.verdict = "obstruction-premises-verified";
  for (auto want : {PremiseStatus::kFail, PremiseStatus::kInconclusive}) {
    for (const auto& p : cert.premises) {
      if (p.status == want) {
        cert.verdict = (want == PremiseStatus::kFail ? "failed: " : "inconclusive: ") + p.name;
        return cert;
      }
    }
  }
  return cert;
}

int exit_code(const Certificate& c) {
  if (c.verdict == "obstruction-premises-verified") return 0;
  return c.verdict.rfind("failed", 0) == 0 ? 1 : 2;
}

ordered_json to_json(const Certificate& c) {
  ordered_json j;
  j["schema"] = 1;
  j["tool_version"] = c.tool_version;
  ordered_json input;
  input["plat"] = c.plat;
  input["twists"] = c.twists;
  ordered_json cfg;
  cfg["resolution"] = c.config.resolution;
  cfg["battery"] = c.config.battery;
  cfg["max_cosets"] = c.config.max_cosets;
  cfg["node_budget"] = c.config.node_budget;
  cfg["positive_twist"] = c.config.symmetric_union.positive_twist == diagrams::Handedness::kLeftOver
                              ? "left-over"
                              : "right-over";
  input["config"] = cfg;
  j["input"] = input;
  ordered_json premises = ordered_json::array();
  for (const auto& p : c.premises) {
    ordered_json pj;
    pj["name"] = p.name;
    pj["kind"] = p.status == PremiseStatus::kAxiom ? "axiom" : "checked";
    pj["status"] = to_string(p.status);
    pj["statement"] = p.statement;
    if (p.status != PremiseStatus::kAxiom) pj["evidence"] = p.evidence;
    if (c.config.record_timing && p.status != PremiseStatus::kAxiom) pj["seconds"] = p.seconds;
    premises.push_back(pj);
  }
  j["premises"] = premises;
  j["axioms"] = c.axioms();
  ordered_json cases = ordered_json::array();
  for (const auto& k : c.cases) {
    ordered_json kj;
    kj["image"] = k.image;
    kj["argument"] = k.argument;
    kj["uses"] = k.uses;
    kj["status"] = k.closed ? "closed" : "open";
    cases.push_back(kj);
  }
  j["cases"] = cases;
  j["verdict"] = c.verdict;
  return j;
}

std::string to_text(const Certificate& c) {
  std::ostringstream out;
  out << "slicecert " << c.tool_version << "\n";
  out << "twists:";
  for (int t : c.twists) out << " " << t;
  out << "\n\npremises\n";
  for (const auto& p : c.premises) {
    out << "  [" << to_string(p.status) << "] " << p.name << "\n      " << p.statement << "\n";
    if (p.status != PremiseStatus::kAxiom) out << "      evidence " << p.evidence.dump() << "\n";
    if (c.config.record_timing && p.status != PremiseStatus::kAxiom) out << "      seconds " << p.seconds << "\n";
  }
  out << "\ncases (image G_i of pi1(W))\n";
  for (const auto& k : c.cases) {
    out << "  G_i = " << k.image << ": " << (k.closed ? "closed" : "open") << ", " << k.argument << "\n";
  }
  out << "\nverdict: " << c.verdict << "\n";
  return out.str();
}

}  // namespace slicecert::pipeline
