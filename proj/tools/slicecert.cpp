#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "slicecert/covers.hpp"
#include "slicecert/errors.hpp"
#include "slicecert/pipeline.hpp"

using namespace slicecert;

namespace {

struct Globals {
  std::string twists;
  std::string battery;
  std::size_t max_cosets = 2000000;
  int resolution = decker::kMinResolution;
  std::string out;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + g.out);
  f << text;
}

diagrams::TwistVector twists_for(const Globals& g, const diagrams::PlatWord& plat) {
  diagrams::TwistVector tv;
  if (g.twists.empty()) tv.entries.assign(plat.bridges(), 0);
  else tv.entries = diagrams::parse_twists(g.twists);
  if (static_cast<int>(tv.entries.size()) != plat.bridges()) {
    throw InputError("--twists needs " + std::to_string(plat.bridges()) + " entries");
  }
  return tv;
}

std::vector<std::string> battery_for(const Globals& g) {
  if (g.battery.empty()) return pipeline::default_battery();
  std::vector<std::string> names;
  std::stringstream ss(g.battery);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) names.push_back(item);
  return names;
}

// The knot the command acts on: K, or J when --twists is given.
diagrams::PlatWord subject(const Globals& g, const diagrams::PlatWord& plat) {
  if (g.twists.empty()) return plat;
  return diagrams::build_symmetric_union(plat, twists_for(g, plat)).knot;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for homology spheres built from symmetric unions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--twists", g.twists, "twist vector, e.g. 2,2,2");
  app.add_option("--battery", g.battery, "comma-separated finite groups, e.g. S3,A4,S4,A5");
  app.add_option("--max-cosets", g.max_cosets, "Todd-Coxeter coset ceiling");
  app.add_option("--resolution", g.resolution, "longitude samples on the decker sphere");
  app.add_option("--out", g.out, "write the main output to this file");
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string plat_path;
  bool json = false, timing = false;
  int code = 0;

  auto* validate = app.add_subcommand("validate", "check that a plat closes to a knot");
  validate->add_option("plat", plat_path)->required();
  validate->callback([&] {
    auto plat = diagrams::load_plat(plat_path);
    auto handle = diagrams::validate_plat(plat);
    std::ostringstream out;
    out << "strands " << plat.strands << "\nbridges " << plat.bridges() << "\ncrossings " << plat.word.size()
        << "\ncomponents " << handle.components << "\nvalid\n";
    emit(g, out.str());
  });

  auto* det = app.add_subcommand("det", "determinant of K (or of J with --twists)");
  det->add_option("plat", plat_path)->required();
  det->callback([&] {
    auto knot = subject(g, diagrams::load_plat(plat_path));
    auto pd = diagrams::plat_to_pd(knot).pd;
    auto goeritz = covers::determinant(pd);
    auto fox = covers::alexander_det(groups::wirtinger(pd));
    std::ostringstream out;
    out << "goeritz " << goeritz << "\nfox " << fox << "\n";
    if (goeritz != fox) {
      out << "oracles disagree\n";
      code = 1;
    }
    emit(g, out.str());
  });

  auto* goeritz = app.add_subcommand("goeritz", "Goeritz matrix of K (or of J)");
  goeritz->add_option("plat", plat_path)->required();
  goeritz->add_flag("--json", json, "machine-readable output");
  goeritz->callback([&] {
    auto knot = subject(g, diagrams::load_plat(plat_path));
    auto m = covers::goeritz(diagrams::plat_to_pd(knot).pd);
    emit(g, json ? covers::matrix_json(m.matrix) + "\n" : covers::format_matrix(m.matrix));
  });

  auto* slice = app.add_subcommand("slice-check", "decide the slice criterion for the K#K̄ or J curve");
  slice->add_option("plat", plat_path)->required();
  slice->callback([&] {
    auto plat = diagrams::load_plat(plat_path);
    auto cd = diagrams::chord_diagram_of_tangle(plat);
    auto ds = decker::spin_chord_diagram(cd, g.resolution);
    auto curve = decker::symmetric_union_curve(ds, cd, twists_for(g, plat));
    auto result = decker::check_slice_criterion(ds, curve);
    std::ostringstream out;
    out << decker::format_decker_set(ds) << decker::format_curve(curve);
    out << "# forward " << (result.forward ? "yes" : "no") << ", reverse " << (result.reverse ? "yes" : "no")
        << "\n# verdict " << decker::to_string(result.verdict()) << "\n";
    if (!g.out.empty()) emit(g, out.str());
    std::cout << decker::to_string(result.verdict()) << "\n";
    code = result.pass() ? 0 : 1;
  });

  auto* symunion = app.add_subcommand("symunion", "plat word of the symmetric union J");
  symunion->add_option("plat", plat_path)->required();
  symunion->callback([&] {
    auto plat = diagrams::load_plat(plat_path);
    auto su = diagrams::build_symmetric_union(plat, twists_for(g, plat));
    emit(g, diagrams::format_plat(su.knot));
  });

  auto* pi1 = app.add_subcommand("pi1", "Wirtinger presentation of K (or of J)");
  pi1->add_option("plat", plat_path)->required();
  pi1->callback([&] {
    auto knot = subject(g, diagrams::load_plat(plat_path));
    emit(g, groups::format_presentation(groups::wirtinger(diagrams::plat_to_pd(knot).pd)));
  });

  auto* cover = app.add_subcommand("cover-h1", "H_1 of the double branched cover");
  cover->add_option("plat", plat_path)->required();
  cover->callback([&] {
    auto knot = subject(g, diagrams::load_plat(plat_path));
    auto pres = groups::branched_cover_presentation(groups::wirtinger(diagrams::plat_to_pd(knot).pd));
    emit(g, groups::abelianization(pres).to_string() + "\n");
  });

  int search = 0;
  auto* cob = app.add_subcommand("cobordism", "surgery data, linking matrix and group collapse evidence");
  cob->add_option("plat", plat_path)->required();
  cob->add_option("--search", search, "scan every even twist vector with entries in [-R, R]")
      ->check(CLI::Range(0, 8));
  cob->callback([&] {
    auto plat = diagrams::load_plat(plat_path);
    std::vector<groups::FiniteGroup> battery;
    for (const auto& n : battery_for(g)) battery.push_back(pipeline::named_group(n));
    const auto knot_group = groups::wirtinger(diagrams::plat_to_pd(plat).pd);
    groups::HomCountOptions budget;
    auto collapse = [&](const diagrams::TwistVector& tv) {
      auto su = diagrams::build_symmetric_union(plat, tv);
      return groups::collapse_check(groups::cobordism_presentation(su), knot_group, battery, budget);
    };

    if (search > 0) {
      // One line of evidence per even twist vector, in lexicographic order.
      const int top = search - search % 2;
      std::vector<std::vector<int>> tvs{{}};
      for (int b = 0; b < plat.bridges(); ++b) {
        std::vector<std::vector<int>> next;
        for (const auto& v : tvs)
          for (int t = -top; t <= top; t += 2) {
            next.push_back(v);
            next.back().push_back(t);
          }
        tvs = std::move(next);
      }
      std::ostringstream out;
      bool inconclusive = false;
      for (const auto& entries : tvs) {
        diagrams::TwistVector tv{entries};
        auto lm = covers::cobordism_linking_matrix(covers::surgery_description(plat, tv));
        auto j = diagrams::build_symmetric_union(plat, tv).knot;
        auto report = collapse(tv);
        inconclusive = inconclusive || report.verdict == groups::CollapseVerdict::kInconclusive;
        for (std::size_t i = 0; i < entries.size(); ++i) out << (i ? "," : "tv ") << entries[i];
        out << " det_J " << covers::determinant(diagrams::plat_to_pd(j).pd) << " definite "
            << covers::to_string(covers::is_definite(lm)) << " collapse " << groups::to_string(report.verdict)
            << "\n";
      }
      emit(g, out.str());
      code = inconclusive ? 2 : 0;
      return;
    }

    auto tv = twists_for(g, plat);
    if (!tv.all_even()) throw InputError("cobordism needs an even twist vector");
    auto sd = covers::surgery_description(plat, tv);
    auto lm = covers::cobordism_linking_matrix(sd);
    std::ostringstream out;
    for (const auto& c : sd.curves) {
      out << "band " << c.band << " twists " << c.half_twists << " arcs " << c.k_arc << "," << c.mirror_arc
          << " framing " << c.framing << "\n";
    }
    out << "linking matrix\n" << covers::format_matrix(lm.matrix);
    out << "definite " << covers::to_string(covers::is_definite(lm)) << "\n";
    auto report = collapse(tv);
    for (const auto& r : report.rows) {
      out << "homs to " << r.group << ": cobordism "
          << (r.source.complete ? std::to_string(r.source.count) : "?") << ", knot "
          << (r.target.complete ? std::to_string(r.target.count) : "?") << "\n";
    }
    out << "collapse " << groups::to_string(report.verdict) << "\n";
    emit(g, out.str());
    code = report.verdict == groups::CollapseVerdict::kInconclusive ? 2 : 0;
  });

  std::string pres_path, table_group;
  auto* grp = app.add_subcommand("groups", "finite group facts, or coset enumeration of a presentation");
  grp->add_option("--presentation", pres_path, "presentation file to enumerate");
  grp->add_option("--table", table_group, "print the multiplication table of a named group");
  grp->callback([&] {
    std::ostringstream out;
    if (!table_group.empty()) {
      emit(g, pipeline::named_group(table_group).format_table());
      return;
    }
    if (!pres_path.empty()) {
      std::ifstream in(pres_path);
      if (!in) throw InputError("cannot open " + pres_path);
      auto pres = groups::parse_presentation(in);
      auto table = groups::todd_coxeter(pres, {}, g.max_cosets);
      out << "abelianization " << groups::abelianization(pres).to_string() << "\n";
      if (table.status == groups::EnumerationStatus::kComplete) {
        out << "order " << table.index << "\n";
      } else {
        out << "order inconclusive after " << table.cosets_defined << " cosets\n";
        code = 2;
      }
      emit(g, out.str());
      return;
    }
    std::vector<std::string> names = g.battery.empty() ? std::vector<std::string>{"SL(2,5)", "A5", "icosians"}
                                                       : battery_for(g);
    for (const auto& n : names) {
      auto G = pipeline::named_group(n);
      auto r = groups::structure_report(G);
      out << n << ": order " << G.order() << ", classes " << r.classes.size() << ", center " << r.center.size()
          << ", involutions " << r.involutions << ", normal subgroups";
      for (const auto& ns : r.normal_subgroups) out << " " << ns.size();
      out << ", " << (r.simple ? "simple" : "not simple") << ", su2 "
          << groups::to_string(groups::su2_obstruction(G, r)) << "\n";
    }
    emit(g, out.str());
  });

  auto* cert = app.add_subcommand("certify", "assemble the obstruction certificate for J");
  cert->add_option("plat", plat_path)->required();
  cert->add_flag("--json", json, "JSON certificate (schema 1)");
  cert->add_flag("--timing", timing, "record wall-clock seconds per premise");
  cert->callback([&] {
    auto plat = diagrams::load_plat(plat_path);
    pipeline::CertifyConfig config;
    config.resolution = g.resolution;
    config.battery = battery_for(g);
    config.max_cosets = g.max_cosets;
    config.record_timing = timing;
    auto c = pipeline::certify(plat, twists_for(g, plat), config);
    emit(g, json ? pipeline::to_json(c).dump(2) + "\n" : pipeline::to_text(c));
    if (!g.out.empty()) std::cout << c.verdict << "\n";
    code = pipeline::exit_code(c);
  });

  std::string what = "decker";
  auto* render = app.add_subcommand("render", "SVG of the chord diagram, decker set with curve, or PD");
  render->add_option("plat", plat_path)->required();
  render->add_option("--what", what, "chord | decker | pd")->check(CLI::IsMember({"chord", "decker", "pd"}));
  render->callback([&] {
    auto plat = diagrams::load_plat(plat_path);
    auto cd = diagrams::chord_diagram_of_tangle(plat);
    if (what == "chord") {
      emit(g, pipeline::render_chord_diagram_svg(cd));
    } else if (what == "pd") {
      emit(g, pipeline::render_pd_svg(diagrams::plat_to_pd(subject(g, plat)).pd));
    } else {
      auto ds = decker::spin_chord_diagram(cd, g.resolution);
      auto curve = decker::symmetric_union_curve(ds, cd, twists_for(g, plat));
      emit(g, pipeline::render_decker_svg(ds, &curve));
    }
  });

  std::string manifest;
  auto* corpus = app.add_subcommand("corpus", "run a manifest of expectations");
  corpus->add_option("manifest", manifest)->required();
  corpus->callback([&] {
    auto report = pipeline::corpus_run(manifest, g.resolution);
    emit(g, report.table());
    code = report.all_pass() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const StructuralError& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return code;
}
