// Acceptance suite: one line per criterion with its measured time and limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "../support.hpp"
#include "slicecert/covers.hpp"
#include "slicecert/decker.hpp"
#include "slicecert/pipeline.hpp"

using namespace slicecert;
using namespace testsupport;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

groups::GroupPresentation knot_group(const diagrams::PlatWord& p) {
  return groups::wirtinger(diagrams::plat_to_pd(p).pd);
}

std::string str(const groups::BigInt& x) { return x.str(); }

// Goeritz, Fox and the branched-cover H1 agree on every corpus knot.
Outcome triple_oracle() {
  Outcome out;
  struct Row {
    std::string name;
    diagrams::PlatWord plat;
    int det;
  };
  std::vector<Row> rows;
  for (const auto& k : corpus()) rows.push_back({k.name, k.plat, k.det});
  rows.push_back({"trefoil#mirror", diagrams::connected_sum_with_mirror(trefoil()), 9});
  rows.push_back({"t35-sym-2-2-2", diagrams::build_symmetric_union(t35(), {{2, 2, 2}}).knot, 1});
  std::ostringstream log;
  for (const auto& r : rows) {
    auto pd = diagrams::plat_to_pd(r.plat).pd;
    auto g = covers::determinant(pd);
    auto f = covers::alexander_det(groups::wirtinger(pd));
    auto h = groups::abelianization(groups::branched_cover_presentation(groups::wirtinger(pd)));
    out.expect(g == r.det, r.name + ": goeritz " + str(g));
    out.expect(f == r.det, r.name + ": fox " + str(f));
    out.expect(h.free_rank == 0 && h.torsion_order() == r.det, r.name + ": H1 " + h.to_string());
    log << r.name << "=" << r.det << " ";
  }
  if (out.ok) out.detail = log.str();
  return out;
}

Outcome symmetric_union_law() {
  Outcome out;
  int count = 0;
  for (const auto& k : corpus()) {
    if (k.name == "unknot") continue;
    // 25 vectors for two bridges, 27 for three.
    int range = k.plat.bridges() == 2 ? 4 : 2;
    for (const auto& tv : even_twist_battery(k.plat.bridges(), range)) {
      auto j = diagrams::build_symmetric_union(k.plat, {tv}).knot;
      auto d = covers::determinant(diagrams::plat_to_pd(j).pd);
      out.expect(d == k.det * k.det, k.name + ": det(J) = " + str(d));
      ++count;
    }
  }
  if (out.ok) out.detail = std::to_string(count) + " twist vectors";
  return out;
}

Outcome slice_suite() {
  Outcome out;
  std::mt19937 rng(31337);
  int cases = 0;
  for (const auto& k : corpus()) {
    auto cd = diagrams::chord_diagram_of_tangle(k.plat);
    auto ds = decker::spin_chord_diagram(cd);
    auto base = decker::trace_double_curve(ds, cd);
    out.expect(decker::check_slice_criterion(ds, base).pass(), k.name + ": trace curve fails");
    if (k.plat.bridges() >= 2) {
      for (const auto& tv : even_twist_battery(k.plat.bridges(), 2)) {
        auto c = decker::symmetric_union_curve(ds, cd, {tv});
        out.expect(decker::check_slice_criterion(ds, c).pass(), k.name + ": symmetric union curve fails");
      }
    }
    if (ds.L < 2) continue;
    const auto want = decker::check_slice_criterion(ds, base).verdict();
    for (int trial = 0; trial < 50; ++trial, ++cases) {
      int region = 1 + static_cast<int>(rng() % (ds.L - 1));
      int n = static_cast<int>(rng() % 7) - 3;
      auto c = decker::rotate_longitudes(decker::dehn_twist_annulus(base, region, n),
                                         static_cast<int>(rng() % ds.M));
      out.expect(decker::check_slice_criterion(ds, c).verdict() == want, k.name + ": verdict changed");
    }
  }
  // Corrupted curves: the over circle is crossed on the wrong side of the pole.
  for (const auto& k : corpus()) {
    auto cd = diagrams::chord_diagram_of_tangle(k.plat);
    auto ds = decker::spin_chord_diagram(cd);
    if (ds.L == 0) continue;
    std::vector<int> descent(ds.L), ascent(ds.L);
    for (int l = 1; l <= ds.L; ++l) {
      bool over = ds.circle_over[l];
      descent[l - 1] = over ? -1 : 1;
      ascent[l - 1] = ds.M / 2 + (over ? -1 : 1);
    }
    auto bad = decker::two_strand_curve(ds, ds.M, descent, ascent);
    out.expect(!decker::check_slice_criterion(ds, bad).pass(), k.name + ": corrupted curve passes");
  }
  out.expect(cases >= 100, "only " + std::to_string(cases) + " property cases");
  if (out.ok) out.detail = std::to_string(cases) + " randomized cases";
  return out;
}

Outcome cobordism_form() {
  Outcome out;
  int count = 0;
  for (const auto& k : corpus()) {
    if (k.plat.bridges() < 2) continue;
    for (const auto& tv : even_twist_battery(k.plat.bridges(), 4)) {
      auto lm = covers::cobordism_linking_matrix(covers::surgery_description(k.plat, {tv}));
      int pos = 0, neg = 0;
      for (std::size_t i = 0; i < lm.matrix.size(); ++i)
        for (std::size_t j = 0; j < lm.matrix.size(); ++j) {
          const auto& x = lm.matrix[i][j];
          if (i != j) out.expect(x == 0, k.name + ": off-diagonal entry");
          else {
            out.expect(x == 1 || x == -1, k.name + ": non-unit diagonal");
            (x > 0 ? pos : neg)++;
          }
        }
      auto d = covers::is_definite(lm);
      auto want = lm.matrix.empty() ? covers::Definiteness::kEmpty
                  : neg == 0        ? covers::Definiteness::kPositive
                  : pos == 0        ? covers::Definiteness::kNegative
                                    : covers::Definiteness::kIndefinite;
      out.expect(d == want, k.name + ": definiteness " + covers::to_string(d));
      ++count;
    }
  }
  if (out.ok) out.detail = std::to_string(count) + " twist vectors";
  return out;
}

Outcome group_facts() {
  Outcome out;
  auto sl = groups::sl2_f5();
  auto r = groups::structure_report(sl);
  out.expect(sl.order() == 120, "order");
  out.expect(r.involutions == 1, "involutions of SL(2,5)");
  out.expect(r.proper_quotients.size() == 1 &&
                 groups::iso_check(r.proper_quotients[0].group, groups::alternating_group(5)).has_value(),
             "proper quotients");
  auto a5 = groups::alternating_group(5);
  auto ra = groups::structure_report(a5);
  out.expect(ra.simple && ra.involutions == 15, "A5 structure");
  out.expect(groups::su2_obstruction(a5, ra) == groups::SU2Verdict::kNoNontrivialRep, "A5 su2");
  out.expect(groups::su2_obstruction(sl, r) == groups::SU2Verdict::kEmbedsPossible, "SL(2,5) su2");
  auto units = groups::unit_icosians();
  out.expect(groups::check_unique_involution(units) == 120, "icosian involutions");
  out.expect(groups::iso_check(groups::icosian_group(), sl).has_value(), "icosian isomorphism");
  return out;
}

Outcome branched_cover() {
  Outcome out;
  auto cover = groups::branched_cover_presentation(knot_group(t35()));
  auto table = groups::todd_coxeter(cover, {});
  out.expect(table.status == groups::EnumerationStatus::kComplete, "enumeration overflow");
  out.expect(table.index == 120, "order " + std::to_string(table.index));
  out.expect(groups::abelianization(cover).trivial(), "nontrivial H1");
  if (!out.ok) return out;
  std::vector<groups::Permutation> gens;
  for (int g = 0; g < cover.generators; ++g) {
    groups::Permutation p(table.index);
    for (std::size_t c = 0; c < table.index; ++c) p[c] = table.table[c][2 * g];
    gens.push_back(p);
  }
  out.expect(groups::iso_check(groups::closure(gens, 121), groups::sl2_f5()).has_value(), "iso_check");
  if (out.ok) out.detail = std::to_string(cover.generators) + " generators, order 120";
  return out;
}

Outcome collapse() {
  Outcome out;
  std::vector<groups::FiniteGroup> battery;
  for (const auto& n : pipeline::default_battery()) battery.push_back(pipeline::named_group(n));
  auto target = knot_group(t35());
  auto sym222 = groups::collapse_check(
      groups::cobordism_presentation(diagrams::build_symmetric_union(t35(), {{2, 2, 2}})), target, battery);
  out.expect(sym222.verdict == groups::CollapseVerdict::kConsistentCollapse, "(2,2,2) counts differ");
  auto zero = groups::collapse_check(
      groups::cobordism_presentation(diagrams::build_symmetric_union(t35(), {{0, 0, 0}})), target, battery);
  out.expect(zero.verdict == groups::CollapseVerdict::kDistinguished, "tv=0 not distinguished");
  std::ostringstream log;
  for (const auto& row : sym222.rows) log << row.group << " " << row.source.count << "/" << row.target.count << " ";
  if (out.ok) out.detail = log.str();
  return out;
}

Outcome end_to_end() {
  Outcome out;
  auto sym222 = pipeline::certify(t35(), {{2, 2, 2}});
  out.expect(sym222.verdict == "obstruction-premises-verified", "(2,2,2) verdict " + sym222.verdict);
  out.expect(sym222.axioms().size() == 4, "axiom count");
  auto tref = pipeline::certify(trefoil(), {{2, 2}});
  out.expect(tref.verdict == "failed: homology-sphere", "trefoil verdict " + tref.verdict);
  auto again = pipeline::certify(t35(), {{2, 2, 2}});
  out.expect(pipeline::to_json(sym222).dump(2) == pipeline::to_json(again).dump(2), "bytes differ");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "triple-oracle determinant", 30, triple_oracle},
      {2, "symmetric-union determinant law", 60, symmetric_union_law},
      {3, "slice criterion suite", 30, slice_suite},
      {4, "cobordism intersection form", 5, cobordism_form},
      {5, "group facts", 60, group_facts},
      {6, "branched cover of T(3,5)", 120, branched_cover},
      {7, "collapse evidence", 600, collapse},
      {8, "end-to-end certificate", 900, end_to_end},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) {
      o.ok = false;
      o.detail = "over time limit; " + o.detail;
    }
    failures += !o.ok;
    std::printf("[%s] %d %s (%.2f s / %.0f s) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                c.limit, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
