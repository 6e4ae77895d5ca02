// Copyright 2026 The dlines Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "dlines/csp.hpp"
#include "dlines/cyc.hpp"
#include "dlines/derive.hpp"
#include "dlines/geometry.hpp"
#include "dlines/pa.hpp"
#include "dlines/ra_axioms.hpp"
#include "dlines/realize.hpp"
#include "dlines/ta.hpp"
#include "dlines/table_io.hpp"
#include "dlines/translators.hpp"
#include "oracles.hpp"

namespace {

using namespace dlines;

// Time limits in seconds.
constexpr double kLimitCounts = 1;
constexpr double kLimitTables = 120;
constexpr double kLimitSpot = 1;
constexpr double kLimitRobot = 1;
constexpr double kLimitRa = 180;
constexpr double kLimitRealize = 300;
constexpr double kLimitJepd = 60;
constexpr double kLimitSearch = 600;
constexpr double kLimitTranslators = 120;

constexpr int kRaSamples = 100;
constexpr std::uint64_t kRaSeed = 20260101;
constexpr int kRealizeScenes = 200;
constexpr std::uint64_t kRealizeSeed = 6;
constexpr int kSearchInstances = 500;
constexpr int kPoolSize = 20;
constexpr std::uint64_t kSearchSeed = 8;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string document;  // compared across runs for determinism
};

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what;
  }
}

Outcome atom_counts() {
  Outcome o;
  // Orientation atoms: sign patterns realized by three grid directions.
  std::set<AtomId> cyc;
  for (const Direction& a : grid_directions(2))
    for (const Direction& b : grid_directions(2))
      for (const Direction& c : grid_directions(2))
        cyc.insert(classify_cyc(DLine(a, Rational(0)), DLine(b, Rational(0)),
                                DLine(c, Rational(0))));
  std::set<AtomId> ta;
  for_each_grid_scene(3, 1, 2, [&](const Scene& s) {
    ta.insert(classify_ta(s[0], s[1], s[2]));
    return true;
  });
  int pa = 0;
  for (AtomId t = 0; t < static_cast<int>(ta_atom_names().size()); ++t)
    for (AtomId c = 0; c < static_cast<int>(cyct_atom_names().size()); ++c)
      pa += pa_compatible(t, c);
  std::set<AtomId> cpa;
  for (AtomId a = 0; a < pa; ++a) cpa.insert(coarsen_atom(a));
  o.detail = "cyc " + std::to_string(cyc.size()) + ", ta " + std::to_string(ta.size()) +
             ", pa " + std::to_string(pa) + ", cpa " + std::to_string(cpa.size());
  o.pass = cyc.size() == 24 && ta.size() == 22 && pa == 112 && cpa.size() == 96;
  return o;
}

Outcome table_fidelity() {
  Outcome o;
  for (Algebra alg : {Algebra::cyc, Algebra::ta, Algebra::pa}) {
    const AtomTables derived = derive_saturated(alg);
    const AtomTables& stored = tables_for(alg);
    std::vector<std::string> diff = diff_tables(derived, stored);
    expect(o, diff.empty(),
           std::string(algebra_tag(alg)) + " differs: " + (diff.empty() ? "" : diff[0]));
    o.document += dump_algebra(derived);
  }
  int nonempty = 0;
  const AtomTables& ta = ta_tables();
  for (AtomId a = 0; a < ta.size(); ++a)
    for (AtomId b = 0; b < ta.size(); ++b) nonempty += !ta.composition(a, b).is_empty();
  expect(o, nonempty == 124, "ta non-empty compositions " + std::to_string(nonempty));
  if (o.pass)
    o.detail = "cyc conv/rot/comp, ta conv/rot/comp (" + std::to_string(nonempty) +
               " non-empty), pa rot/conv/comp match the oracle";
  return o;
}

Outcome spot_values() {
  Outcome o;
  auto check = [&](const AtomTables& t, const Relation& got, const Relation& want,
                   const std::string& what) {
    expect(o, got == want, what + " = " + t.format(got));
  };
  const AtomTables& c = cyct_tables();
  const AtomTables& t = ta_tables();
  const AtomTables& p = pa_tables();
  check(c, c.compose(c.relation({"rrl"}), c.relation({"lrr"})), c.relation({"rlr"}),
        "rrl o lrr");
  check(c, c.compose(c.relation({"rrl"}), c.relation({"llo"})), c.relation({"rro"}),
        "rrl o llo");
  check(t, t.compose(t.relation({"cc_lt"}), t.relation({"cc_eq"})), t.relation({"cc_lt"}),
        "cc_lt o cc_eq");
  check(p, converse(p.relation({"pp_l0:ooe"}), p), p.relation({"pp_l2:eoo"}),
        "conv pp_l0:ooe");
  check(p, p.compose(p.relation({"cc_lt:rrl"}), p.relation({"cc_eq:lrr"})),
        p.relation({"cc_lt:rlr"}), "cc_lt:rrl o cc_eq:lrr");
  check(p, p.compose(p.relation({"cc_lt:rrl"}), p.relation({"cp_l:llo"})),
        p.relation({"cp_l:rro"}), "cc_lt:rrl o cp_l:llo");
  if (o.pass) o.detail = "6 values reproduced";
  return o;
}

// The intermediate composition rll o lrr on (la3, la2, lab) is {rer, rlr,
// rrr} by the derived table. The prose quotes {lre, lrl, lrr}, which is the
// same relation after rotating and converting it onto (la2, la3, lab).
Outcome robot() {
  Outcome o;
  const AtomTables& p = pa_tables();
  const AtomTables& c = cyct_tables();
  std::vector<Constraint> cs = {{0, 1, 2, p.relation({"cc_eq:rlr"})},
                                {0, 1, 3, p.relation({"cc_eq:rlr"})},
                                {0, 2, 3, p.relation({"cc_eq:rrr"})}};
  auto m = matrix_from_constraints(Algebra::pa, 4, cs);
  expect(o, m.has_value(), "initial matrix empty");
  if (!m) return o;
  PropagationOutcome r = ic_pa(*m);
  expect(o, r.status == PropagationStatus::closed, "propagation inconsistent");
  const Relation step = c.compose(c.relation({"rll"}), c.relation({"lrr"}));
  expect(o, step == c.relation({"rer", "rlr", "rrr"}), "rll o lrr = " + c.format(step));
  Relation proj = pa_project_cyc(r.matrix.at(1, 2, 3));
  expect(o, proj == c.relation({"lrl"}), "(la2,la3,lab) projects to " + c.format(proj));
  if (o.pass)
    o.detail = "(la2,la3,lab) projects to {lrl}; entry " + p.format(r.matrix.at(1, 2, 3));
  return o;
}

// The translation algebra is weak: rotation maps atoms to unions, so only
// rot^3(a) >= a is required of it. The other three are relation algebras.
Outcome ra_suite() {
  Outcome o;
  int axioms = 0;
  for (Algebra alg : {Algebra::cyc, Algebra::ta, Algebra::pa, Algebra::cpa}) {
    const AtomTables& t = tables_for(alg);
    RaReport rep = check_ra_axioms(t, kRaSamples, kRaSeed);
    const std::string tag(algebra_tag(alg));
    for (const AxiomResult& a : rep.axioms) {
      if (alg == Algebra::ta && a.name == "rotation has period three") {
        bool weak = true;
        for (AtomId x = 0; x < t.size(); ++x) {
          Relation r = Relation::atom(alg, x);
          weak = weak && r.subset_of(rotate(rotate(rotate(r, t), t), t));
        }
        expect(o, weak, "ta rotation misses an atom after three steps");
        continue;
      }
      ++axioms;
      expect(o, a.passed, tag + " " + a.name + ": " + a.counterexample);
      expect(o, a.sample_checks >= kRaSamples, tag + " " + a.name + " undersampled");
    }
  }
  if (o.pass)
    o.detail = std::to_string(axioms) +
               " axiom checks over 4 algebras, ta rotation checked as rot^3 >= id";
  return o;
}

Outcome realizable() {
  Outcome o;
  std::mt19937_64 rng(kRealizeSeed);
  int ok = 0;
  for (int n = 0; n < kRealizeScenes; ++n) {
    const int lines = 5 + static_cast<int>(rng() % 2);
    Scene s = oracle::random_scene(rng, lines, 3, 3);
    ConstraintMatrix m = harvest_matrix(s, Algebra::cpa);
    PropagationOutcome p = ic_pa(m);
    std::string line = "scene " + std::to_string(n);
    if (p.status == PropagationStatus::inconsistent) {
      expect(o, false, line + " reported inconsistent");
      o.document += line + " inconsistent\n";
      continue;
    }
    ExtractResult x = extract_model(p.matrix);
    bool good = x.ok && check_solution(p.matrix, x.realization.scene).ok;
    expect(o, good, line + ": " + x.failure);
    ok += good;
    o.document += line + (good ? " ok" : " failed");
    for (const DLine& l : x.realization.scene) o.document += " | " + format_dline(l);
    o.document += "\n";
  }
  if (o.pass) o.detail = std::to_string(ok) + "/" + std::to_string(kRealizeScenes) + " realized";
  return o;
}

Outcome jepd() {
  Outcome o;
  std::set<AtomId> seen;
  std::int64_t triples = 0;
  for_each_grid_scene(3, 2, 3, [&](const Scene& s) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          AtomId ta = classify_ta(s[i], s[j], s[k]);
          AtomId cyc = classify_cyc(s[i], s[j], s[k]);
          auto a = pa_atom(ta, cyc);
          ++triples;
          if (!a || *a != classify_pa(s[i], s[j], s[k])) {
            expect(o, false, "triple without a unique atom");
            return false;
          }
          seen.insert(*a);
        }
    return true;
  });
  expect(o, seen.size() == 112, std::to_string(seen.size()) + " atoms realized");
  if (o.pass) o.detail = "112 atoms over " + std::to_string(triples) + " classified triples";
  return o;
}

std::vector<Relation> search_pool(std::mt19937_64& rng) {
  std::vector<Relation> pool;
  while (static_cast<int>(pool.size()) < kPoolSize) {
    Scene s = oracle::random_scene(rng, 3, 2, 2);
    Relation r = Relation::atom(Algebra::cpa, classify_cpa(s[0], s[1], s[2]));
    const int extra = static_cast<int>(rng() % 49);
    for (int e = 0; e < extra; ++e) r.insert(static_cast<AtomId>(rng() % 96));
    pool.push_back(r);
  }
  return pool;
}

Outcome search_completeness() {
  Outcome o;
  std::mt19937_64 rng(kSearchSeed);
  std::vector<Relation> pool = search_pool(rng);
  const std::array<Triple, 4> distinct = {{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  int agree = 0, consistent = 0;
  for (int n = 0; n < kSearchInstances; ++n) {
    std::vector<Constraint> cs;
    for (const Triple& t : distinct)
      cs.push_back({t.i, t.j, t.k, refine(pool[rng() % pool.size()])});
    auto m = matrix_from_constraints(Algebra::cpa, 4, cs);
    bool truth = false, verdict = false;
    if (m) {
      truth = oracle::enumerate_consistent(*m);
      SearchOutcome s = ic_sa(*m);
      verdict = s.status == SearchStatus::found;
      if (verdict) verdict = extract_model(*s.scenario).ok;
    }
    agree += truth == verdict;
    consistent += truth;
    expect(o, truth == verdict, "instance " + std::to_string(n) + " disagrees");
    o.document += std::to_string(n) + (truth ? " sat" : " unsat") +
                  (verdict ? " sat" : " unsat") + "\n";
  }
  o.detail = std::to_string(agree) + "/" + std::to_string(kSearchInstances) + " agree (" +
             std::to_string(consistent) + " consistent)";
  return o;
}

Outcome translator_round_trips() {
  Outcome o;
  int cases = 0;
  // Double-cross relations.
  for (FreksaRel r : {FreksaRel::fl, FreksaRel::f6, FreksaRel::f7, FreksaRel::f8,
                      FreksaRel::f9, FreksaRel::f10, FreksaRel::fr}) {
    ++cases;
    const std::string what = "double-cross " + std::string(freksa_name(r));
    FreksaTranslation t = translate_freksa({{"A", "B", "C", r}});
    const CspBuilder& b = t.translator.csp();
    auto scene = oracle::realize(b);
    if (!scene) {
      expect(o, false, what + " not realized");
      continue;
    }
    auto pa = oracle::point_of(*scene, b, t.representative.at("A"));
    auto pb = oracle::point_of(*scene, b, t.representative.at("B"));
    auto pc = oracle::point_of(*scene, b, t.representative.at("C"));
    expect(o, pa && pb && pc && !(*pa == *pb) && oracle::double_cross(*pa, *pb, *pc) == r,
           what + " reclassified differently");
  }
  // Dipole-point relations.
  for (char rel : std::string("lbsiefr")) {
    ++cases;
    const std::string what = std::string("dipole-point ") + rel;
    Translator t;
    t.dipole_point("A", "P", rel);
    auto scene = oracle::realize(t.csp());
    if (!scene) {
      expect(o, false, what + " not realized");
      continue;
    }
    auto s = oracle::point_of(*scene, t.csp(), "s_A");
    auto e = oracle::point_of(*scene, t.csp(), "e_A");
    auto p = oracle::point_of(*scene, t.csp(), "P");
    expect(o, s && e && p && !(*s == *e) && oracle::dipole_point(*s, *e, *p) == rel,
           what + " reclassified differently");
  }
  // Directed intervals.
  for (const DintRow& row : dint_table()) {
    ++cases;
    const std::string what = "directed interval " + std::string(row.name);
    Translator t;
    t.directed_interval("x", row.name, "y");
    auto scene = oracle::realize(t.csp());
    if (!scene) {
      expect(o, false, what + " not realized");
      continue;
    }
    const CspBuilder& b = t.csp();
    std::vector<Point> pts;
    for (const char* n : {"s_x", "e_x", "s_y", "e_y"}) {
      auto p = oracle::point_of(*scene, b, n);
      if (p) pts.push_back(*p);
    }
    const DLine& carrier = (*scene)[*b.find("l_Renz")];
    bool on = pts.size() == 4;
    for (const Point& p : pts) on = on && carrier.contains(p);
    expect(o, on && !(pts[0] == pts[1]) && !(pts[2] == pts[3]) &&
                  oracle::dipole_word(pts[0], pts[1], pts[2], pts[3]) == row.word,
           what + " reclassified differently");
  }
  if (o.pass) o.detail = std::to_string(cases) + " relations reproduced";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "atom counts", kLimitCounts, atom_counts},
      {2, "table fidelity", kLimitTables, table_fidelity},
      {3, "spot values", kLimitSpot, spot_values},
      {4, "robot panorama", kLimitRobot, robot},
      {5, "relation algebra axioms", kLimitRa, ra_suite},
      {6, "atomic networks are realizable", kLimitRealize, realizable},
      {7, "three-line enumeration", kLimitJepd, jepd},
      {8, "search completeness", kLimitSearch, search_completeness},
      {9, "translator round trips", kLimitTranslators, translator_round_trips},
  };
  bool all = true;
  std::map<int, std::string> documents;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass && secs < c.limit;
    if (secs >= c.limit) o.detail += " (over time)";
    documents[c.id] = o.document;
    all = all && pass;
    std::printf("%s %d %s: %s [%.2f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), o.detail.c_str(), secs, c.limit);
    std::fflush(stdout);
  }
  {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    for (int id : {2, 6, 8}) {
      Outcome again = criteria[id - 1].run();
      bool same = again.document == documents[id] && !again.document.empty();
      pass = pass && same;
      detail += (detail.empty() ? "" : ", ") + std::to_string(id) +
                (same ? " identical" : " differs");
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && pass;
    std::printf("%s 10 determinism: %s [%.2f s]\n", pass ? "PASS" : "FAIL", detail.c_str(),
                secs);
  }
  return all ? 0 : 1;
}
