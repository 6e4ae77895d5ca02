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

#include <random>

#include "doctest.h"
#include "dlines/csp.hpp"
#include "dlines/geometry.hpp"
#include "dlines/pa.hpp"
#include "dlines/ra_axioms.hpp"
#include "dlines/realize.hpp"
#include "oracles.hpp"

using namespace dlines;

namespace {

std::vector<Constraint> robot_constraints() {
  const AtomTables& p = pa_tables();
  return {{0, 1, 2, p.relation({"cc_eq:rlr"})},
          {0, 1, 3, p.relation({"cc_eq:rlr"})},
          {0, 2, 3, p.relation({"cc_eq:rrr"})}};
}

// Harvested atoms on the distinct triples, each widened by random atoms.
ConstraintMatrix widened(std::mt19937_64& rng, int lines, int extra) {
  Scene s = oracle::random_scene(rng, lines, 2, 2);
  ConstraintMatrix h = harvest_matrix(s, Algebra::cpa);
  ConstraintMatrix m(Algebra::cpa, lines);
  for (const Triple& t : h.canonical_triples()) {
    if (t.i == t.j || t.j == t.k) continue;
    Relation r = h.at(t);
    for (int e = 0; e < extra; ++e) r.insert(static_cast<AtomId>(rng() % 96));
    m.restrict(t.i, t.j, t.k, r);
  }
  m.clear_trail();
  return m;
}

bool refines(const ConstraintMatrix& a, const ConstraintMatrix& b) {
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      for (int k = 0; k < a.size(); ++k)
        if (!a.at(i, j, k).subset_of(b.at(i, j, k))) return false;
  return true;
}

}  // namespace

TEST_CASE("fresh matrices") {
  ConstraintMatrix m(Algebra::pa, 3);
  const AtomTables& p = pa_tables();
  CHECK(m.at(1, 1, 1) == p.identity_diag());
  CHECK(m.at(0, 2, 2) == p.identity_comp());
  CHECK(m.at(0, 1, 2) == p.universal());
  CHECK(m.property_violations().empty());
  CHECK(m.canonical_triples().size() == 10);
  CHECK_THROWS(ConstraintMatrix(Algebra::ta, 2));
}

TEST_CASE("restriction keeps the permuted entries") {
  const AtomTables& c = cpa_tables();
  ConstraintMatrix m(Algebra::cpa, 3);
  std::vector<Triple> changed;
  CHECK(m.restrict(0, 1, 2, c.relation({"*:lll"}), &changed));
  CHECK(m.at(0, 2, 1) == converse(c.relation({"*:lll"}), c));
  CHECK(m.at(1, 2, 0) == rotate(c.relation({"*:lll"}), c));
  CHECK(changed.size() == 6);
  CHECK(m.property_violations().empty());
  const size_t mark = m.mark();
  CHECK_FALSE(m.restrict(0, 1, 2, c.relation({"*:rrr"})));
  m.undo(mark);
  CHECK(m.at(0, 1, 2) == c.relation({"*:lll"}));
}

TEST_CASE("matrices from constraint lists") {
  auto m = matrix_from_constraints(Algebra::pa, 4, {});
  REQUIRE(m);
  CHECK(*m == ConstraintMatrix(Algebra::pa, 4));
  CHECK_FALSE(matrix_from_constraints(Algebra::pa, 3,
                                      {{0, 1, 2, Relation::empty(Algebra::pa)}}));
  const AtomTables& p = pa_tables();
  CHECK_FALSE(matrix_from_constraints(
      Algebra::pa, 3, {{0, 1, 2, p.relation({"cc_lt:lll"})}, {0, 1, 2, p.relation({"cc_gt:lll"})}}));
  CHECK_THROWS_AS(matrix_from_constraints(Algebra::pa, 2, {{0, 1, 2, p.universal()}}),
                  std::out_of_range);
  CHECK_THROWS_AS(
      matrix_from_constraints(Algebra::cpa, 3, {{0, 1, 2, p.relation({"cc_lt:lll"})}}),
      std::invalid_argument);
}

TEST_CASE("robot panorama") {
  auto m = matrix_from_constraints(Algebra::pa, 4, robot_constraints());
  REQUIRE(m);
  PropagationOutcome r = ic_pa(*m);
  REQUIRE(r.status == PropagationStatus::closed);
  CHECK(pa_project_cyc(r.matrix.at(1, 2, 3)) == cyct_tables().relation({"lrl"}));
  SearchOutcome s = ic_sa(*m);
  REQUIRE(s.status == SearchStatus::found);
  CHECK(s.scenario->at(1, 2, 3) == pa_tables().relation({"cc_eq:lrl"}));
  CHECK(extract_model(*s.scenario).ok);
}

TEST_CASE("the universal network is closed") {
  for (Algebra alg : {Algebra::cyc, Algebra::pa, Algebra::cpa}) {
    ConstraintMatrix m(alg, 4);
    PropagationOutcome r = ic_pa(m);
    CHECK(r.status == PropagationStatus::closed);
    CHECK(r.matrix == m);
  }
}

TEST_CASE("an impossible atom is caught by quadruples") {
  std::mt19937_64 rng(21);
  int caught = 0;
  for (int trial = 0; trial < 20 && caught == 0; ++trial) {
    Scene s = oracle::random_scene(rng, 4, 2, 2);
    ConstraintMatrix h = harvest_matrix(s, Algebra::pa);
    const AtomId truth = h.at(0, 1, 2).first();
    for (AtomId a = 0; a < 112; ++a) {
      if (a == truth) continue;
      std::vector<Constraint> cs;
      for (const Triple& t : h.canonical_triples())
        if (!(t == Triple{0, 1, 2})) cs.push_back({t.i, t.j, t.k, h.at(t)});
      cs.push_back({0, 1, 2, Relation::atom(Algebra::pa, a)});
      auto m = matrix_from_constraints(Algebra::pa, 4, cs);
      if (!m) continue;
      // Triples that do not involve the fourth line stay consistent alone.
      auto three = matrix_from_constraints(
          Algebra::pa, 3,
          {{0, 1, 2, Relation::atom(Algebra::pa, a)},
           {0, 1, 1, h.at(0, 1, 1)}, {0, 0, 1, h.at(0, 0, 1)}, {0, 2, 2, h.at(0, 2, 2)},
           {0, 0, 2, h.at(0, 0, 2)}, {1, 2, 2, h.at(1, 2, 2)}, {1, 1, 2, h.at(1, 1, 2)}});
      if (!three || ic_pa(*three).status != PropagationStatus::closed) continue;
      if (ic_pa(*m).status == PropagationStatus::inconsistent) ++caught;
    }
  }
  CHECK(caught > 0);
}

TEST_CASE("closure properties after propagation") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 30; ++n) {
    ConstraintMatrix m = widened(rng, 5, 6);
    PropagationOutcome r = ic_pa(m);
    REQUIRE(r.status == PropagationStatus::closed);
    CHECK(is_path_closed(r.matrix));
    CHECK(r.matrix.property_violations().empty());
    CHECK(refines(r.matrix, m));
  }
}

TEST_CASE("propagation does not depend on the queue order") {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 15; ++n) {
    ConstraintMatrix m = widened(rng, 5, 20);
    PropagationOutcome base = ic_pa(m);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      PropagationOptions opt;
      opt.shuffle_seed = seed;
      PropagationOutcome other = ic_pa(m, opt);
      CHECK(other.status == base.status);
      if (base.status == PropagationStatus::closed) CHECK(other.matrix == base.matrix);
    }
  }
}

TEST_CASE("trace steps only shrink entries") {
  auto m = matrix_from_constraints(Algebra::pa, 4, robot_constraints());
  PropagationOptions opt;
  opt.trace = true;
  PropagationOutcome r = ic_pa(*m, opt);
  CHECK(!r.trace.empty());
  CHECK(static_cast<std::int64_t>(r.trace.size()) == r.stats.revisions);
  for (const TraceStep& t : r.trace) {
    CHECK(t.after.subset_of(t.before));
    CHECK(t.after != t.before);
  }
}

TEST_CASE("search on atomic and empty inputs") {
  std::mt19937_64 rng(5);
  Scene s = oracle::random_scene(rng, 4, 2, 2);
  ConstraintMatrix h = harvest_matrix(s, Algebra::cpa);
  SearchOutcome found = ic_sa(h);
  REQUIRE(found.status == SearchStatus::found);
  CHECK(*found.scenario == h);

  ConstraintMatrix bad(Algebra::cpa, 3);
  std::vector<Constraint> none;
  auto m = matrix_from_constraints(Algebra::cpa, 3, none);
  const AtomTables& c = cpa_tables();
  m->restrict(0, 1, 2, c.relation({"*:lll"}));
  const size_t keep = m->mark();
  (void)keep;
  ConstraintMatrix e = *m;
  e.restrict(0, 1, 2, c.relation({"*:rrr"}));
  SearchOutcome ex = ic_sa(e);
  CHECK(ex.status == SearchStatus::exhausted);
  CHECK(ex.stats.nodes <= 1);
}

TEST_CASE("search limits and rejected leaves") {
  ConstraintMatrix m(Algebra::cpa, 4);
  SearchOptions limited;
  limited.node_limit = 3;
  CHECK(ic_sa(m, limited).status == SearchStatus::limit);

  ConstraintMatrix small(Algebra::cpa, 3);
  small.restrict(0, 1, 2, cpa_tables().relation({"*:lll", "*:rrr"}));
  SearchOptions reject;
  reject.accept = [](const ConstraintMatrix&) { return false; };
  SearchOutcome r = ic_sa(small, reject);
  CHECK(r.status == SearchStatus::exhausted);
  CHECK(r.stats.rejected_leaves >= 2);
}

TEST_CASE("search scenarios refine the input and are closed") {
  std::mt19937_64 rng(6);
  for (int n = 0; n < 20; ++n) {
    ConstraintMatrix m = widened(rng, 5, 10);
    SearchOutcome s = ic_sa(m);
    REQUIRE(s.status == SearchStatus::found);
    CHECK(s.scenario->all_atomic());
    CHECK(refines(*s.scenario, m));
    CHECK(is_path_closed(*s.scenario));
    CHECK(extract_model(*s.scenario).ok);
  }
}

TEST_CASE("search agrees with enumeration on five variables") {
  std::mt19937_64 rng(7);
  const AtomTables& c = cpa_tables();
  int consistent = 0;
  for (int n = 0; n < 12; ++n) {
    ConstraintMatrix m(Algebra::cpa, 5);
    Scene s = oracle::random_scene(rng, 5, 2, 2);
    ConstraintMatrix h = harvest_matrix(s, Algebra::cpa);
    for (const Triple& t : h.canonical_triples()) {
      if (t.i == t.j || t.j == t.k) continue;
      Relation r = (rng() % 8 == 0) ? Relation::atom(Algebra::cpa, rng() % c.size()) : h.at(t);
      for (int e = 0; e < 2; ++e) r.insert(static_cast<AtomId>(rng() % c.size()));
      if (!m.restrict(t.i, t.j, t.k, r)) break;
    }
    bool truth = !m.has_empty() && oracle::enumerate_consistent(m);
    bool verdict = !m.has_empty() && ic_sa(m).status == SearchStatus::found;
    CHECK(truth == verdict);
    consistent += truth;
  }
  MESSAGE(consistent << " of 12 consistent");
}
