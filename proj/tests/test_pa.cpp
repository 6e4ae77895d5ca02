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
#include <set>

#include "doctest.h"
#include "dlines/cyc.hpp"
#include "dlines/derive.hpp"
#include "dlines/geometry.hpp"
#include "dlines/pa.hpp"
#include "dlines/ra_axioms.hpp"
#include "dlines/ta.hpp"

using namespace dlines;

TEST_CASE("compatibility") {
  CHECK(pa_compatible(ta_atom("cc_lt"), cyct_atom("lrl")));
  CHECK_FALSE(pa_compatible(ta_atom("cc_lt"), cyct_atom("eee")));
  CHECK(pa_compatible(ta_atom("pp_l0"), cyct_atom("eoo")));
}

TEST_CASE("atom counts are computed") {
  int n = 0;
  for (AtomId t = 0; t < 22; ++t)
    for (AtomId c = 0; c < 24; ++c) n += pa_compatible(t, c);
  CHECK(n == 112);
  CHECK(pa_atom_names().size() == 112);
  // 3 cc x 12 + 3 cp x 4 + 3 pc x 4 + 13 pp x 4.
  CHECK(3 * 12 + 3 * 4 + 3 * 4 + 13 * 4 == n);
  std::set<AtomId> coarse;
  for (AtomId a = 0; a < 112; ++a) coarse.insert(coarsen_atom(a));
  CHECK(coarse.size() == 96);
  CHECK(cpa_atom_names().size() == 96);
}

TEST_CASE("projections and cross product") {
  const AtomTables& p = pa_tables();
  CHECK(pa_project_cyc(p.relation({"cc_lt:lrl", "cc_eq:lrl"})) ==
        cyct_tables().relation({"lrl"}));
  CHECK(pa_cross(ta_tables().relation({"cc_lt"}), cyct_tables().relation({"eee"}))
            .is_empty());
  std::mt19937_64 rng(9);
  for (int n = 0; n < 200; ++n) {
    Relation s = random_relation(Algebra::pa, rng);
    Relation x = pa_cross(pa_project_ta(s), pa_project_cyc(s));
    CHECK(s.subset_of(x));
  }
}

TEST_CASE("converse and composition values") {
  const AtomTables& p = pa_tables();
  CHECK(p.converse(p.id("pp_l0:ooe")) == p.relation({"pp_l2:eoo"}));
  CHECK(p.compose(p.relation({"cc_lt:rrl"}), p.relation({"cc_eq:lrr"})) ==
        p.relation({"cc_lt:rlr"}));
  CHECK(p.compose(p.relation({"cc_lt:rrl"}), p.relation({"cp_l:llo"})) ==
        p.relation({"cp_l:rro"}));
}

TEST_CASE("rotation rows") {
  const AtomTables& p = pa_tables();
  CHECK(p.rotation(p.id("cc_lt:lrl")) == p.relation({"cc_lt:rrr"}));
  CHECK(p.rotation(p.id("pp_l0:eee")) == p.relation({"pp_l4:eee"}));
  CHECK(p.rotation(p.id("pp_c1:eee")) == p.relation({"pp_c1:eee"}));
  // Printed as a different atom; the geometry fixes it.
  CHECK(p.rotation(p.id("cc_gt:rrl")) == p.relation({"cc_gt:rrl"}));
}

TEST_CASE("rotation and converse agree with grid scenes") {
  const AtomTables& p = pa_tables();
  for_each_grid_scene(3, 1, 2, [&](const Scene& s) {
    AtomId a = classify_pa(s[0], s[1], s[2]);
    CHECK(p.rotation(a) == Relation::atom(Algebra::pa, classify_pa(s[1], s[2], s[0])));
    CHECK(p.converse(a) == Relation::atom(Algebra::pa, classify_pa(s[0], s[2], s[1])));
    return true;
  });
}

TEST_CASE("identity element") {
  const AtomTables& p = pa_tables();
  CHECK(p.identity_comp() ==
        p.relation({"cc_eq:lel", "cc_eq:rer", "pp_c1:eee", "pp_c1:oeo", "pp_l1:eee",
                    "pp_l1:oeo", "pp_r3:eee", "pp_r3:oeo"}));
  CHECK(p.identity_diag() == p.relation({"pp_c1:eee"}));
}

TEST_CASE("coarse atoms") {
  const AtomTables& p = pa_tables();
  const AtomTables& c = cpa_tables();
  CHECK(coarsen(p.relation({"cc_lt:lll"})) == c.relation({"*:lll"}));
  CHECK(coarsen(p.relation({"cc_lt:lel"})) == c.relation({"cc_lt:lel"}));
  CHECK(refine(c.relation({"*:lll"})) ==
        p.relation({"cc_lt:lll", "cc_eq:lll", "cc_gt:lll"}));
  CHECK_FALSE(cpa_expressible(p.relation({"cc_lt:lll"})));
  CHECK(cpa_expressible(p.relation({"cc_lt:lel"})));
  CHECK_THROWS_AS(to_algebra(p.relation({"cc_lt:lll"}), Algebra::cpa), std::invalid_argument);
}

TEST_CASE("coarse operations stay expressible") {
  const AtomTables& p = pa_tables();
  const AtomTables& c = cpa_tables();
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    Relation a = random_relation(Algebra::cpa, rng), b = random_relation(Algebra::cpa, rng);
    Relation ab = p.compose(refine(a), refine(b));
    CHECK(cpa_expressible(ab));
    CHECK(refine(c.compose(a, b)) == ab);
    CHECK(cpa_expressible(converse(refine(a), p)));
    CHECK(cpa_expressible(rotate(refine(a), p)));
    CHECK(refine(rotate(a, c)) == rotate(refine(a), p));
  }
}

TEST_CASE("embeddings") {
  const AtomTables& p = pa_tables();
  CHECK(embed_cyc(cyct_tables().relation({"lel"})) ==
        p.relation({"cc_lt:lel", "cc_eq:lel", "cc_gt:lel"}));
  CHECK(embed_ta(ta_tables().relation({"pp_c1"})) ==
        p.relation({"pp_c1:eee", "pp_c1:eoo", "pp_c1:ooe", "pp_c1:oeo"}));
  CHECK(embed_cyc(cyct_tables().universal()) == p.universal());
}

TEST_CASE("atom tokens") {
  const AtomTables& p = pa_tables();
  CHECK(parse_pa_atom_token("cc_lt:rrl") == p.relation({"cc_lt:rrl"}));
  CHECK(parse_pa_atom_token("oeo") == embed_cyc(cyct_tables().relation({"oeo"})));
  CHECK(parse_pa_atom_token("pc_l") == embed_ta(ta_tables().relation({"pc_l"})));
  CHECK(parse_pa_atom_token("*:lll") == refine(cpa_tables().relation({"*:lll"})));
  CHECK_THROWS(parse_pa_atom_token("cc_lt:eee"));
  CHECK_THROWS(parse_pa_atom_token("xyz"));
}

TEST_CASE("stored tables equal a saturated derivation") {
  CHECK(validate_tables(pa_tables()).empty());
}
