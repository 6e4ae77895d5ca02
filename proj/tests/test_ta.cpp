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

#include <algorithm>

#include "doctest.h"
#include "dlines/derive.hpp"
#include "dlines/geometry.hpp"
#include "dlines/ta.hpp"
#include "dlines/table_io.hpp"

using namespace dlines;

TEST_CASE("atom inventory") {
  const auto& names = ta_atom_names();
  CHECK(names.size() == 22);
  int pp = 0;
  for (AtomId a = 0; a < 22; ++a) pp += ta_group(a) == TaGroup::pp;
  CHECK(pp == 13);
}

TEST_CASE("converse rows") {
  const AtomTables& t = ta_tables();
  CHECK(t.converse(t.id("cc_lt")) == t.relation({"cc_gt"}));
  CHECK(t.converse(t.id("pp_l0")) == t.relation({"pp_l2"}));
  CHECK(t.converse(t.id("pp_c1")) == t.relation({"pp_c1"}));
  for (AtomId a = 0; a < t.size(); ++a)
    CHECK(converse(t.converse(a), t) == Relation::atom(Algebra::ta, a));
}

TEST_CASE("rotation rows") {
  const AtomTables& t = ta_tables();
  CHECK(t.rotation(t.id("cc_eq")) == t.relation({"cc_eq", "pc_c"}));
  CHECK(t.rotation(t.id("cp_c")) == t.relation({"cc_eq"}));
  CHECK(t.rotation(t.id("pp_l1")) == t.relation({"pp_c0", "pp_c2"}));
}

TEST_CASE("binary projections") {
  CHECK(ta_proj31(ta_atom("cc_lt")) == Side::cuts);
  CHECK(ta_proj21(ta_atom("pp_l3")) == Side::l);
  CHECK(ta_proj31(ta_atom("cp_c")) == Side::c);
  const AtomTables& t = ta_tables();
  CHECK(ta_with_proj31(Side::cuts) ==
        t.relation({"cc_lt", "cc_eq", "cc_gt", "pc_l", "pc_c", "pc_r"}));
  CHECK(ta_cc() == t.relation({"cc_lt", "cc_eq", "cc_gt"}));
}

TEST_CASE("composition values") {
  const AtomTables& t = ta_tables();
  CHECK(t.compose(t.relation({"cc_lt"}), t.relation({"cc_eq"})) == t.relation({"cc_lt"}));
  CHECK(t.compose(t.relation({"cc_lt"}), t.relation({"pp_l0"})).is_empty());
  CHECK(t.compose(t.relation({"pp_r3"}), t.relation({"pp_r2"})) == t.relation({"pp_r2"}));
  // The printed table has {cc_lt} here; the geometry gives {cc_gt}.
  CHECK(t.compose(t.relation({"cc_gt"}), t.relation({"cc_eq"})) == t.relation({"cc_gt"}));
}

TEST_CASE("composition is empty unless the shared line agrees") {
  const AtomTables& t = ta_tables();
  for (AtomId a = 0; a < t.size(); ++a)
    for (AtomId b = 0; b < t.size(); ++b)
      if (ta_proj31(a) != ta_proj21(b)) CHECK(t.composition(a, b).is_empty());
}

TEST_CASE("non-empty compositions per case") {
  const AtomTables& t = ta_tables();
  std::vector<int> counts;
  int total = 0;
  for (const CompGroup& g : ta_composition_groups()) {
    int n = 0;
    for (auto [a, b] : g.cells) n += !t.composition(a, b).is_empty();
    counts.push_back(n);
    total += n;
  }
  CHECK(counts == std::vector<int>{36, 36, 16, 36, 0});
  CHECK(total == 124);
}

TEST_CASE("converse and rotation agree with grid scenes") {
  const AtomTables& t = ta_tables();
  for_each_grid_scene(3, 1, 2, [&](const Scene& s) {
    AtomId a = classify_ta(s[0], s[1], s[2]);
    CHECK(t.converse(a).contains(classify_ta(s[0], s[2], s[1])));
    CHECK(t.rotation(a).contains(classify_ta(s[1], s[2], s[0])));
    return true;
  });
}

TEST_CASE("stored tables equal a saturated derivation") {
  CHECK(validate_tables(ta_tables()).empty());
}

TEST_CASE("dump keeps the four cases") {
  std::string text = dump_algebra(ta_tables());
  CHECK(text.find("ta conv pp_l0 = {pp_l2}") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '#') >= 4);
}
