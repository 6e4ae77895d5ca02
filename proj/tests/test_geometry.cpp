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

#include <set>

#include "doctest.h"
#include "dlines/derive.hpp"
#include "dlines/geometry.hpp"
#include "dlines/pa.hpp"
#include "dlines/ta.hpp"

using namespace dlines;

namespace {

DLine L(std::int64_t a, std::int64_t b, std::int64_t q) { return DLine(a, b, Rational(q)); }

DLine moved(const DLine& l, std::int64_t dx, std::int64_t dy, bool quarter_turn) {
  Point p = l.anchor();
  Direction d = l.dir();
  if (quarter_turn) {
    p = {-p.y, p.x};
    d = {-d.b, d.a};
  }
  p = {p.x + Rational(dx), p.y + Rational(dy)};
  return DLine::through(p, d);
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse("-4").str() == "-4/1");
  CHECK(Rational::parse("2/-4") == Rational(-1, 2));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("intersections") {
  auto p = intersect(L(1, 0, 0), L(0, 1, -1));
  REQUIRE(p);
  CHECK(*p == Point{Rational(1), Rational(0)});
  CHECK_FALSE(intersect(L(1, 0, 0), L(1, 0, 5)));
  CHECK_FALSE(intersect(L(1, 0, 0), L(-1, 0, 0)));
  CHECK(coincide(L(1, 0, 0), L(-1, 0, 0)));
  CHECK(coincide(L(1, 0, 2), L(1, 0, 2).reversed()));
  CHECK_FALSE(coincide(L(1, 0, 0), L(1, 0, 1)));
}

TEST_CASE("order along a line") {
  Point a{Rational(1), Rational(0)}, b{Rational(2), Rational(0)};
  CHECK(order_along(L(1, 0, 0), a, b) == Ordering::less);
  CHECK(order_along(L(1, 0, 0), a, a) == Ordering::equal);
  CHECK(order_along(L(-1, 0, 0), a, b) == Ordering::greater);
  CHECK_THROWS(order_along(L(1, 0, 1), a, b));
}

TEST_CASE("regions of parallel lines") {
  CHECK(pp_region(Rational(0), Rational(1), Rational(3)) == 0);
  CHECK(pp_region(Rational(0), Rational(1), Rational(0)) == 3);
  CHECK(pp_region(Rational(0), Rational(0), Rational(-1)) == 2);
  CHECK(pp_region(Rational(0), Rational(-1), Rational(-2)) == 4);
  CHECK(frame_offset(L(1, 0, 0), L(-1, 0, 2)) == Rational(-2));
  CHECK_THROWS(frame_offset(L(1, 0, 0), L(0, 1, 0)));
}

TEST_CASE("classification examples") {
  const AtomTables& p = pa_tables();
  CHECK(p.name(classify_pa(L(1, 0, 0), L(0, 1, -1), L(0, 1, -2))) == "cc_lt:lel");
  CHECK(p.name(classify_pa(L(1, 0, 0), L(1, 0, 1), L(1, 0, 3))) == "pp_l0:eee");
  CHECK(p.name(classify_pa(L(1, 0, 0), L(1, 0, 0), L(1, 0, 0))) == "pp_c1:eee");
  CHECK(cpa_tables().name(classify_cpa(L(1, 0, 0), L(1, 1, 0), L(0, 1, 0))) == "*:lll");
}

TEST_CASE("classification commutes with the component algebras") {
  for_each_grid_scene(3, 1, 2, [&](const Scene& s) {
    AtomId a = classify_pa(s[0], s[1], s[2]);
    PaAtom c = pa_components(a);
    CHECK(c.ta == classify_ta(s[0], s[1], s[2]));
    CHECK(c.cyc == classify_cyc(s[0], s[1], s[2]));
    CHECK(coarsen_atom(a) == classify_cpa(s[0], s[1], s[2]));
    return true;
  });
}

TEST_CASE("grid enumeration") {
  int scenes = 0;
  for_each_grid_scene(1, 2, 2, [&](const Scene& s) {
    ++scenes;
    CHECK(s[0] == L(1, 0, 0));
    return true;
  });
  CHECK(scenes == 1);
  std::set<AtomId> seen;
  for_each_grid_scene(3, 2, 2, [&](const Scene& s) {
    seen.insert(classify_pa(s[0], s[1], s[2]));
    return true;
  });
  CHECK(seen.size() == 112);
  CHECK(grid_directions(3).size() == 32);
}

TEST_CASE("classification is invariant under rigid motions") {
  for_each_grid_scene(3, 1, 2, [&](const Scene& s) {
    for (bool turn : {false, true}) {
      Scene m;
      for (const DLine& l : s) m.push_back(moved(l, 2, -3, turn));
      CHECK(classify_pa(m[0], m[1], m[2]) == classify_pa(s[0], s[1], s[2]));
    }
    return true;
  });
}

TEST_CASE("derived composition contains the quoted values") {
  AtomTables c = derive_tables(Algebra::cyc, {});
  CHECK(c.composition(c.id("rrl"), c.id("llo")) == c.relation({"rro"}));
}

TEST_CASE("validation reports a corrupted entry") {
  AtomTables t = ta_tables();
  const AtomId a = t.id("cc_lt"), b = t.id("cc_eq");
  t.set_composition(a, b, t.relation({"cc_gt"}));
  t.index();
  std::vector<std::string> diff = validate_tables(t);
  REQUIRE(diff.size() == 1);
  CHECK(diff[0].find("cc_lt,cc_eq") != std::string::npos);
}

TEST_CASE("formatted lines") {
  CHECK(format_dline(DLine(2, 4, Rational(3))) == "dline 1 2 3/1");
  CHECK(format_dline(DLine(-1, 0, Rational(1, 2))) == "dline -1 0 1/2");
}
