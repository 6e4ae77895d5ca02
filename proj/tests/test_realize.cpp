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
#include <random>

#include "doctest.h"
#include "dlines/cyc.hpp"
#include "dlines/pa.hpp"
#include "dlines/realize.hpp"
#include "oracles.hpp"

using namespace dlines;

namespace {

ConstraintMatrix closed_single(const char* atom) {
  ConstraintMatrix m(Algebra::cpa, 3);
  REQUIRE(m.restrict(0, 1, 2, cpa_tables().relation({atom})));
  PropagationOutcome p = ic_pa(m);
  REQUIRE(p.status == PropagationStatus::closed);
  return p.matrix;
}

}  // namespace

TEST_CASE("parallel lines with increasing offsets") {
  ConstraintMatrix m = closed_single("pp_l0:eee");
  REQUIRE(m.all_atomic());
  ExtractResult x = extract_model(m);
  REQUIRE(x.ok);
  const Scene& s = x.realization.scene;
  CHECK(s[0].dir() == s[1].dir());
  CHECK(s[1].dir() == s[2].dir());
  CHECK(s[0].offset() < s[1].offset());
  CHECK(s[1].offset() < s[2].offset());
}

TEST_CASE("identity gives coincident lines") {
  ConstraintMatrix m = closed_single("pp_c1:eee");
  ExtractResult x = extract_model(m);
  REQUIRE(x.ok);
  CHECK(x.realization.scene[0] == x.realization.scene[1]);
  CHECK(x.realization.scene[1] == x.realization.scene[2]);
}

TEST_CASE("harvested networks round trip") {
  std::mt19937_64 rng(12);
  for (int n = 0; n < 50; ++n) {
    Scene s = oracle::random_scene(rng, 5, 3, 3);
    ConstraintMatrix h = harvest_matrix(s, Algebra::cpa);
    ExtractResult x = extract_model(h);
    REQUIRE_MESSAGE(x.ok, x.failure);
    CHECK(harvest_matrix(x.realization.scene, Algebra::cpa) == h);
    CHECK(x.realization.log.size() >= 5);
  }
}

TEST_CASE("combined-algebra networks with crossing orders") {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 200; ++n) {
    Scene s = oracle::random_scene(rng, 5, 2, 3);
    ConstraintMatrix h = harvest_matrix(s, Algebra::pa);
    ExtractResult x = extract_model(h);
    REQUIRE_MESSAGE(x.ok, x.failure);
    CHECK(harvest_matrix(x.realization.scene, Algebra::pa) == h);
    std::vector<int> sorted = x.realization.order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4});
  }
}

TEST_CASE("solution checks") {
  std::mt19937_64 rng(14);
  Scene s = oracle::random_scene(rng, 4, 2, 2);
  while (s[0].dir() == s[1].dir() || s[0].dir() == s[1].reversed().dir())
    s = oracle::random_scene(rng, 4, 2, 2);
  ConstraintMatrix h = harvest_matrix(s, Algebra::pa);
  CHECK(check_solution(h, s).ok);
  Scene flipped = s;
  flipped[1] = s[1].reversed();
  SolutionCheck c = check_solution(h, flipped);
  CHECK_FALSE(c.ok);
  CHECK(c.detail().find("triple") != std::string::npos);
  CHECK(check_solution(ConstraintMatrix(Algebra::pa, 4), flipped).ok);
  CHECK_THROWS(check_solution(h, Scene(3)));
}

TEST_CASE("extraction needs atomic entries") {
  CHECK_THROWS_AS(extract_model(ConstraintMatrix(Algebra::cpa, 3)), std::invalid_argument);
}

TEST_CASE("orientation-only networks") {
  ConstraintMatrix m(Algebra::cyc, 3);
  REQUIRE(m.restrict(0, 1, 2, cyct_tables().relation({"lrl"})));
  PropagationOutcome p = ic_pa(m);
  REQUIRE(p.matrix.all_atomic());
  ExtractResult x = extract_model(p.matrix);
  REQUIRE(x.ok);
  CHECK(classify_cyc(x.realization.scene[0], x.realization.scene[1],
                     x.realization.scene[2]) == cyct_atom("lrl"));
}
