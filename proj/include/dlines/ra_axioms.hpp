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

#ifndef DLINES_RA_AXIOMS_HPP_
#define DLINES_RA_AXIOMS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dlines/relation.hpp"

namespace dlines {

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::int64_t atom_checks = 0;
  std::int64_t sample_checks = 0;
  std::string counterexample;  // empty when passed
};

struct RaReport {
  std::vector<AxiomResult> axioms;
  bool all_passed() const;
  std::string str() const;
};

/// Checks the relation-algebra axioms for ternary relations: exhaustively
/// on atoms where that is meaningful and on `samples` random relations
/// (or pairs, or triples) per axiom.
RaReport check_ra_axioms(const AtomTables& t, int samples, std::uint64_t seed);

/// A random relation; sizes are spread so that small relations are common.
Relation random_relation(Algebra alg, std::mt19937_64& rng);

}  // namespace dlines

#endif  // DLINES_RA_AXIOMS_HPP_
