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

// Geometric models of atomic networks. Orientations are chosen first, one
// variable at a time, then offsets, each new line in its own frame.

#ifndef DLINES_REALIZE_HPP_
#define DLINES_REALIZE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dlines/csp.hpp"
#include "dlines/geometry.hpp"

namespace dlines {

struct Realization {
  Scene scene;
  std::vector<int> order;        // assignment order of the variables
  std::vector<std::string> log;  // feasible sets, one line per decision
};

struct ExtractResult {
  bool ok = false;
  Realization realization;
  std::string failure;  // set when !ok
};

/// Builds a scene for an atomic, four-consistent matrix. For coarse
/// matrices every step is guaranteed to succeed. For combined-algebra
/// matrices the crossing-order and concurrency constraints are also
/// honoured; when the greedy choices fail, up to 120 further attempts
/// with other variable orders and seeded random choices are made before
/// reporting a failure, which does not prove the scenario has no model.
/// Throws std::invalid_argument if an entry is not atomic.
ExtractResult extract_model(const ConstraintMatrix& m);

struct SolutionCheck {
  bool ok = true;
  Triple triple{0, 0, 0};  // first violated triple
  std::string found;       // atom classified on it
  std::string detail() const;
};

/// Classifies every ordered triple of the scene and checks membership in
/// the matrix entry. Throws std::invalid_argument on a size mismatch.
SolutionCheck check_solution(const ConstraintMatrix& m, const Scene& scene);

/// The atomic matrix of a scene in pa or cpa.
ConstraintMatrix harvest_matrix(const Scene& scene, Algebra alg);

}  // namespace dlines

#endif  // DLINES_REALIZE_HPP_
