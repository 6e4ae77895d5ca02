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

// Tables reconstructed from geometry. Every entry is witnessed by a grid
// scene, so the derived tables are sound; completeness is checked by
// rerunning on a larger grid and requiring the result not to grow.

#ifndef DLINES_DERIVE_HPP_
#define DLINES_DERIVE_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "dlines/relation.hpp"

namespace dlines {

struct GridBounds {
  int dir = 2;      // |a|, |b| of directions
  int offset = 3;   // |q| of integer offsets
};

/// Derivation did not saturate: the larger grid produced more atoms.
class DerivationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One pass over the grid, without the saturation check. The orientation
/// algebra only uses the direction bound.
AtomTables derive_tables(Algebra alg, GridBounds bounds);

/// Derives on `bounds` and on the next larger grid and throws
/// DerivationError naming the first entry that differs.
AtomTables derive_saturated(Algebra alg, GridBounds bounds = {});

/// Differences between stored tables and a saturated derivation, one
/// line per entry. Empty when the tables agree.
std::vector<std::string> validate_tables(const AtomTables& stored,
                                         GridBounds bounds = {});

/// Table dump, grouped for the translation algebra.
std::string dump_algebra(const AtomTables& t);

}  // namespace dlines

#endif  // DLINES_DERIVE_HPP_
