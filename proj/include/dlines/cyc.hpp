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

// Cyclic orientation of directions: the binary relations e, l, o, r and the
// ternary algebra over triples of directions.

#ifndef DLINES_CYC_HPP_
#define DLINES_CYC_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "dlines/relation.hpp"

namespace dlines {

/// A primitive non-zero integer vector.
struct Direction {
  std::int64_t a = 1;
  std::int64_t b = 0;

  friend bool operator==(const Direction&, const Direction&) = default;
};

/// Normalizes (a, b) by their gcd; throws std::invalid_argument on (0, 0).
Direction make_direction(std::int64_t a, std::int64_t b);
Direction opposite(const Direction& d);
/// Sign of the cross product d1 x d2.
int cross_sign(const Direction& d1, const Direction& d2);

enum class Cycb : std::uint8_t { e, l, o, r };

char cycb_char(Cycb b);
Cycb cycb_from_char(char c);
Cycb cycb_converse(Cycb b);

/// Relation of y with respect to x: l iff the angle from x to y lies in
/// (0, pi), r iff it lies in (pi, 2 pi).
Cycb cycb_classify(const Direction& y, const Direction& x);

/// Components of a ternary atom b1 b2 b3, meaning b1(y, x), b2(z, y) and
/// b3(z, x).
struct CycTriple {
  Cycb b1, b2, b3;
};

/// The 24 atom names in increasing order.
const std::array<std::string_view, 24>& cyct_atom_names();
CycTriple cyct_components(AtomId atom);
/// Throws std::invalid_argument if b1 b2 b3 is not realizable.
AtomId cyct_atom(Cycb b1, Cycb b2, Cycb b3);
AtomId cyct_atom(std::string_view name);

AtomId cyct_classify(const Direction& x, const Direction& y,
                     const Direction& z);

/// Partition of the atoms by the parallelism pattern of (x, y, z):
/// phi1 when y and z both cut x, phi2 when only y does, phi3 when only z
/// does and phi4 when neither does.
enum class Phi : std::uint8_t { phi1 = 1, phi2, phi3, phi4 };
Phi phi_class(AtomId cyct_atom);
Relation phi_relation(Phi p);

/// The eight atoms whose three directions are pairwise non-parallel.
Relation pairwise_cutting();

/// Tables with the embedded composition artifact. Throws std::runtime_error
/// if the artifact is missing or incomplete.
const AtomTables& cyct_tables();

/// Builds the tables from converse and rotation listed in code plus the
/// composition entries found in `composition_text`.
AtomTables build_cyct_tables(std::string_view composition_text);

/// Tables without composition, for derivation tools.
AtomTables cyct_skeleton();

}  // namespace dlines

#endif  // DLINES_CYC_HPP_
