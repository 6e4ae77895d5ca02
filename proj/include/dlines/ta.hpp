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

// Translation-sensitive relations on triples (x, y, z) of directed lines:
//
//   cc_lt, cc_eq, cc_gt  y and z cut x; y's crossing is before, at or after
//                        z's along x
//   cp_m                 y cuts x, z is parallel to x on side m
//   pc_m                 y is parallel to x on side m, z cuts x
//   pp_mn                y is parallel to x on side m, z lies in region n
//
// Sides are l (left half-plane of x), c (coincident) and r.

#ifndef DLINES_TA_HPP_
#define DLINES_TA_HPP_

#include <array>
#include <string_view>
#include <vector>

#include "dlines/relation.hpp"
#include "dlines/table_io.hpp"

namespace dlines {

enum class TaGroup : std::uint8_t { cc, cp, pc, pp };

/// Position of one line with respect to x.
enum class Side : std::uint8_t { cuts, l, c, r };

/// The 22 atom names in increasing order.
const std::array<std::string_view, 22>& ta_atom_names();
AtomId ta_atom(std::string_view name);
TaGroup ta_group(AtomId atom);

/// Position of y (proj21) or z (proj31) with respect to x.
Side ta_proj21(AtomId atom);
Side ta_proj31(AtomId atom);
/// All atoms with the given projection.
Relation ta_with_proj21(Side s);
Relation ta_with_proj31(Side s);

Relation ta_cc();

/// The algebra as listed in code. Rotation is relation valued.
const AtomTables& ta_tables();
AtomTables build_ta_tables();

/// The four blocks of non-empty composition cells followed by the cells
/// whose operands disagree on the position of the shared line.
std::vector<CompGroup> ta_composition_groups();

}  // namespace dlines

#endif  // DLINES_TA_HPP_
