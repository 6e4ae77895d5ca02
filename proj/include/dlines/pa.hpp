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

// The combined algebra of pairs <t, r> with t a translation atom and r an
// orientation atom that agree on which lines are parallel, and its coarse
// variant in which the three cc atoms over a pairwise cutting orientation
// are merged into one atom "*:r".

#ifndef DLINES_PA_HPP_
#define DLINES_PA_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlines/relation.hpp"

namespace dlines {

struct PaAtom {
  AtomId ta;
  AtomId cyc;
};

/// True iff <ta, cyc> belongs to the algebra.
bool pa_compatible(AtomId ta, AtomId cyc);

/// The 112 names "<ta>:<cyc>" in increasing order.
const std::vector<std::string>& pa_atom_names();
PaAtom pa_components(AtomId atom);
std::optional<AtomId> pa_atom(AtomId ta, AtomId cyc);
AtomId pa_atom(std::string_view name);

/// All compatible pairs of atoms of the two relations.
Relation pa_cross(const Relation& ta_rel, const Relation& cyc_rel);
Relation pa_project_ta(const Relation& pa_rel);
Relation pa_project_cyc(const Relation& pa_rel);
Relation embed_ta(const Relation& ta_rel);
Relation embed_cyc(const Relation& cyc_rel);

/// Converse and composition component-wise, rotation as listed in code.
const AtomTables& pa_tables();
AtomTables build_pa_tables(const AtomTables& ta, const AtomTables& cyc);

/// The 96 coarse atoms in increasing order: "*:<cyc>" for the pairwise
/// cutting orientations, otherwise the combined names.
const std::vector<std::string>& cpa_atom_names();
AtomId coarsen_atom(AtomId pa_atom);
Relation coarsen(const Relation& pa_rel);
Relation refine(const Relation& cpa_rel);
/// True iff refine(coarsen(r)) == r.
bool cpa_expressible(const Relation& pa_rel);

/// Operations obtained by refining, operating in the combined algebra and
/// coarsening again.
const AtomTables& cpa_tables();
AtomTables build_cpa_tables(const AtomTables& pa);

/// The tables of an algebra by tag.
const AtomTables& tables_for(Algebra alg);

/// Converts a combined-algebra relation for use in `target` (pa or cpa).
/// Throws std::invalid_argument if it cannot be expressed exactly.
Relation to_algebra(const Relation& pa_rel, Algebra target);
/// Refines a cpa relation; leaves pa relations alone.
Relation to_pa(const Relation& r);

/// Parses one atom name of the combined or coarse algebra, also accepting
/// bare orientation or translation names which stand for their
/// embeddings. Returns a pa relation.
Relation parse_pa_atom_token(std::string_view token);

}  // namespace dlines

#endif  // DLINES_PA_HPP_
