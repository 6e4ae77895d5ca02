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

#include "dlines/pa.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "dlines/cyc.hpp"
#include "dlines/ta.hpp"

namespace dlines {

bool pa_compatible(AtomId ta, AtomId cyc) {
  Phi p = phi_class(cyc);
  switch (ta_group(ta)) {
    case TaGroup::cc:
      return p == Phi::phi1;
    case TaGroup::cp:
      return p == Phi::phi2;
    case TaGroup::pc:
      return p == Phi::phi3;
    case TaGroup::pp:
      return p == Phi::phi4;
  }
  return false;
}

namespace {

struct PaIndex {
  std::vector<std::string> names;
  std::vector<PaAtom> components;
  std::array<std::array<int, 24>, 22> by_pair;  // -1 when incompatible
};

const PaIndex& pa_index() {
  static const PaIndex idx = [] {
    PaIndex x;
    std::vector<std::pair<std::string, PaAtom>> all;
    for (AtomId t = 0; t < 22; ++t)
      for (AtomId c = 0; c < 24; ++c)
        if (pa_compatible(t, c))
          all.push_back({std::string(ta_atom_names()[t]) + ":" +
                             std::string(cyct_atom_names()[c]),
                         {t, c}});
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& row : x.by_pair) row.fill(-1);
    for (const auto& [name, pc] : all) {
      x.by_pair[pc.ta][pc.cyc] = static_cast<int>(x.names.size());
      x.names.push_back(name);
      x.components.push_back(pc);
    }
    return x;
  }();
  return idx;
}

}  // namespace

const std::vector<std::string>& pa_atom_names() { return pa_index().names; }

PaAtom pa_components(AtomId atom) { return pa_index().components.at(atom); }

std::optional<AtomId> pa_atom(AtomId ta, AtomId cyc) {
  int a = pa_index().by_pair.at(ta).at(cyc);
  if (a < 0) return std::nullopt;
  return a;
}

AtomId pa_atom(std::string_view name) {
  const auto& names = pa_atom_names();
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name)
    throw std::invalid_argument("unknown pa atom '" + std::string(name) + "'");
  return static_cast<AtomId>(it - names.begin());
}

Relation pa_cross(const Relation& ta_rel, const Relation& cyc_rel) {
  if (ta_rel.algebra() != Algebra::ta || cyc_rel.algebra() != Algebra::cyc)
    throw std::invalid_argument("pa_cross expects a ta and a cyc relation");
  Relation out(Algebra::pa);
  ta_rel.for_each([&](AtomId t) {
    cyc_rel.for_each([&](AtomId c) {
      if (auto a = pa_atom(t, c)) out.insert(*a);
    });
  });
  return out;
}

Relation pa_project_ta(const Relation& r) {
  if (r.algebra() != Algebra::pa) throw std::invalid_argument("not a pa relation");
  Relation out(Algebra::ta);
  r.for_each([&](AtomId a) { out.insert(pa_components(a).ta); });
  return out;
}

Relation pa_project_cyc(const Relation& r) {
  if (r.algebra() != Algebra::pa) throw std::invalid_argument("not a pa relation");
  Relation out(Algebra::cyc);
  r.for_each([&](AtomId a) { out.insert(pa_components(a).cyc); });
  return out;
}

Relation embed_ta(const Relation& ta_rel) {
  return pa_cross(ta_rel, Relation::universal(Algebra::cyc));
}

Relation embed_cyc(const Relation& cyc_rel) {
  return pa_cross(Relation::universal(Algebra::ta), cyc_rel);
}

namespace {

struct RotCell {
  std::string from;
  std::string to;
};

// Rotation of every combined atom. For the pp rows the orientation part
// maps eee -> eee, eoo -> ooe, ooe -> oeo and oeo -> eoo.
const std::vector<RotCell>& rotation_cells() {
  static const std::vector<RotCell> cells = [] {
    std::vector<RotCell> c = {
        {"cc_lt:lrl", "cc_lt:rrr"}, {"cc_lt:lel", "pc_r:err"},
        {"cc_lt:lll", "cc_gt:lrr"}, {"cc_lt:llr", "cc_lt:llr"},
        {"cc_lt:lor", "pc_r:olr"},  {"cc_lt:lrr", "cc_gt:rlr"},
        {"cc_lt:rll", "cc_gt:lrl"}, {"cc_lt:rol", "pc_l:orl"},
        {"cc_lt:rrl", "cc_lt:rrl"}, {"cc_lt:rrr", "cc_gt:rll"},
        {"cc_lt:rer", "pc_l:ell"},  {"cc_lt:rlr", "cc_lt:lll"},

        {"cc_eq:lrl", "cc_eq:rrr"}, {"cc_eq:lel", "pc_c:err"},
        {"cc_eq:lll", "cc_eq:lrr"}, {"cc_eq:llr", "cc_eq:llr"},
        {"cc_eq:lor", "pc_c:olr"},  {"cc_eq:lrr", "cc_eq:rlr"},
        {"cc_eq:rll", "cc_eq:lrl"}, {"cc_eq:rol", "pc_c:orl"},
        {"cc_eq:rrl", "cc_eq:rrl"}, {"cc_eq:rrr", "cc_eq:rll"},
        {"cc_eq:rer", "pc_c:ell"},  {"cc_eq:rlr", "cc_eq:lll"},

        {"cc_gt:lrl", "cc_gt:rrr"}, {"cc_gt:lel", "pc_l:err"},
        {"cc_gt:lll", "cc_lt:lrr"}, {"cc_gt:llr", "cc_gt:llr"},
        {"cc_gt:lor", "pc_l:olr"},  {"cc_gt:lrr", "cc_lt:rlr"},
        {"cc_gt:rll", "cc_lt:lrl"}, {"cc_gt:rol", "pc_r:orl"},
        // As for llr, the order of the crossings is kept.
        {"cc_gt:rrl", "cc_gt:rrl"}, {"cc_gt:rrr", "cc_lt:rll"},
        {"cc_gt:rer", "pc_r:ell"},  {"cc_gt:rlr", "cc_gt:lll"},

        {"cp_l:lre", "cc_gt:rer"},  {"cp_l:llo", "cc_gt:lor"},
        {"cp_l:rle", "cc_lt:lel"},  {"cp_l:rro", "cc_lt:rol"},
        {"cp_c:lre", "cc_eq:rer"},  {"cp_c:llo", "cc_eq:lor"},
        {"cp_c:rle", "cc_eq:lel"},  {"cp_c:rro", "cc_eq:rol"},
        {"cp_r:lre", "cc_lt:rer"},  {"cp_r:llo", "cc_lt:lor"},
        {"cp_r:rle", "cc_gt:lel"},  {"cp_r:rro", "cc_gt:rol"},

        {"pc_l:ell", "cp_r:lre"},   {"pc_l:err", "cp_r:rle"},
        {"pc_l:orl", "cp_l:rro"},   {"pc_l:olr", "cp_l:llo"},
        {"pc_c:ell", "cp_c:lre"},   {"pc_c:err", "cp_c:rle"},
        {"pc_c:orl", "cp_c:rro"},   {"pc_c:olr", "cp_c:llo"},
        {"pc_r:ell", "cp_l:lre"},   {"pc_r:err", "cp_l:rle"},
        {"pc_r:orl", "cp_r:rro"},   {"pc_r:olr", "cp_r:llo"},
    };
    // Translation part of the image for the eee/eoo and ooe/oeo columns.
    static const char* const pp[][3] = {
        {"pp_l0", "pp_l4", "pp_r0"}, {"pp_l1", "pp_c2", "pp_c0"},
        {"pp_l2", "pp_r4", "pp_l0"}, {"pp_l3", "pp_r3", "pp_l1"},
        {"pp_l4", "pp_r2", "pp_l2"}, {"pp_c0", "pp_l3", "pp_r1"},
        {"pp_c1", "pp_c1", "pp_c1"}, {"pp_c2", "pp_r1", "pp_l3"},
        {"pp_r0", "pp_l2", "pp_r2"}, {"pp_r1", "pp_l1", "pp_r3"},
        {"pp_r2", "pp_l0", "pp_r4"}, {"pp_r3", "pp_c0", "pp_c2"},
        {"pp_r4", "pp_r0", "pp_l4"},
    };
    for (const auto& row : pp) {
      const char* cols[4][3] = {{"eee", "eee", row[1]},
                                {"eoo", "ooe", row[1]},
                                {"ooe", "oeo", row[2]},
                                {"oeo", "eoo", row[2]}};
      for (const auto& col : cols)
        c.push_back({std::string(row[0]) + ":" + col[0],
                     std::string(col[2]) + ":" + col[1]});
    }
    return c;
  }();
  return cells;
}

}  // namespace

AtomTables build_pa_tables(const AtomTables& ta, const AtomTables& cyc) {
  AtomTables t(Algebra::pa, pa_atom_names());
  const int n = t.size();
  for (AtomId a = 0; a < n; ++a) {
    PaAtom x = pa_components(a);
    t.set_converse(a, pa_cross(ta.converse(x.ta), cyc.converse(x.cyc)));
  }
  std::vector<char> rotated(n, 0);
  for (const RotCell& c : rotation_cells()) {
    AtomId a = pa_atom(c.from);
    if (rotated[a]++) throw std::logic_error("rotation listed twice");
    t.set_rotation(a, Relation::atom(Algebra::pa, pa_atom(c.to)));
  }
  for (char r : rotated)
    if (!r) throw std::logic_error("rotation table is incomplete");
  for (AtomId a = 0; a < n; ++a) {
    PaAtom x = pa_components(a);
    for (AtomId b = 0; b < n; ++b) {
      PaAtom y = pa_components(b);
      t.set_composition(a, b,
                        pa_cross(ta.composition(x.ta, y.ta),
                                 cyc.composition(x.cyc, y.cyc)));
    }
  }
  t.set_identity_diag(t.relation({"pp_c1:eee"}));
  t.set_identity_comp(pa_cross(ta.identity_comp(), cyc.identity_comp()));
  t.index();
  return t;
}

const AtomTables& pa_tables() {
  static const AtomTables tables = build_pa_tables(ta_tables(), cyct_tables());
  return tables;
}

namespace {

struct CpaIndex {
  std::vector<std::string> names;
  std::vector<AtomId> coarse_of;    // indexed by pa atom
  std::vector<Relation> refined;    // indexed by cpa atom
};

const CpaIndex& cpa_index() {
  static const CpaIndex idx = [] {
    CpaIndex x;
    const Relation pc = pairwise_cutting();
    std::vector<std::string> names;
    for (AtomId a = 0; a < 112; ++a) {
      PaAtom c = pa_components(a);
      if (pc.contains(c.cyc))
        names.push_back("*:" + std::string(cyct_atom_names()[c.cyc]));
      else
        names.push_back(pa_atom_names()[a]);
    }
    x.names = names;
    std::sort(x.names.begin(), x.names.end());
    x.names.erase(std::unique(x.names.begin(), x.names.end()), x.names.end());
    x.refined.assign(x.names.size(), Relation(Algebra::pa));
    for (AtomId a = 0; a < 112; ++a) {
      auto it = std::lower_bound(x.names.begin(), x.names.end(), names[a]);
      AtomId c = static_cast<AtomId>(it - x.names.begin());
      x.coarse_of.push_back(c);
      x.refined[c].insert(a);
    }
    return x;
  }();
  return idx;
}

}  // namespace

const std::vector<std::string>& cpa_atom_names() { return cpa_index().names; }

AtomId coarsen_atom(AtomId pa) { return cpa_index().coarse_of.at(pa); }

Relation coarsen(const Relation& r) {
  if (r.algebra() != Algebra::pa) throw std::invalid_argument("not a pa relation");
  Relation out(Algebra::cpa);
  r.for_each([&](AtomId a) { out.insert(coarsen_atom(a)); });
  return out;
}

Relation refine(const Relation& r) {
  if (r.algebra() != Algebra::cpa)
    throw std::invalid_argument("not a cpa relation");
  Relation out(Algebra::pa);
  r.for_each([&](AtomId a) { out |= cpa_index().refined[a]; });
  return out;
}

bool cpa_expressible(const Relation& r) { return refine(coarsen(r)) == r; }

AtomTables build_cpa_tables(const AtomTables& pa) {
  AtomTables t(Algebra::cpa, cpa_atom_names());
  const int n = t.size();
  for (AtomId a = 0; a < n; ++a) {
    Relation ra = refine(Relation::atom(Algebra::cpa, a));
    t.set_converse(a, coarsen(converse(ra, pa)));
    t.set_rotation(a, coarsen(rotate(ra, pa)));
  }
  for (AtomId a = 0; a < n; ++a) {
    Relation ra = refine(Relation::atom(Algebra::cpa, a));
    for (AtomId b = 0; b < n; ++b) {
      Relation rb = refine(Relation::atom(Algebra::cpa, b));
      t.set_composition(a, b, coarsen(pa.compose(ra, rb)));
    }
  }
  t.set_identity_diag(coarsen(pa.identity_diag()));
  t.set_identity_comp(coarsen(pa.identity_comp()));
  t.index();
  return t;
}

const AtomTables& cpa_tables() {
  static const AtomTables tables = build_cpa_tables(pa_tables());
  return tables;
}

const AtomTables& tables_for(Algebra alg) {
  switch (alg) {
    case Algebra::cyc:
      return cyct_tables();
    case Algebra::ta:
      return ta_tables();
    case Algebra::pa:
      return pa_tables();
    case Algebra::cpa:
      return cpa_tables();
  }
  throw std::invalid_argument("unknown algebra");
}

Relation to_algebra(const Relation& r, Algebra target) {
  if (r.algebra() != Algebra::pa) throw std::invalid_argument("not a pa relation");
  if (target == Algebra::pa) return r;
  if (target != Algebra::cpa)
    throw std::invalid_argument("target must be pa or cpa");
  if (!cpa_expressible(r))
    throw std::invalid_argument(
        "relation " + pa_tables().format(r) +
        " splits a pairwise cutting class and has no coarse counterpart");
  return coarsen(r);
}

Relation to_pa(const Relation& r) {
  if (r.algebra() == Algebra::cpa) return refine(r);
  if (r.algebra() != Algebra::pa) throw std::invalid_argument("not a pa relation");
  return r;
}

Relation parse_pa_atom_token(std::string_view token) {
  if (token.size() > 2 && token.substr(0, 2) == "*:") {
    const auto& names = cpa_atom_names();
    auto it = std::find(names.begin(), names.end(), token);
    if (it == names.end())
      throw std::invalid_argument("unknown cpa atom '" + std::string(token) + "'");
    return refine(Relation::atom(Algebra::cpa,
                                 static_cast<AtomId>(it - names.begin())));
  }
  if (token.find(':') != std::string_view::npos)
    return Relation::atom(Algebra::pa, pa_atom(token));
  for (AtomId c = 0; c < 24; ++c)
    if (cyct_atom_names()[c] == token)
      return embed_cyc(Relation::atom(Algebra::cyc, c));
  for (AtomId t = 0; t < 22; ++t)
    if (ta_atom_names()[t] == token)
      return embed_ta(Relation::atom(Algebra::ta, t));
  throw std::invalid_argument("unknown atom '" + std::string(token) + "'");
}

}  // namespace dlines
