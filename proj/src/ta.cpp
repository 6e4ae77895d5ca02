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

#include "dlines/ta.hpp"

#include <stdexcept>
#include <string>

namespace dlines {

const std::array<std::string_view, 22>& ta_atom_names() {
  static const std::array<std::string_view, 22> names = {
      "cc_eq", "cc_gt", "cc_lt", "cp_c",  "cp_l",  "cp_r",  "pc_c",  "pc_l",
      "pc_r",  "pp_c0", "pp_c1", "pp_c2", "pp_l0", "pp_l1", "pp_l2", "pp_l3",
      "pp_l4", "pp_r0", "pp_r1", "pp_r2", "pp_r3", "pp_r4"};
  return names;
}

AtomId ta_atom(std::string_view name) {
  const auto& names = ta_atom_names();
  for (int i = 0; i < 22; ++i)
    if (names[i] == name) return i;
  throw std::invalid_argument("unknown ta atom '" + std::string(name) + "'");
}

TaGroup ta_group(AtomId atom) {
  std::string_view n = ta_atom_names().at(atom);
  if (n.substr(0, 2) == "cc") return TaGroup::cc;
  if (n.substr(0, 2) == "cp") return TaGroup::cp;
  if (n.substr(0, 2) == "pc") return TaGroup::pc;
  return TaGroup::pp;
}

namespace {

Side side_of(char m) {
  switch (m) {
    case 'l':
      return Side::l;
    case 'c':
      return Side::c;
    default:
      return Side::r;
  }
}

}  // namespace

Side ta_proj21(AtomId atom) {
  std::string_view n = ta_atom_names().at(atom);
  switch (ta_group(atom)) {
    case TaGroup::cc:
    case TaGroup::cp:
      return Side::cuts;
    case TaGroup::pc:
      return side_of(n[3]);
    case TaGroup::pp:
      return side_of(n[3]);
  }
  return Side::cuts;
}

Side ta_proj31(AtomId atom) {
  std::string_view n = ta_atom_names().at(atom);
  switch (ta_group(atom)) {
    case TaGroup::cc:
    case TaGroup::pc:
      return Side::cuts;
    case TaGroup::cp:
      return side_of(n[3]);
    case TaGroup::pp:
      break;
  }
  int k = n[4] - '0';
  switch (n[3]) {
    case 'l':
      return k <= 2 ? Side::l : k == 3 ? Side::c : Side::r;
    case 'c':
      return k == 0 ? Side::l : k == 1 ? Side::c : Side::r;
    default:
      return k == 0 ? Side::l : k == 1 ? Side::c : Side::r;
  }
}

Relation ta_with_proj21(Side s) {
  Relation r(Algebra::ta);
  for (AtomId a = 0; a < 22; ++a)
    if (ta_proj21(a) == s) r.insert(a);
  return r;
}

Relation ta_with_proj31(Side s) {
  Relation r(Algebra::ta);
  for (AtomId a = 0; a < 22; ++a)
    if (ta_proj31(a) == s) r.insert(a);
  return r;
}

Relation ta_cc() {
  return Relation::of(Algebra::ta,
                      {ta_atom("cc_lt"), ta_atom("cc_eq"), ta_atom("cc_gt")});
}

namespace {

struct UnaryRow {
  const char* atom;
  const char* converse;
  std::vector<const char*> rotation;
};

const std::vector<UnaryRow> kUnary = {
    {"cc_lt", "cc_gt", {"cc_lt", "cc_gt", "pc_l", "pc_r"}},
    {"cc_eq", "cc_eq", {"cc_eq", "pc_c"}},
    {"cc_gt", "cc_lt", {"cc_lt", "cc_gt", "pc_l", "pc_r"}},
    {"cp_l", "pc_l", {"cc_lt", "cc_gt"}},
    {"cp_c", "pc_c", {"cc_eq"}},
    {"cp_r", "pc_r", {"cc_lt", "cc_gt"}},
    {"pc_l", "cp_l", {"cp_l", "cp_r"}},
    {"pc_c", "cp_c", {"cp_c"}},
    {"pc_r", "cp_r", {"cp_l", "cp_r"}},
    {"pp_l0", "pp_l2", {"pp_l4", "pp_r0"}},
    {"pp_l1", "pp_l1", {"pp_c0", "pp_c2"}},
    {"pp_l2", "pp_l0", {"pp_l0", "pp_r4"}},
    {"pp_l3", "pp_c0", {"pp_l1", "pp_r3"}},
    {"pp_l4", "pp_r0", {"pp_l2", "pp_r2"}},
    {"pp_c0", "pp_l3", {"pp_l3", "pp_r1"}},
    {"pp_c1", "pp_c1", {"pp_c1"}},
    {"pp_c2", "pp_r1", {"pp_l3", "pp_r1"}},
    {"pp_r0", "pp_l4", {"pp_l2", "pp_r2"}},
    {"pp_r1", "pp_c2", {"pp_l1", "pp_r3"}},
    {"pp_r2", "pp_r4", {"pp_l0", "pp_r4"}},
    {"pp_r3", "pp_r3", {"pp_c0", "pp_c2"}},
    {"pp_r4", "pp_r2", {"pp_l4", "pp_r0"}},
};

// One block of the composition table: rows are the left operands, columns
// the right operands, cells are atom lists with the shorthands "cc",
// "pp_ll" = {pp_l0, pp_l1, pp_l2} and "pp_rr" = {pp_r2, pp_r3, pp_r4}.
struct Block {
  const char* title;
  std::vector<const char*> rows;
  std::vector<const char*> cols;
  std::vector<std::vector<const char*>> cells;
};

const std::vector<Block>& blocks() {
  static const std::vector<Block> b = {
      {"shared line cuts x",
       {"cc_lt", "cc_eq", "cc_gt", "pc_l", "pc_c", "pc_r"},
       {"cc_lt", "cc_eq", "cc_gt", "cp_l", "cp_c", "cp_r"},
       {
           {"cc_lt", "cc_lt", "cc", "cp_l", "cp_c", "cp_r"},
           {"cc_lt", "cc_eq", "cc_gt", "cp_l", "cp_c", "cp_r"},
           // cc_gt then cc_eq: w crosses x where z does, so y stays after.
           {"cc", "cc_gt", "cc_gt", "cp_l", "cp_c", "cp_r"},
           {"pc_l", "pc_l", "pc_l", "pp_ll", "pp_l3", "pp_l4"},
           {"pc_c", "pc_c", "pc_c", "pp_c0", "pp_c1", "pp_c2"},
           {"pc_r", "pc_r", "pc_r", "pp_r0", "pp_r1", "pp_rr"},
       }},
      {"shared line strictly left of x",
       {"cp_l", "pp_l0", "pp_l1", "pp_l2", "pp_c0", "pp_r0"},
       {"pc_l", "pp_l0", "pp_l1", "pp_l2", "pp_l3", "pp_l4"},
       {
           {"cc", "cp_l", "cp_l", "cp_l", "cp_c", "cp_r"},
           {"pc_l", "pp_l0", "pp_l0", "pp_ll", "pp_l3", "pp_l4"},
           {"pc_l", "pp_l0", "pp_l1", "pp_l2", "pp_l3", "pp_l4"},
           {"pc_l", "pp_ll", "pp_l2", "pp_l2", "pp_l3", "pp_l4"},
           {"pc_c", "pp_c0", "pp_c0", "pp_c0", "pp_c1", "pp_c2"},
           {"pc_r", "pp_r0", "pp_r0", "pp_r0", "pp_r1", "pp_rr"},
       }},
      {"shared line coincides with x",
       {"cp_c", "pp_l3", "pp_c1", "pp_r1"},
       {"pc_c", "pp_c0", "pp_c1", "pp_c2"},
       {
           {"cc", "cp_l", "cp_c", "cp_r"},
           {"pc_l", "pp_ll", "pp_l3", "pp_l4"},
           {"pc_c", "pp_c0", "pp_c1", "pp_c2"},
           {"pc_r", "pp_r0", "pp_r1", "pp_rr"},
       }},
      {"shared line strictly right of x",
       {"cp_r", "pp_l4", "pp_c2", "pp_r2", "pp_r3", "pp_r4"},
       {"pc_r", "pp_r0", "pp_r1", "pp_r2", "pp_r3", "pp_r4"},
       {
           {"cc", "cp_l", "cp_c", "cp_r", "cp_r", "cp_r"},
           {"pc_l", "pp_ll", "pp_l3", "pp_l4", "pp_l4", "pp_l4"},
           {"pc_c", "pp_c0", "pp_c1", "pp_c2", "pp_c2", "pp_c2"},
           {"pc_r", "pp_r0", "pp_r1", "pp_r2", "pp_r2", "pp_rr"},
           {"pc_r", "pp_r0", "pp_r1", "pp_r2", "pp_r3", "pp_r4"},
           {"pc_r", "pp_r0", "pp_r1", "pp_rr", "pp_r4", "pp_r4"},
       }},
  };
  return b;
}

Relation cell(std::string_view s) {
  if (s == "cc") return ta_cc();
  if (s == "pp_ll")
    return Relation::of(Algebra::ta, {ta_atom("pp_l0"), ta_atom("pp_l1"),
                                      ta_atom("pp_l2")});
  if (s == "pp_rr")
    return Relation::of(Algebra::ta, {ta_atom("pp_r2"), ta_atom("pp_r3"),
                                      ta_atom("pp_r4")});
  return Relation::atom(Algebra::ta, ta_atom(s));
}

}  // namespace

AtomTables build_ta_tables() {
  std::vector<std::string> names;
  for (auto n : ta_atom_names()) names.emplace_back(n);
  AtomTables t(Algebra::ta, std::move(names));
  for (const auto& row : kUnary) {
    AtomId a = ta_atom(row.atom);
    t.set_converse(a, Relation::atom(Algebra::ta, ta_atom(row.converse)));
    Relation rot(Algebra::ta);
    for (const char* r : row.rotation) rot.insert(ta_atom(r));
    t.set_rotation(a, rot);
  }
  for (const Block& b : blocks())
    for (size_t i = 0; i < b.rows.size(); ++i)
      for (size_t j = 0; j < b.cols.size(); ++j)
        t.set_composition(ta_atom(b.rows[i]), ta_atom(b.cols[j]),
                          cell(b.cells[i][j]));
  t.set_identity_diag(t.relation({"pp_c1"}));
  t.set_identity_comp(t.relation({"cc_eq", "pp_l1", "pp_c1", "pp_r3"}));
  t.index();
  return t;
}

const AtomTables& ta_tables() {
  static const AtomTables tables = build_ta_tables();
  return tables;
}

std::vector<CompGroup> ta_composition_groups() {
  std::vector<CompGroup> out;
  for (const Block& b : blocks()) {
    CompGroup g{b.title, {}};
    for (const char* r : b.rows)
      for (const char* c : b.cols) g.cells.emplace_back(ta_atom(r), ta_atom(c));
    out.push_back(std::move(g));
  }
  CompGroup rest{"operands disagree on the shared line: empty", {}};
  for (AtomId a = 0; a < 22; ++a)
    for (AtomId b = 0; b < 22; ++b)
      if (ta_proj31(a) != ta_proj21(b)) rest.cells.emplace_back(a, b);
  out.push_back(std::move(rest));
  return out;
}

}  // namespace dlines
