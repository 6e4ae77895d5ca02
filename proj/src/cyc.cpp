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

#include "dlines/cyc.hpp"

#include <numeric>
#include <stdexcept>

#include "dlines/table_io.hpp"

namespace dlines {

namespace detail {
extern const char* const kCyctCompositionText;
}  // namespace detail

Direction make_direction(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw std::invalid_argument("zero direction");
  std::int64_t g = std::gcd(a, b);
  return {a / g, b / g};
}

Direction opposite(const Direction& d) { return {-d.a, -d.b}; }

int cross_sign(const Direction& d1, const Direction& d2) {
  __int128 c = static_cast<__int128>(d1.a) * d2.b -
               static_cast<__int128>(d1.b) * d2.a;
  return (c > 0) - (c < 0);
}

char cycb_char(Cycb b) { return "elor"[static_cast<int>(b)]; }

Cycb cycb_from_char(char c) {
  switch (c) {
    case 'e':
      return Cycb::e;
    case 'l':
      return Cycb::l;
    case 'o':
      return Cycb::o;
    case 'r':
      return Cycb::r;
  }
  throw std::invalid_argument(std::string("not a binary orientation '") + c +
                              "'");
}

Cycb cycb_converse(Cycb b) {
  if (b == Cycb::l) return Cycb::r;
  if (b == Cycb::r) return Cycb::l;
  return b;
}

Cycb cycb_classify(const Direction& y, const Direction& x) {
  int c = cross_sign(x, y);
  if (c > 0) return Cycb::l;
  if (c < 0) return Cycb::r;
  __int128 dot = static_cast<__int128>(x.a) * y.a +
                 static_cast<__int128>(x.b) * y.b;
  return dot > 0 ? Cycb::e : Cycb::o;
}

const std::array<std::string_view, 24>& cyct_atom_names() {
  static const std::array<std::string_view, 24> names = {
      "eee", "ell", "eoo", "err", "lel", "lll", "llo", "llr",
      "lor", "lre", "lrl", "lrr", "oeo", "olr", "ooe", "orl",
      "rer", "rle", "rll", "rlr", "rol", "rrl", "rro", "rrr"};
  return names;
}

CycTriple cyct_components(AtomId atom) {
  std::string_view n = cyct_atom_names().at(atom);
  return {cycb_from_char(n[0]), cycb_from_char(n[1]), cycb_from_char(n[2])};
}

AtomId cyct_atom(std::string_view name) {
  const auto& names = cyct_atom_names();
  for (int i = 0; i < 24; ++i)
    if (names[i] == name) return i;
  throw std::invalid_argument("unknown cyc atom '" + std::string(name) + "'");
}

AtomId cyct_atom(Cycb b1, Cycb b2, Cycb b3) {
  const char n[3] = {cycb_char(b1), cycb_char(b2), cycb_char(b3)};
  return cyct_atom(std::string_view(n, 3));
}

AtomId cyct_classify(const Direction& x, const Direction& y,
                     const Direction& z) {
  return cyct_atom(cycb_classify(y, x), cycb_classify(z, y),
                   cycb_classify(z, x));
}

Phi phi_class(AtomId atom) {
  CycTriple c = cyct_components(atom);
  auto cuts = [](Cycb b) { return b == Cycb::l || b == Cycb::r; };
  bool y_cuts = cuts(c.b1), z_cuts = cuts(c.b3);
  if (y_cuts && z_cuts) return Phi::phi1;
  if (y_cuts) return Phi::phi2;
  if (z_cuts) return Phi::phi3;
  return Phi::phi4;
}

Relation phi_relation(Phi p) {
  Relation r(Algebra::cyc);
  for (AtomId a = 0; a < 24; ++a)
    if (phi_class(a) == p) r.insert(a);
  return r;
}

Relation pairwise_cutting() {
  Relation r(Algebra::cyc);
  for (AtomId a = 0; a < 24; ++a) {
    CycTriple c = cyct_components(a);
    auto cuts = [](Cycb b) { return b == Cycb::l || b == Cycb::r; };
    if (cuts(c.b1) && cuts(c.b2) && cuts(c.b3)) r.insert(a);
  }
  return r;
}

namespace {

struct UnaryRow {
  const char* atom;
  const char* converse;
  const char* rotation;
};

constexpr UnaryRow kUnary[24] = {
    {"eee", "eee", "eee"}, {"ell", "lre", "lre"}, {"eoo", "ooe", "ooe"},
    {"err", "rle", "rle"}, {"lel", "lel", "err"}, {"lll", "lrl", "lrr"},
    {"llo", "orl", "lor"}, {"llr", "rrl", "llr"}, {"lor", "rol", "olr"},
    {"lre", "ell", "rer"}, {"lrl", "lll", "rrr"}, {"lrr", "rll", "rlr"},
    {"oeo", "oeo", "eoo"}, {"olr", "rro", "llo"}, {"ooe", "eoo", "oeo"},
    {"orl", "llo", "rro"}, {"rer", "rer", "ell"}, {"rle", "err", "lel"},
    {"rll", "lrr", "lrl"}, {"rlr", "rrr", "lll"}, {"rol", "lor", "orl"},
    {"rrl", "llr", "rrl"}, {"rro", "olr", "rol"}, {"rrr", "rlr", "rll"},
};

std::vector<std::string> names_vector() {
  std::vector<std::string> out;
  for (auto n : cyct_atom_names()) out.emplace_back(n);
  return out;
}

}  // namespace

AtomTables cyct_skeleton() {
  AtomTables t(Algebra::cyc, names_vector());
  for (const auto& row : kUnary) {
    AtomId a = t.id(row.atom);
    t.set_converse(a, Relation::atom(Algebra::cyc, t.id(row.converse)));
    t.set_rotation(a, Relation::atom(Algebra::cyc, t.id(row.rotation)));
  }
  t.set_identity_diag(t.relation({"eee"}));
  t.set_identity_comp(t.relation({"eee", "lel", "oeo", "rer"}));
  return t;
}

AtomTables build_cyct_tables(std::string_view composition_text) {
  AtomTables t = cyct_skeleton();
  std::vector<char> seen(24 * 24, 0);
  for (const TableEntry& e : parse_table_text(composition_text, t)) {
    switch (e.op) {
      case TableOp::comp:
        if (seen[e.a * 24 + e.b]++)
          throw TableParseError(e.line, "duplicate composition entry");
        t.set_composition(e.a, e.b, e.value);
        break;
      case TableOp::conv:
        if (e.value != t.converse(e.a))
          throw TableParseError(e.line, "converse disagrees with the atom list");
        break;
      case TableOp::rot:
        if (e.value != t.rotation(e.a))
          throw TableParseError(e.line, "rotation disagrees with the atom list");
        break;
    }
  }
  for (int i = 0; i < 24 * 24; ++i)
    if (!seen[i])
      throw std::runtime_error("cyc composition table is missing entry " +
                               t.name(i / 24) + "," + t.name(i % 24));
  t.index();
  return t;
}

const AtomTables& cyct_tables() {
  static const AtomTables tables =
      build_cyct_tables(detail::kCyctCompositionText);
  return tables;
}

}  // namespace dlines
