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

#include "dlines/translators.hpp"

#include <stdexcept>

#include "dlines/cyc.hpp"
#include "dlines/pa.hpp"
#include "dlines/ta.hpp"

namespace dlines {

int CspBuilder::var(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  int id = size();
  names_.push_back(name);
  index_.emplace(name, id);
  return id;
}

std::optional<int> CspBuilder::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int CspBuilder::fresh(const std::string& purpose) {
  while (true) {
    std::string name =
        "aux_" + purpose + "_" + std::to_string(counters_[purpose]++);
    if (!index_.count(name)) return var(name);
  }
}

void CspBuilder::add(int i, int j, int k, const Relation& pa_rel) {
  if (pa_rel.algebra() != Algebra::pa)
    throw std::invalid_argument("builder constraints use the combined algebra");
  for (int v : {i, j, k})
    if (v < 0 || v >= size()) throw std::out_of_range("unknown variable");
  constraints_.push_back({i, j, k, pa_rel});
}

namespace {

Relation ta_rel(std::initializer_list<std::string_view> names) {
  return embed_ta(ta_tables().relation(names));
}

Relation pa_rel(std::initializer_list<std::string_view> names) {
  return pa_tables().relation(names);
}

}  // namespace

Relation concurrent_rel() { return ta_rel({"cc_eq", "cp_c", "pc_c"}); }
Relation point_pair_rel() { return pa_rel({"cp_c:lre"}); }
Relation oriented_pair_rel() { return ta_rel({"cc_lt", "cp_c", "pc_c", "pp_c1"}); }

PointRepr add_point(CspBuilder& b, const std::string& name) {
  PointRepr p{b.var(name + "_1"), b.var(name + "_2")};
  b.add(p.l1, p.l2, p.l1, point_pair_rel());
  return p;
}

void incident(CspBuilder& b, const PointRepr& p, int l) {
  b.add(l, p.l1, p.l2, concurrent_rel());
}

void between_dlines(CspBuilder& b, int la, int lb, int lc) {
  b.add(la, lb, lc,
        ta_rel({"pp_l0", "pp_l1", "pp_c0", "pp_c1", "pp_c2", "pp_r3", "pp_r4"}));
}

void between_points(CspBuilder& b, const PointRepr& p1, const PointRepr& p2,
                    const PointRepr& p3) {
  int la = b.fresh("btw"), lb = b.fresh("btw"), lc = b.fresh("btw"),
      ld = b.fresh("btw");
  between_dlines(b, la, lb, lc);
  incident(b, p1, la);
  incident(b, p1, ld);
  incident(b, p2, lb);
  incident(b, p2, ld);
  incident(b, p3, lc);
  incident(b, p3, ld);
}

void non_collinear(CspBuilder& b, const PointRepr& p1, const PointRepr& p2,
                   const PointRepr& p3) {
  int la = b.fresh("ncol"), lb = b.fresh("ncol"), lc = b.fresh("ncol");
  b.add(la, lb, lc, ta_rel({"cc_lt", "cc_gt"}));
  incident(b, p1, la);
  incident(b, p1, lb);
  incident(b, p2, la);
  incident(b, p2, lc);
  incident(b, p3, lb);
  incident(b, p3, lc);
}

SegmentRepr add_segment(CspBuilder& b, const std::string& name) {
  SegmentRepr s{b.var(name + "_1"), b.var(name + "_2"), b.var(name + "_3")};
  b.add(s.l1, s.l2, s.l3, pa_rel({"cc_gt:lor"}));
  return s;
}

void convex_polygon(CspBuilder& b, const std::vector<int>& lines) {
  const size_t p = lines.size();
  if (p < 3) throw std::invalid_argument("a convex polygon needs three lines");
  const Relation r = pa_rel({"cc_lt:rll", "cc_lt:rol", "cc_lt:rrl"});
  for (size_t i = 0; i < p; ++i)
    b.add(lines[(i + 1) % p], lines[i], lines[(i + 2) % p], r);
}

void across(CspBuilder& b, const SegmentRepr& f, int g1, int g2) {
  b.add(g1, g2, f.l1, ta_rel({"pc_l"}));
  const Relation lt = ta_rel({"cc_lt"});
  b.add(f.l1, f.l3, g1, lt);
  b.add(f.l1, f.l3, g2, lt);
  b.add(f.l1, g1, f.l2, lt);
  b.add(f.l1, g2, f.l2, lt);
}

namespace {

constexpr std::array<std::string_view, 8> kFreksaNames = {"fl", "f6", "f7", "f8",
                                                          "f9", "f10", "fr", "T"};

Cycb flip(Cycb b) {
  switch (b) {
    case Cycb::e:
      return Cycb::o;
    case Cycb::o:
      return Cycb::e;
    case Cycb::l:
      return Cycb::r;
    case Cycb::r:
      return Cycb::l;
  }
  return b;
}

}  // namespace

std::string_view freksa_name(FreksaRel r) { return kFreksaNames[static_cast<int>(r)]; }

std::optional<FreksaRel> freksa_from_name(std::string_view s) {
  for (size_t i = 0; i < kFreksaNames.size(); ++i)
    if (kFreksaNames[i] == s) return static_cast<FreksaRel>(i);
  return std::nullopt;
}

PointRepr Translator::point(const std::string& name) {
  auto it = points_.find(name);
  if (it != points_.end()) return it->second;
  PointRepr p = add_point(csp_, name);
  points_.emplace(name, p);
  return p;
}

LineRef Translator::pair_line(const std::string& p, const std::string& q,
                              const std::string& name) {
  if (p == q) throw std::invalid_argument("a line needs two distinct points: " + p);
  auto key = p < q ? std::make_pair(p, q) : std::make_pair(q, p);
  auto it = pair_lines_.find(key);
  if (it != pair_lines_.end()) {
    const PairLine& l = it->second;
    if (!name.empty() && csp_.names()[l.var] != name)
      throw std::invalid_argument("points " + p + ", " + q + " already joined by " +
                                  csp_.names()[l.var]);
    return {l.var, l.from != p};
  }
  PointRepr a = point(p), b = point(q);
  int l = csp_.var(name.empty() ? "X_" + p + "_" + q : name);
  pair_lines_.emplace(key, PairLine{l, p});
  incident(csp_, a, l);
  incident(csp_, b, l);
  csp_.add(l, a.l1, b.l1, oriented_pair_rel());
  csp_.add(l, a.l2, b.l2, oriented_pair_rel());
  if (strict_order_) {
    csp_.add(l, a.l1, b.l2, oriented_pair_rel());
    csp_.add(l, a.l2, b.l1, oriented_pair_rel());
  }
  return {l, false};
}

void Translator::emit_cyc(std::string_view atom, LineRef x, LineRef y, LineRef z) {
  CycTriple c = cyct_components(cyct_atom(atom));
  if (x.reversed) c.b1 = flip(c.b1), c.b3 = flip(c.b3);
  if (y.reversed) c.b1 = flip(c.b1), c.b2 = flip(c.b2);
  if (z.reversed) c.b2 = flip(c.b2), c.b3 = flip(c.b3);
  Relation r = Relation::atom(Algebra::cyc, cyct_atom(c.b1, c.b2, c.b3));
  csp_.add(x.var, y.var, z.var, embed_cyc(r));
}

void Translator::freksa(FreksaRel r, const std::string& a, const std::string& b,
                        const std::string& c) {
  if (a == b || a == c || b == c)
    throw std::invalid_argument("double-cross constraint on repeated points");
  switch (r) {
    case FreksaRel::fl: {
      LineRef ab = pair_line(a, b), ac = pair_line(a, c);
      emit_cyc("lel", ab, ac, ac);
      return;
    }
    case FreksaRel::f6: {
      LineRef ab = pair_line(a, b), ac = pair_line(a, c);
      emit_cyc("oeo", ab, ac, ac);
      return;
    }
    case FreksaRel::f8: {
      LineRef ab = pair_line(a, b), ac = pair_line(a, c), bc = pair_line(b, c);
      emit_cyc("eee", ab, ac, ac);
      emit_cyc("oeo", ab, bc, bc);
      return;
    }
    case FreksaRel::f10:
      freksa(FreksaRel::f6, b, a, c);
      return;
    case FreksaRel::fr:
      freksa(FreksaRel::fl, b, a, c);
      return;
    default:
      throw std::invalid_argument("relation " + std::string(freksa_name(r)) +
                                  " is handled by elimination");
  }
}

const Translator::Dipole& Translator::dipole(const std::string& name) {
  auto it = dipoles_.find(name);
  if (it != dipoles_.end()) return it->second;
  Dipole d{"s_" + name, "e_" + name, 0};
  point(d.s);
  point(d.e);
  LineRef l = pair_line(d.s, d.e, "l_" + name);
  if (l.reversed) throw std::invalid_argument("dipole " + name + " is reversed");
  d.line = l.var;
  return dipoles_.emplace(name, d).first->second;
}

void Translator::dipole_point(const std::string& a, const std::string& p, char rel) {
  const Dipole d = dipole(a);
  switch (rel) {
    case 'l':
      return freksa(FreksaRel::fl, d.s, d.e, p);
    case 'b':
      return freksa(FreksaRel::f6, d.s, d.e, p);
    case 'i':
      return freksa(FreksaRel::f8, d.s, d.e, p);
    case 'f':
      return freksa(FreksaRel::f10, d.s, d.e, p);
    case 'r':
      return freksa(FreksaRel::fr, d.s, d.e, p);
    case 's':
    case 'e': {
      PointRepr pp = point(p);
      PointRepr end = point(rel == 's' ? d.s : d.e);
      csp_.add(pp.l1, pp.l2, end.l1, concurrent_rel());
      csp_.add(pp.l1, pp.l2, end.l2, concurrent_rel());
      return;
    }
    default:
      throw std::invalid_argument(std::string("unknown dipole-point relation '") +
                                  rel + "'");
  }
}

void Translator::dipole_dipole(const std::string& a, const std::string& b,
                               std::string_view word) {
  if (word.size() != 4) throw std::invalid_argument("dipole words have four letters");
  for (char c : word)
    if (std::string_view("lbsiefr").find(c) == std::string_view::npos)
      throw std::invalid_argument(std::string("invalid dipole letter '") + c + "'");
  const Dipole da = dipole(a);
  const Dipole db = dipole(b);
  dipole_point(a, db.s, word[0]);
  dipole_point(a, db.e, word[1]);
  dipole_point(b, da.s, word[2]);
  dipole_point(b, da.e, word[3]);
}

void Translator::on_carrier(int carrier, const std::string& interval,
                            bool same_orientation) {
  if (!carried_.emplace(std::make_pair(carrier, interval), same_orientation).second)
    return;
  int l = dipole(interval).line;
  Relation r = same_orientation ? pa_rel({"pp_c1:eee"}) : pa_rel({"pp_c1:eee", "pp_c1:oeo"});
  csp_.add(carrier, l, l, r);
}

void Translator::directed_interval(const std::string& x, std::string_view rel,
                                   const std::string& y) {
  auto w = dint_word(rel);
  if (!w) throw std::invalid_argument("unknown directed-interval relation " + std::string(rel));
  int renz = csp_.var("l_Renz");
  on_carrier(renz, x, false);
  on_carrier(renz, y, false);
  dipole_dipole(x, y, *w);
}

void Translator::rectangle(const std::string& p, const std::string& q,
                           std::string_view rx, std::string_view ry) {
  auto ax = allen_from_name(rx), ay = allen_from_name(ry);
  if (!ax) throw std::invalid_argument("unknown Allen relation " + std::string(rx));
  if (!ay) throw std::invalid_argument("unknown Allen relation " + std::string(ry));
  const bool first = !csp_.find("l_X");
  int lx = csp_.var("l_X"), ly = csp_.var("l_Y");
  if (first) csp_.add(lx, ly, lx, point_pair_rel());
  for (const std::string& r : {p, q}) {
    on_carrier(lx, r + "_x", true);
    on_carrier(ly, r + "_y", true);
  }
  dipole_dipole(p + "_x", q + "_x", *dint_word(allen_to_dint(*ax)));
  dipole_dipole(p + "_y", q + "_y", *dint_word(allen_to_dint(*ay)));
}

const std::array<DintRow, 26>& dint_table() {
  static const std::array<DintRow, 26> rows = {{
      {"b=", "ffbb"},   {"f=", "bbff"},   {"b!=", "bbbb"},  {"f!=", "ffff"},
      {"mb=", "efbs"},  {"mf=", "bsef"},  {"mb!=", "sbsb"}, {"mf!=", "fefe"},
      {"ob=", "ifbi"},  {"of=", "biif"},  {"ob!=", "ibib"}, {"of!=", "fifi"},
      {"c=", "bfii"},   {"e=", "iibf"},   {"c!=", "fbii"},  {"e!=", "iifb"},
      {"cb=", "sfsi"},  {"ef=", "sisf"},  {"cb!=", "ebis"}, {"eb!=", "iseb"},
      {"cf=", "beie"},  {"eb=", "iebe"},  {"cf!=", "fsei"}, {"ef!=", "eifs"},
      {"eq=", "sese"},  {"eq!=", "eses"},
  }};
  return rows;
}

std::optional<std::string_view> dint_word(std::string_view rel) {
  for (const DintRow& r : dint_table())
    if (r.name == rel) return r.word;
  return std::nullopt;
}

namespace {

struct AllenRow {
  Allen rel;
  std::string_view name, symbol, dint;
};

// Both intervals point along the axis; the words follow from comparing
// endpoints (checked against brute force in the tests).
constexpr std::array<AllenRow, 13> kAllen = {{
    {Allen::before, "before", "<", "b="},
    {Allen::meets, "meets", "m", "mb="},
    {Allen::overlaps, "overlaps", "o", "ob="},
    {Allen::starts, "starts", "s", "cb="},
    {Allen::during, "during", "d", "c="},
    {Allen::finishes, "finishes", "f", "cf="},
    {Allen::equals, "equals", "eq", "eq="},
    {Allen::after, "after", ">", "f="},
    {Allen::met_by, "met-by", "mi", "mf="},
    {Allen::overlapped_by, "overlapped-by", "oi", "of="},
    {Allen::started_by, "started-by", "si", "ef="},
    {Allen::contains, "contains", "di", "e="},
    {Allen::finished_by, "finished-by", "fi", "eb="},
}};

}  // namespace

std::string_view allen_name(Allen a) { return kAllen[static_cast<int>(a)].name; }

std::optional<Allen> allen_from_name(std::string_view s) {
  for (const AllenRow& r : kAllen)
    if (r.name == s || r.symbol == s) return r.rel;
  return std::nullopt;
}

std::string_view allen_to_dint(Allen a) { return kAllen[static_cast<int>(a)].dint; }

namespace {

constexpr unsigned kAll = 0x7f;

unsigned freksa_bit(FreksaRel r) {
  return r == FreksaRel::T ? kAll : 1u << static_cast<int>(r);
}

}  // namespace

FreksaTranslation translate_freksa(const std::vector<FreksaConstraint>& constraints,
                                   bool strict_order) {
  FreksaTranslation out{false, {}, {}, Translator(strict_order)};
  std::vector<std::string> order;
  for (const FreksaConstraint& c : constraints)
    for (const std::string* n : {&c.a, &c.b, &c.c})
      if (out.representative.emplace(*n, *n).second) order.push_back(*n);
  auto rep = [&](std::string n) {
    while (out.representative.at(n) != n) n = out.representative.at(n);
    return n;
  };

  // Constraints keyed by triple, in order of first appearance.
  using Key = std::array<std::string, 3>;
  std::vector<std::pair<Key, unsigned>> current;
  while (true) {
    std::vector<std::pair<Key, unsigned>> next;
    std::map<Key, size_t> where;
    for (const FreksaConstraint& c : constraints) {
      Key k{rep(c.a), rep(c.b), rep(c.c)};
      unsigned mask = freksa_bit(c.rel);
      auto [it, fresh] = where.emplace(k, next.size());
      if (fresh) next.push_back({k, mask});
      else next[it->second].second &= mask;
    }
    std::optional<std::pair<std::string, std::string>> merge;  // (keep, drop)
    current.clear();
    for (auto& [k, mask] : next) {
      std::string where_str = "(" + k[0] + "," + k[1] + "," + k[2] + ")";
      if (mask == 0) {
        out.inconsistent = true;
        out.reason = "empty relation on " + where_str;
        return out;
      }
      if (k[0] == k[1]) {
        if (mask != kAll) {
          out.inconsistent = true;
          out.reason = "reference points coincide on " + where_str;
          return out;
        }
        continue;
      }
      if (k[2] == k[0] || k[2] == k[1]) {
        unsigned need = freksa_bit(k[2] == k[0] ? FreksaRel::f7 : FreksaRel::f9);
        if (!(mask & need)) {
          out.inconsistent = true;
          out.reason = "merged points violate " + where_str;
          return out;
        }
        continue;
      }
      if (!merge && mask == freksa_bit(FreksaRel::f7)) merge = {{k[0], k[2]}};
      if (!merge && mask == freksa_bit(FreksaRel::f9)) merge = {{k[1], k[2]}};
      current.push_back({k, mask});
    }
    if (!merge) break;
    out.representative[merge->second] = merge->first;
  }
  for (auto& [name, r] : out.representative) r = rep(name);

  Translator& t = out.translator;
  std::vector<std::string> kept;
  for (const std::string& n : order)
    if (out.representative.at(n) == n) kept.push_back(n);
  for (const std::string& n : kept) t.point(n);
  for (size_t i = 0; i < kept.size(); ++i)
    for (size_t j = i + 1; j < kept.size(); ++j) t.pair_line(kept[i], kept[j]);
  for (const auto& [k, mask] : current) {
    if (mask == kAll) continue;
    for (int r = 0; r < 7; ++r)
      if (mask == (1u << r)) t.freksa(static_cast<FreksaRel>(r), k[0], k[1], k[2]);
  }
  return out;
}

}  // namespace dlines
