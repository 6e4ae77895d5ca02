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

#include "dlines/relation.hpp"

#include <stdexcept>

namespace dlines {

int universe_size(Algebra alg) {
  switch (alg) {
    case Algebra::cyc:
      return 24;
    case Algebra::ta:
      return 22;
    case Algebra::pa:
      return 112;
    case Algebra::cpa:
      return 96;
  }
  throw std::invalid_argument("unknown algebra");
}

std::string_view algebra_tag(Algebra alg) {
  switch (alg) {
    case Algebra::cyc:
      return "cyc";
    case Algebra::ta:
      return "ta";
    case Algebra::pa:
      return "pa";
    case Algebra::cpa:
      return "cpa";
  }
  throw std::invalid_argument("unknown algebra");
}

std::optional<Algebra> algebra_from_tag(std::string_view tag) {
  for (Algebra a : {Algebra::cyc, Algebra::ta, Algebra::pa, Algebra::cpa})
    if (algebra_tag(a) == tag) return a;
  return std::nullopt;
}

namespace {

void universe_words(Algebra alg, std::uint64_t* lo, std::uint64_t* hi) {
  int n = universe_size(alg);
  *lo = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  *hi = n <= 64 ? 0
        : n >= 128 ? ~std::uint64_t{0}
                   : ((std::uint64_t{1} << (n - 64)) - 1);
}

}  // namespace

Relation::Relation(Algebra alg, std::uint64_t lo, std::uint64_t hi)
    : alg_(alg), lo_(lo), hi_(hi) {
  std::uint64_t ulo, uhi;
  universe_words(alg, &ulo, &uhi);
  if ((lo & ~ulo) != 0 || (hi & ~uhi) != 0)
    throw std::invalid_argument("relation has bits outside the universe");
}

Relation Relation::universal(Algebra alg) {
  Relation r(alg);
  universe_words(alg, &r.lo_, &r.hi_);
  return r;
}

Relation Relation::atom(Algebra alg, AtomId a) {
  Relation r(alg);
  r.insert(a);
  return r;
}

Relation Relation::of(Algebra alg, std::initializer_list<AtomId> atoms) {
  Relation r(alg);
  for (AtomId a : atoms) r.insert(a);
  return r;
}

void Relation::check(AtomId a) const {
  if (a < 0 || a >= universe_size(alg_))
    throw std::out_of_range("atom index out of range");
}

void Relation::check_same(const Relation& o) const {
  if (alg_ != o.alg_)
    throw std::invalid_argument("relations from different algebras");
}

bool Relation::contains(AtomId a) const {
  check(a);
  return a < 64 ? (lo_ >> a) & 1 : (hi_ >> (a - 64)) & 1;
}

void Relation::insert(AtomId a) {
  check(a);
  if (a < 64)
    lo_ |= std::uint64_t{1} << a;
  else
    hi_ |= std::uint64_t{1} << (a - 64);
}

void Relation::erase(AtomId a) {
  check(a);
  if (a < 64)
    lo_ &= ~(std::uint64_t{1} << a);
  else
    hi_ &= ~(std::uint64_t{1} << (a - 64));
}

int Relation::size() const {
  return __builtin_popcountll(lo_) + __builtin_popcountll(hi_);
}

AtomId Relation::first() const {
  if (lo_) return __builtin_ctzll(lo_);
  if (hi_) return 64 + __builtin_ctzll(hi_);
  throw std::logic_error("first() of an empty relation");
}

std::vector<AtomId> Relation::atoms() const {
  std::vector<AtomId> out;
  for_each([&](AtomId a) { out.push_back(a); });
  return out;
}

bool Relation::subset_of(const Relation& o) const {
  check_same(o);
  return (lo_ & ~o.lo_) == 0 && (hi_ & ~o.hi_) == 0;
}

Relation& Relation::operator|=(const Relation& o) {
  check_same(o);
  lo_ |= o.lo_;
  hi_ |= o.hi_;
  return *this;
}

Relation& Relation::operator&=(const Relation& o) {
  check_same(o);
  lo_ &= o.lo_;
  hi_ &= o.hi_;
  return *this;
}

Relation& Relation::operator-=(const Relation& o) {
  check_same(o);
  lo_ &= ~o.lo_;
  hi_ &= ~o.hi_;
  return *this;
}

Relation Relation::operator~() const {
  Relation u = universal(alg_);
  u.lo_ &= ~lo_;
  u.hi_ &= ~hi_;
  return u;
}

bool operator<(const Relation& a, const Relation& b) {
  if (a.alg_ != b.alg_) return a.alg_ < b.alg_;
  if (a.hi_ != b.hi_) return a.hi_ < b.hi_;
  return a.lo_ < b.lo_;
}

AtomTables::AtomTables(Algebra alg, std::vector<std::string> names)
    : alg_(alg), names_(std::move(names)) {
  if (static_cast<int>(names_.size()) != universe_size(alg))
    throw std::invalid_argument("wrong number of atom names for " +
                                std::string(algebra_tag(alg)));
  const int n = size();
  converse_.assign(n, Relation(alg));
  rotation_.assign(n, Relation(alg));
  composition_.assign(static_cast<size_t>(n) * n, Relation(alg));
  identity_diag_ = Relation(alg);
  identity_comp_ = Relation(alg);
  bytes_ = (n + 7) / 8;
}

std::optional<AtomId> AtomTables::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

AtomId AtomTables::id(std::string_view name) const {
  auto a = find(name);
  if (!a)
    throw std::invalid_argument("unknown " + std::string(algebra_tag(alg_)) +
                                " atom '" + std::string(name) + "'");
  return *a;
}

void AtomTables::check(const Relation& r) const {
  if (r.algebra() != alg_)
    throw std::invalid_argument("relation does not belong to " +
                                std::string(algebra_tag(alg_)));
}

void AtomTables::set_converse(AtomId a, const Relation& r) {
  check(r);
  converse_.at(a) = r;
}

void AtomTables::set_rotation(AtomId a, const Relation& r) {
  check(r);
  rotation_.at(a) = r;
}

void AtomTables::set_composition(AtomId a, AtomId b, const Relation& r) {
  check(r);
  if (a < 0 || a >= size() || b < 0 || b >= size())
    throw std::out_of_range("composition index out of range");
  composition_[static_cast<size_t>(a) * size() + b] = r;
  indexed_ = false;
}

void AtomTables::set_identity_diag(const Relation& r) {
  check(r);
  identity_diag_ = r;
}

void AtomTables::set_identity_comp(const Relation& r) {
  check(r);
  identity_comp_ = r;
}

Relation AtomTables::relation(
    std::initializer_list<std::string_view> names) const {
  Relation r(alg_);
  for (auto n : names) r.insert(id(n));
  return r;
}

void AtomTables::index() {
  const int n = size();
  const size_t per_atom = static_cast<size_t>(bytes_) * 256;
  chunks_.assign(n * per_atom, Relation(alg_));
  chunks_rev_.assign(n * per_atom, Relation(alg_));
  univ_left_.assign(per_atom, Relation(alg_));
  univ_right_.assign(per_atom, Relation(alg_));
  for (int a = 0; a < n; ++a) {
    for (int k = 0; k < bytes_; ++k) {
      Relation* row = &chunks_[a * per_atom + k * 256];
      Relation* rev = &chunks_rev_[a * per_atom + k * 256];
      for (int v = 1; v < 256; ++v) {
        const int b = 8 * k + __builtin_ctz(v);
        Relation acc = row[v & (v - 1)], acc_rev = rev[v & (v - 1)];
        if (b < n) {
          acc |= composition(a, b);
          acc_rev |= composition(b, a);
        }
        row[v] = acc;
        rev[v] = acc_rev;
      }
    }
  }
  for (int a = 0; a < n; ++a)
    for (size_t e = 0; e < per_atom; ++e) {
      univ_left_[e] |= chunks_[a * per_atom + e];
      univ_right_[e] |= chunks_rev_[a * per_atom + e];
    }
  indexed_ = true;
}

namespace {

void split_bytes(const Relation& r, std::uint8_t out[16]) {
  for (int k = 0; k < 8; ++k) {
    out[k] = static_cast<std::uint8_t>(r.lo() >> (8 * k));
    out[8 + k] = static_cast<std::uint8_t>(r.hi() >> (8 * k));
  }
}

}  // namespace

Relation AtomTables::compose(const Relation& r, const Relation& s) const {
  if (!indexed_) {
    check(r);
    check(s);
    Relation out(alg_);
    r.for_each([&](AtomId a) {
      s.for_each([&](AtomId b) { out |= composition(a, b); });
    });
    return out;
  }
  return compose_covering(r, s, universal());
}

Relation AtomTables::compose_covering(const Relation& r, const Relation& s,
                                      const Relation& stop) const {
  check(r);
  check(s);
  check(stop);
  if (r.is_empty() || s.is_empty()) return Relation(alg_);
  if (!indexed_) return compose(r, s);
  const int n = size();
  const int rn = r.size(), sn = s.size();
  std::uint64_t lo = 0, hi = 0;
  auto add = [&](const Relation& x) {
    lo |= x.lo();
    hi |= x.hi();
  };
  std::uint8_t bytes[16];
  if (rn == n || sn == n) {
    // One operand is universal: a single pass over the bytes of the other.
    const bool left = rn == n;
    split_bytes(left ? s : r, bytes);
    const std::vector<Relation>& t = left ? univ_left_ : univ_right_;
    for (int k = 0; k < bytes_; ++k)
      if (bytes[k]) add(t[k * 256 + bytes[k]]);
    return Relation(alg_, lo, hi);
  }
  // Iterate over the smaller operand; the table covers the other one a
  // byte at a time.
  const bool by_left = rn <= sn;
  split_bytes(by_left ? s : r, bytes);
  const std::vector<Relation>& t = by_left ? chunks_ : chunks_rev_;
  const Relation& outer = by_left ? r : s;
  const std::uint64_t slo = stop.lo(), shi = stop.hi();
  const size_t per_atom = static_cast<size_t>(bytes_) * 256;
  for (int half = 0; half < 2; ++half)
    for (std::uint64_t w = half ? outer.hi() : outer.lo(); w != 0; w &= w - 1) {
      const Relation* base = &t[(64 * half + __builtin_ctzll(w)) * per_atom];
      for (int k = 0; k < bytes_; ++k)
        if (bytes[k]) add(base[k * 256 + bytes[k]]);
      if ((slo & ~lo) == 0 && (shi & ~hi) == 0) return Relation(alg_, lo, hi);
    }
  return Relation(alg_, lo, hi);
}

std::string AtomTables::format(const Relation& r) const {
  check(r);
  std::string out = "{";
  bool first = true;
  r.for_each([&](AtomId a) {
    if (!first) out += ", ";
    out += names_[a];
    first = false;
  });
  out += "}";
  return out;
}

Relation converse(const Relation& r, const AtomTables& t) {
  if (r.algebra() != t.algebra())
    throw std::invalid_argument("relation does not belong to the tables");
  Relation out(t.algebra());
  r.for_each([&](AtomId a) { out |= t.converse(a); });
  return out;
}

Relation rotate(const Relation& r, const AtomTables& t) {
  if (r.algebra() != t.algebra())
    throw std::invalid_argument("relation does not belong to the tables");
  Relation out(t.algebra());
  r.for_each([&](AtomId a) { out |= t.rotation(a); });
  return out;
}

Relation compose(const Relation& r, const Relation& s, const AtomTables& t) {
  return t.compose(r, s);
}

}  // namespace dlines
