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

#ifndef DLINES_RELATION_HPP_
#define DLINES_RELATION_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dlines {

/// The four ternary algebras of the library.
enum class Algebra : std::uint8_t { cyc, ta, pa, cpa };

using AtomId = int;

/// Number of atoms of an algebra: 24, 22, 112 or 96.
int universe_size(Algebra alg);

/// Short tag used in table files and diagnostics.
std::string_view algebra_tag(Algebra alg);
std::optional<Algebra> algebra_from_tag(std::string_view tag);

/// A set of atoms of one algebra, stored as a 128 bit vector.
class Relation {
 public:
  static constexpr int kMaxAtoms = 128;

  Relation() = default;
  explicit Relation(Algebra alg) : alg_(alg) {}
  Relation(Algebra alg, std::uint64_t lo, std::uint64_t hi);

  static Relation empty(Algebra alg) { return Relation(alg); }
  static Relation universal(Algebra alg);
  static Relation atom(Algebra alg, AtomId a);
  static Relation of(Algebra alg, std::initializer_list<AtomId> atoms);

  Algebra algebra() const { return alg_; }
  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return hi_; }

  bool contains(AtomId a) const;
  void insert(AtomId a);
  void erase(AtomId a);

  int size() const;
  bool is_empty() const { return (lo_ | hi_) == 0; }
  bool is_atomic() const { return size() == 1; }
  /// Smallest atom; the relation must be non-empty.
  AtomId first() const;
  std::vector<AtomId> atoms() const;

  bool subset_of(const Relation& other) const;

  Relation& operator|=(const Relation& o);
  Relation& operator&=(const Relation& o);
  Relation& operator-=(const Relation& o);
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  friend Relation operator&(Relation a, const Relation& b) { return a &= b; }
  friend Relation operator-(Relation a, const Relation& b) { return a -= b; }
  /// Complement with respect to the algebra's universe.
  Relation operator~() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.alg_ == b.alg_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator!=(const Relation& a, const Relation& b) {
    return !(a == b);
  }
  /// Total order used for deterministic containers.
  friend bool operator<(const Relation& a, const Relation& b);

  /// Calls f(atom) for each atom in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t w = lo_; w != 0; w &= w - 1) f(__builtin_ctzll(w));
    for (std::uint64_t w = hi_; w != 0; w &= w - 1)
      f(64 + __builtin_ctzll(w));
  }

 private:
  void check(AtomId a) const;
  void check_same(const Relation& o) const;

  Algebra alg_ = Algebra::cyc;
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

/// Atom names, converse, rotation and composition of one ternary algebra.
///
/// Converse and rotation are stored per atom and may be relation valued.
/// Operations on relations are the union of the atom-level results.
class AtomTables {
 public:
  AtomTables(Algebra alg, std::vector<std::string> names);

  Algebra algebra() const { return alg_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(AtomId a) const { return names_.at(a); }
  std::optional<AtomId> find(std::string_view name) const;
  /// Like find, but throws std::invalid_argument for unknown names.
  AtomId id(std::string_view name) const;

  const Relation& converse(AtomId a) const { return converse_.at(a); }
  const Relation& rotation(AtomId a) const { return rotation_.at(a); }
  const Relation& composition(AtomId a, AtomId b) const {
    return composition_.at(static_cast<size_t>(a) * size() + b);
  }
  const Relation& identity_diag() const { return identity_diag_; }
  const Relation& identity_comp() const { return identity_comp_; }

  void set_converse(AtomId a, const Relation& r);
  void set_rotation(AtomId a, const Relation& r);
  void set_composition(AtomId a, AtomId b, const Relation& r);
  void set_identity_diag(const Relation& r);
  void set_identity_comp(const Relation& r);

  Relation universal() const { return Relation::universal(alg_); }
  Relation empty() const { return Relation::empty(alg_); }
  /// Parses a brace-free list of atom names, e.g. "lll,lrl".
  Relation relation(std::initializer_list<std::string_view> names) const;

  /// Union of the composition entries over all atom pairs.
  Relation compose(const Relation& r, const Relation& s) const;
  /// Same as compose, but may return a partial union as soon as it covers
  /// `stop`.
  Relation compose_covering(const Relation& r, const Relation& s,
                            const Relation& stop) const;

  /// Builds the lookup index used by compose. Setters invalidate it; until
  /// it is rebuilt compose falls back to the atom-by-atom loop.
  void index();

  std::string format(const Relation& r) const;

 private:
  void check(const Relation& r) const;

  Algebra alg_;
  std::vector<std::string> names_;
  std::vector<Relation> converse_;
  std::vector<Relation> rotation_;
  std::vector<Relation> composition_;
  Relation identity_diag_;
  Relation identity_comp_;
  bool indexed_ = false;
  int bytes_ = 0;
  // Entry (a * bytes_ + k) * 256 + v: union of composition(a, b) over the
  // atoms b encoded by value v in byte k of the second operand.
  std::vector<Relation> chunks_;
  // The same with the roles swapped: entry (b * bytes_ + k) * 256 + v
  // composes the atoms of byte k of the first operand with b.
  std::vector<Relation> chunks_rev_;
  // Universal first (second) operand against one byte of the other.
  std::vector<Relation> univ_left_, univ_right_;
};

Relation converse(const Relation& r, const AtomTables& t);
Relation rotate(const Relation& r, const AtomTables& t);
Relation compose(const Relation& r, const Relation& s, const AtomTables& t);

}  // namespace dlines

#endif  // DLINES_RELATION_HPP_
