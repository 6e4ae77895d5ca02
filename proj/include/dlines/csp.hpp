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

// Ternary constraint networks over line variables: the constraint matrix,
// four-consistency propagation and scenario search.

#ifndef DLINES_CSP_HPP_
#define DLINES_CSP_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dlines/relation.hpp"

namespace dlines {

/// R(x_i, x_j, x_k) with R a relation of the combined algebra.
struct Constraint {
  int i = 0, j = 0, k = 0;
  Relation rel;
};

struct Triple {
  int i, j, k;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// n x n x n relations closed under the identity, converse and rotation
/// properties. Supported algebras are cyc, pa and cpa, whose converse and
/// rotation are atom valued.
///
/// Besides T_iii within the diagonal identity, construction restricts
/// every T_ijj to the identity of composition: the second and third
/// arguments are the same variable.
class ConstraintMatrix {
 public:
  ConstraintMatrix(Algebra alg, int n);

  Algebra algebra() const { return alg_; }
  int size() const { return n_; }
  const AtomTables& tables() const { return *tables_; }

  const Relation& at(int i, int j, int k) const { return e_[index(i, j, k)]; }
  const Relation& at(const Triple& t) const { return at(t.i, t.j, t.k); }

  /// Intersects r into T_ijk and the five permuted entries. Returns false
  /// if an entry became empty. Changed entries are appended to `changed`.
  bool restrict(int i, int j, int k, const Relation& r,
                std::vector<Triple>* changed = nullptr);

  /// Undo support: every entry write is recorded.
  size_t mark() const { return trail_.size(); }
  void undo(size_t mark);
  void clear_trail() { trail_.clear(); }

  bool all_atomic() const;
  bool has_empty() const;

  /// Violations of the identity, converse and rotation properties, one
  /// line each.
  std::vector<std::string> property_violations() const;

  /// Triples with i <= j <= k. They determine the whole matrix.
  std::vector<Triple> canonical_triples() const;

  friend bool operator==(const ConstraintMatrix& a, const ConstraintMatrix& b) {
    return a.alg_ == b.alg_ && a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  size_t index(int i, int j, int k) const {
    return (static_cast<size_t>(i) * n_ + j) * n_ + k;
  }
  struct Permutations;
  static const Permutations& permutations(Algebra alg);
  Relation map(const Relation& r, int slot, bool inverse) const;
  void write(size_t idx, const Relation& r);

  Algebra alg_;
  int n_;
  const AtomTables* tables_;
  std::vector<Relation> e_;
  // Atom a of T_ijk seen in permutation slot p, and the inverse maps.
  const Permutations* perm_;
  std::vector<std::pair<size_t, Relation>> trail_;
};

/// Starts from the universal matrix and intersects every constraint in,
/// converting relations to `alg` (see to_algebra). Returns nullopt if an
/// entry becomes empty. Throws std::out_of_range for a bad index and
/// std::invalid_argument for a relation not expressible in `alg`.
std::optional<ConstraintMatrix> matrix_from_constraints(
    Algebra alg, int n, const std::vector<Constraint>& constraints);

enum class PropagationStatus { closed, inconsistent };

struct PropagationStats {
  std::int64_t quadruples = 0;  // quadruple rule applications
  std::int64_t revisions = 0;   // applications that changed an entry
};

struct TraceStep {
  int i, j, k, l;  // T_ijl restricted by T_ijk o T_ikl
  Relation before, after;
};

struct PropagationOptions {
  /// Shuffles the initial queue; without it quadruples are processed in
  /// lexicographic order.
  std::optional<std::uint64_t> shuffle_seed;
  bool trace = false;
};

struct PropagationOutcome {
  PropagationStatus status;
  ConstraintMatrix matrix;
  std::vector<TraceStep> trace;
  PropagationStats stats;
};

/// Applies T_ijl <- T_ijl & (T_ijk o T_ikl) over all quadruples, indices
/// may repeat, until nothing changes. The result is strongly
/// four-consistent unless an entry empties.
PropagationOutcome ic_pa(ConstraintMatrix m, const PropagationOptions& opt = {});

/// True iff T_ijl is within T_ijk o T_ikl for every quadruple.
bool is_path_closed(const ConstraintMatrix& m);

enum class SearchStatus { found, exhausted, limit };

struct SearchStats {
  std::int64_t nodes = 0;
  std::int64_t backtracks = 0;
  std::int64_t rejected_leaves = 0;  // scenarios refused by `accept`
  PropagationStats propagation;
};

struct SearchOptions {
  /// Called on every closed atomic scenario; returning false resumes the
  /// search.
  std::function<bool(const ConstraintMatrix&)> accept;
  std::int64_t node_limit = -1;  // negative: unlimited
};

struct SearchOutcome {
  SearchStatus status;
  std::optional<ConstraintMatrix> scenario;
  SearchStats stats;
};

/// Depth-first refinement: picks the non-atomic canonical entry with the
/// fewest atoms, tries its atoms in increasing order and filters each node
/// with incremental four-consistency.
SearchOutcome ic_sa(ConstraintMatrix m, const SearchOptions& opt = {});

}  // namespace dlines

#endif  // DLINES_CSP_HPP_
