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

#include "dlines/csp.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

#include "dlines/pa.hpp"

namespace dlines {

namespace {

// Permutation slots of (i, j, k): (i,j,k) (i,k,j) (j,k,i) (k,i,j) (j,i,k)
// (k,j,i).
std::array<Triple, 6> slots(int i, int j, int k) {
  return {Triple{i, j, k}, Triple{i, k, j}, Triple{j, k, i},
          Triple{k, i, j}, Triple{j, i, k}, Triple{k, j, i}};
}

AtomId single(const Relation& r, const char* what) {
  if (!r.is_atomic())
    throw std::invalid_argument(std::string("constraint matrices need atom "
                                            "valued ") + what);
  return r.first();
}

}  // namespace

// Byte-chunked images of relations under the six slot maps: entry
// (k * 256 + v) maps the atoms encoded by value v in byte k.
struct ConstraintMatrix::Permutations {
  int bytes = 0;
  std::array<std::vector<Relation>, 6> fwd, inv;
};

const ConstraintMatrix::Permutations& ConstraintMatrix::permutations(Algebra alg) {
  static const std::array<Permutations, 4> all = [] {
    std::array<Permutations, 4> out;
    for (Algebra a : {Algebra::cyc, Algebra::pa, Algebra::cpa}) {
      const AtomTables& t = tables_for(a);
      const int u = t.size();
      std::array<std::vector<AtomId>, 6> fwd, inv;
      for (auto& v : fwd) v.resize(u);
      for (auto& v : inv) v.resize(u);
      for (AtomId x = 0; x < u; ++x) {
        AtomId c = single(t.converse(x), "converse");
        AtomId r = single(t.rotation(x), "rotation");
        AtomId rr = single(t.rotation(r), "rotation");
        fwd[0][x] = x;
        fwd[1][x] = c;
        fwd[2][x] = r;
        fwd[3][x] = rr;
        fwd[4][x] = single(t.converse(r), "converse");
        fwd[5][x] = single(t.converse(rr), "converse");
      }
      for (int p = 0; p < 6; ++p)
        for (AtomId x = 0; x < u; ++x) inv[p][fwd[p][x]] = x;
      Permutations& pm = out[static_cast<int>(a)];
      pm.bytes = (u + 7) / 8;
      auto chunk = [&](const std::vector<AtomId>& m) {
        std::vector<Relation> table(static_cast<size_t>(pm.bytes) * 256, Relation(a));
        for (int k = 0; k < pm.bytes; ++k)
          for (int v = 1; v < 256; ++v) {
            const int x = 8 * k + __builtin_ctz(v);
            Relation acc = table[k * 256 + (v & (v - 1))];
            if (x < u) acc.insert(m[x]);
            table[k * 256 + v] = acc;
          }
        return table;
      };
      for (int p = 0; p < 6; ++p) {
        pm.fwd[p] = chunk(fwd[p]);
        pm.inv[p] = chunk(inv[p]);
      }
    }
    return out;
  }();
  return all[static_cast<int>(alg)];
}

ConstraintMatrix::ConstraintMatrix(Algebra alg, int n)
    : alg_(alg), n_(n), tables_(&tables_for(alg)) {
  if (alg == Algebra::ta)
    throw std::invalid_argument("translation algebra has relation valued rotation");
  if (n < 0) throw std::invalid_argument("negative variable count");
  perm_ = &permutations(alg);
  e_.assign(static_cast<size_t>(n) * n * n, tables_->universal());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) restrict(i, j, j, tables_->identity_comp());
  for (int i = 0; i < n; ++i) restrict(i, i, i, tables_->identity_diag());
  trail_.clear();
}

Relation ConstraintMatrix::map(const Relation& r, int slot, bool inverse) const {
  const std::vector<Relation>& t = inverse ? perm_->inv[slot] : perm_->fwd[slot];
  std::uint64_t lo = 0, hi = 0;
  for (int k = 0; k < perm_->bytes; ++k) {
    const std::uint64_t w = k < 8 ? r.lo() : r.hi();
    const unsigned v = static_cast<unsigned>(w >> (8 * (k % 8))) & 0xff;
    if (v) {
      lo |= t[k * 256 + v].lo();
      hi |= t[k * 256 + v].hi();
    }
  }
  return Relation(alg_, lo, hi);
}

void ConstraintMatrix::write(size_t idx, const Relation& r) {
  trail_.emplace_back(idx, e_[idx]);
  e_[idx] = r;
}

bool ConstraintMatrix::restrict(int i, int j, int k, const Relation& r,
                                std::vector<Triple>* changed) {
  if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_)
    throw std::out_of_range("variable index out of range");
  if (r.algebra() != alg_)
    throw std::invalid_argument("relation of another algebra");
  const std::array<Triple, 6> s = slots(i, j, k);
  std::array<size_t, 6> idx;
  for (int p = 0; p < 6; ++p) idx[p] = index(s[p].i, s[p].j, s[p].k);
  Relation cur = e_[idx[0]] & r;
  // With repeated indices slots alias, so iterate to a common fixpoint.
  while (true) {
    for (int p = 1; p < 6; ++p) cur &= map(e_[idx[p]], p, true);
    bool any = false;
    for (int p = 0; p < 6; ++p) {
      Relation v = e_[idx[p]] & map(cur, p, false);
      if (v != e_[idx[p]]) {
        write(idx[p], v);
        any = true;
        if (changed) changed->push_back(s[p]);
      }
    }
    if (!any) break;
  }
  return !cur.is_empty();
}

void ConstraintMatrix::undo(size_t mark) {
  while (trail_.size() > mark) {
    e_[trail_.back().first] = trail_.back().second;
    trail_.pop_back();
  }
}

bool ConstraintMatrix::all_atomic() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Relation& r) { return r.is_atomic(); });
}

bool ConstraintMatrix::has_empty() const {
  return std::any_of(e_.begin(), e_.end(),
                     [](const Relation& r) { return r.is_empty(); });
}

std::vector<std::string> ConstraintMatrix::property_violations() const {
  std::vector<std::string> out;
  auto name = [](int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(k) + ")";
  };
  for (int i = 0; i < n_; ++i) {
    if (!at(i, i, i).subset_of(tables_->identity_diag()))
      out.push_back("identity " + name(i, i, i));
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        if (at(i, j, k) != map(at(i, k, j), 1, false))
          out.push_back("converse " + name(i, j, k));
        if (at(i, j, k) != map(at(k, i, j), 2, false))
          out.push_back("rotation " + name(i, j, k));
      }
  }
  return out;
}

std::vector<Triple> ConstraintMatrix::canonical_triples() const {
  std::vector<Triple> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      for (int k = j; k < n_; ++k) out.push_back({i, j, k});
  return out;
}

std::optional<ConstraintMatrix> matrix_from_constraints(
    Algebra alg, int n, const std::vector<Constraint>& constraints) {
  ConstraintMatrix m(alg, n);
  bool ok = true;
  for (const Constraint& c : constraints) {
    Relation r = c.rel.algebra() == alg ? c.rel : to_algebra(c.rel, alg);
    if (!m.restrict(c.i, c.j, c.k, r)) ok = false;
  }
  m.clear_trail();
  if (!ok) return std::nullopt;
  return m;
}

namespace {

// Worklist propagation on a matrix owned by the caller.
class Propagator {
 public:
  Propagator(ConstraintMatrix& m, PropagationStats* stats,
             std::vector<TraceStep>* trace)
      : m_(m),
        n_(m.size()),
        queued_(static_cast<size_t>(n_) * n_ * n_ * n_, 0),
        stats_(stats),
        trace_(trace) {}

  bool run_all(std::optional<std::uint64_t> seed) {
    const size_t total = queued_.size();
    std::vector<std::uint32_t> order(total);
    for (size_t q = 0; q < total; ++q) order[q] = static_cast<std::uint32_t>(q);
    if (seed) {
      std::mt19937_64 rng(*seed);
      std::shuffle(order.begin(), order.end(), rng);
    }
    for (std::uint32_t q : order) push(q);
    return drain();
  }

  bool run_from(const std::vector<Triple>& changed) {
    for (const Triple& t : changed) enqueue_users(t);
    return drain();
  }

 private:
  std::uint32_t code(int i, int j, int k, int l) const {
    return static_cast<std::uint32_t>(((i * n_ + j) * n_ + k) * n_ + l);
  }
  void push(std::uint32_t q) {
    if (queued_[q]) return;
    queued_[q] = 1;
    queue_.push_back(q);
  }
  // Quadruples reading T_abc as T_ijk or as T_ikl.
  void enqueue_users(const Triple& t) {
    for (int x = 0; x < n_; ++x) {
      push(code(t.i, t.j, t.k, x));
      push(code(t.i, x, t.j, t.k));
    }
  }

  bool drain() {
    const AtomTables& tab = m_.tables();
    std::vector<Triple> changed;
    while (!queue_.empty()) {
      std::uint32_t q = queue_.front();
      queue_.pop_front();
      queued_[q] = 0;
      const int l = static_cast<int>(q % n_);
      const int k = static_cast<int>(q / n_ % n_);
      const int j = static_cast<int>(q / n_ / n_ % n_);
      const int i = static_cast<int>(q / n_ / n_ / n_);
      if (stats_) ++stats_->quadruples;
      const Relation& target = m_.at(i, j, l);
      Relation comp = tab.compose_covering(m_.at(i, j, k), m_.at(i, k, l), target);
      Relation next = target & comp;
      if (next == target) continue;
      if (stats_) ++stats_->revisions;
      if (trace_) trace_->push_back({i, j, k, l, target, next});
      changed.clear();
      bool ok = m_.restrict(i, j, l, next, &changed);
      if (!ok) {
        for (std::uint32_t r : queue_) queued_[r] = 0;
        queue_.clear();
        return false;
      }
      for (const Triple& t : changed) enqueue_users(t);
    }
    return true;
  }

  ConstraintMatrix& m_;
  int n_;
  std::vector<std::uint8_t> queued_;
  std::deque<std::uint32_t> queue_;
  PropagationStats* stats_;
  std::vector<TraceStep>* trace_;
};

}  // namespace

PropagationOutcome ic_pa(ConstraintMatrix m, const PropagationOptions& opt) {
  PropagationOutcome out{PropagationStatus::closed, std::move(m), {}, {}};
  if (out.matrix.has_empty()) {
    out.status = PropagationStatus::inconsistent;
    return out;
  }
  Propagator p(out.matrix, &out.stats, opt.trace ? &out.trace : nullptr);
  if (!p.run_all(opt.shuffle_seed)) out.status = PropagationStatus::inconsistent;
  out.matrix.clear_trail();
  return out;
}

bool is_path_closed(const ConstraintMatrix& m) {
  const int n = m.size();
  const AtomTables& t = m.tables();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (!m.at(i, j, l).subset_of(t.compose(m.at(i, j, k), m.at(i, k, l))))
            return false;
  return true;
}

namespace {

class Searcher {
 public:
  Searcher(ConstraintMatrix& m, const SearchOptions& opt, SearchStats& stats)
      : m_(m),
        opt_(opt),
        stats_(stats),
        prop_(m, &stats.propagation, nullptr),
        canon_(m.canonical_triples()) {}

  bool start() { return prop_.run_all(std::nullopt); }

  // Returns true when an accepted scenario is in m_.
  bool dfs() {
    ++stats_.nodes;
    if (opt_.node_limit >= 0 && stats_.nodes > opt_.node_limit) {
      limit_hit_ = true;
      return false;
    }
    const Triple* pick = nullptr;
    int best = 1 << 30;
    for (const Triple& t : canon_) {
      int s = m_.at(t).size();
      if (s > 1 && s < best) {
        best = s;
        pick = &t;
      }
    }
    if (!pick) {
      if (!opt_.accept || opt_.accept(m_)) return true;
      ++stats_.rejected_leaves;
      return false;
    }
    const Triple t = *pick;
    const std::vector<AtomId> atoms = m_.at(t).atoms();
    for (AtomId a : atoms) {
      size_t mark = m_.mark();
      std::vector<Triple> changed;
      bool ok = m_.restrict(t.i, t.j, t.k, Relation::atom(m_.algebra(), a), &changed) &&
                prop_.run_from(changed);
      if (ok && dfs()) return true;
      m_.undo(mark);
      if (limit_hit_) return false;
      ++stats_.backtracks;
    }
    return false;
  }

  bool limit_hit() const { return limit_hit_; }

 private:
  ConstraintMatrix& m_;
  const SearchOptions& opt_;
  SearchStats& stats_;
  Propagator prop_;
  std::vector<Triple> canon_;
  bool limit_hit_ = false;
};

}  // namespace

SearchOutcome ic_sa(ConstraintMatrix m, const SearchOptions& opt) {
  SearchOutcome out{SearchStatus::exhausted, std::nullopt, {}};
  if (m.has_empty()) return out;
  m.clear_trail();
  Searcher s(m, opt, out.stats);
  if (!s.start()) return out;
  if (s.dfs()) {
    m.clear_trail();
    out.status = SearchStatus::found;
    out.scenario = std::move(m);
  } else if (s.limit_hit()) {
    out.status = SearchStatus::limit;
  }
  return out;
}

}  // namespace dlines
