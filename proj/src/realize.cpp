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

#include "dlines/realize.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "dlines/cyc.hpp"
#include "dlines/pa.hpp"
#include "dlines/ta.hpp"

namespace dlines {

namespace {

constexpr int kGridLimit = 16;
constexpr int kAttempts = 120;
constexpr int kRandomGrid = 4;

std::string var_name(int v) { return "x" + std::to_string(v); }

// What an atomic entry says, in the combined algebra.
struct EntryAtom {
  bool star = false;  // coarse atom over a pairwise cutting orientation
  AtomId ta = 0;
  AtomId cyc = 0;
};

EntryAtom entry_atom(const ConstraintMatrix& m, int i, int j, int k) {
  const Relation& r = m.at(i, j, k);
  EntryAtom out;
  if (m.algebra() == Algebra::cyc) {
    out.star = true;
    out.cyc = r.first();
    return out;
  }
  Relation pa = to_pa(r);
  PaAtom c = pa_components(pa.first());
  out.ta = c.ta;
  out.cyc = c.cyc;
  out.star = !pa.is_atomic();
  return out;
}

std::string dir_str(const Direction& d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

// The primitive integer direction of q - p, if it fits.
std::optional<Direction> direction_of(const Point& p, const Point& q) {
  mpq_class dx = (q.x - p.x).raw(), dy = (q.y - p.y).raw();
  mpz_class l = lcm(dx.get_den(), dy.get_den());
  mpz_class a = dx.get_num() * (l / dx.get_den()), b = dy.get_num() * (l / dy.get_den());
  mpz_class g = gcd(a, b);
  a /= g;
  b /= g;
  if (!a.fits_slong_p() || !b.fits_slong_p()) return std::nullopt;
  return Direction{a.get_si(), b.get_si()};
}

// Crossings of earlier lines that v must pass through: {cc_eq} entries
// (v, j, k) with j and k crossing.
std::vector<Point> required_points(const ConstraintMatrix& m, const Scene& scene, int v) {
  std::vector<Point> out;
  if (m.algebra() == Algebra::cyc) return out;
  const AtomId eq = ta_atom("cc_eq");
  for (int j = 0; j < v; ++j)
    for (int k = j + 1; k < v; ++k) {
      EntryAtom e = entry_atom(m, v, j, k);
      if (e.star || e.ta != eq) continue;
      std::optional<Point> p = intersect(scene[j], scene[k]);
      if (p && std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
    }
  return out;
}

// Phase 1 for one variable. A line through two known crossings has its
// direction fixed up to sign.
bool assign_direction(const ConstraintMatrix& m, std::vector<Direction>& dirs, int v,
                      const Scene& scene, std::mt19937_64* rng,
                      std::vector<std::string>& log, std::string& failure) {
  if (v == 0) return true;
  {
    std::vector<Cycb> rel(v);
    for (int u = 0; u < v; ++u)
      rel[u] = cyct_components(entry_atom(m, u, v, v).cyc).b1;
    auto fits = [&](const Direction& d) {
      for (int u = 0; u < v; ++u)
        if (cycb_classify(d, dirs[u]) != rel[u]) return false;
      return true;
    };
    std::optional<Direction> pick;
    std::string how;
    const std::vector<Point> through = required_points(m, scene, v);
    if (through.size() >= 2) {
      std::optional<Direction> d = direction_of(through[0], through[1]);
      if (!d) {
        failure = "direction of " + var_name(v) + " overflows";
        return false;
      }
      for (const Direction& c : {*d, opposite(*d)})
        if (!pick && fits(c)) pick = c;
      if (!pick) {
        failure = "line " + var_name(v) + " through two crossings contradicts its orientations";
        return false;
      }
      how = "through two crossings";
    }
    for (int u = 0; u < v && !pick; ++u) {
      if (rel[u] == Cycb::e) pick = dirs[u];
      if (rel[u] == Cycb::o) pick = opposite(dirs[u]);
      if (pick) how = "forced by " + var_name(u);
    }
    if (pick && !fits(*pick)) {
      failure = "orientation of " + var_name(v) + " " + how +
                " contradicts another variable";
      return false;
    }
    if (rng && !pick) {
      std::vector<Direction> options;
      for (const Direction& d : grid_directions(kRandomGrid))
        if (fits(d)) options.push_back(d);
      if (!options.empty()) {
        pick = options[(*rng)() % options.size()];
        how = "random grid direction";
      }
    }
    for (int b = 1; b <= kGridLimit && !pick; ++b)
      for (const Direction& d : grid_directions(b))
        if (std::max(std::llabs(d.a), std::llabs(d.b)) == b && fits(d)) {
          pick = d;
          how = "grid bound " + std::to_string(b);
          break;
        }
    if (!pick) {
      // Sums and normals of boundary rays reach arbitrarily narrow arcs.
      std::vector<Direction> rays;
      for (int u = 0; u < v; ++u) {
        rays.push_back(dirs[u]);
        rays.push_back(opposite(dirs[u]));
      }
      for (size_t a = 0; a < rays.size() && !pick; ++a) {
        const Direction& p = rays[a];
        for (const Direction& d : {Direction{-p.b, p.a}, Direction{p.b, -p.a}})
          if (fits(d)) {
            pick = d;
            break;
          }
        for (size_t b = a + 1; b < rays.size() && !pick; ++b) {
          const Direction& q = rays[b];
          if (p.a + q.a == 0 && p.b + q.b == 0) continue;
          Direction d = make_direction(p.a + q.a, p.b + q.b);
          if (fits(d)) pick = d;
        }
      }
      how = "between boundary rays";
    }
    if (!pick) {
      failure = "no orientation for " + var_name(v);
      return false;
    }
    dirs[v] = *pick;
    log.push_back(var_name(v) + ": direction " + dir_str(*pick) + " (" + how + ")");
  }
  return true;
}

struct Bound {
  Rational v;
  bool strict;
};

// A convex subset of the rationals.
class Interval {
 public:
  void above(const Rational& x, bool strict) {
    if (!lo_ || x > lo_->v || (x == lo_->v && strict)) lo_ = Bound{x, strict};
  }
  void below(const Rational& x, bool strict) {
    if (!hi_ || x < hi_->v || (x == hi_->v && strict)) hi_ = Bound{x, strict};
  }
  void less(const Rational& x) { below(x, true); }
  void greater(const Rational& x) { above(x, true); }
  void equal(const Rational& x) {
    above(x, false);
    below(x, false);
  }
  void nothing() { void_ = true; }

  bool empty() const {
    if (void_) return true;
    if (!lo_ || !hi_) return false;
    return lo_->v > hi_->v || (lo_->v == hi_->v && (lo_->strict || hi_->strict));
  }

  // The midpoint, or a random interior point with rng.
  Rational pick(std::mt19937_64* rng) const {
    const std::int64_t k = rng ? static_cast<std::int64_t>((*rng)() % 7) : 3;
    if (lo_ && hi_) {
      if (lo_->v == hi_->v) return lo_->v;
      return lo_->v + (hi_->v - lo_->v) * Rational(k + 1, 8);
    }
    const Rational step(rng ? k % 4 + 1 : 1);
    if (lo_) return lo_->v + step;
    if (hi_) return hi_->v - step;
    return Rational(rng ? k - 3 : 0);
  }

  std::string str() const {
    if (void_) return "{}";
    std::string s = lo_ ? (lo_->strict ? "(" : "[") + lo_->v.str() : "(-inf";
    s += ", ";
    s += hi_ ? hi_->v.str() + (hi_->strict ? ")" : "]") : "+inf)";
    return s;
  }

 private:
  std::optional<Bound> lo_, hi_;
  bool void_ = false;
};

// Position of the crossing of `other` with the line (dir, q), measured
// along dir, as a + b q.
std::pair<Rational, Rational> crossing_affine(const Direction& dir,
                                              const DLine& other) {
  auto at = [&](std::int64_t q) {
    Point p = *intersect(DLine(dir, Rational(q)), other);
    return Rational(dir.a) * p.x + Rational(dir.b) * p.y;
  };
  Rational a = at(0);
  return {a, at(1) - a};
}

// Side of a parallel line relative to v: l, c or r, as a constraint on v's
// offset q given the line's offset x in v's frame.
void side(Interval& iv, char m, const Rational& x) {
  if (m == 'l') iv.less(x);
  if (m == 'c') iv.equal(x);
  if (m == 'r') iv.greater(x);
}

// Phase 2 for one variable: its offset.
bool assign_offset(const ConstraintMatrix& m, const std::vector<Direction>& dirs, int v,
                   Scene& scene, std::mt19937_64* rng, std::vector<std::string>& log,
                   std::string& failure) {
  const auto& ta_names = ta_atom_names();
  static const Relation cutting = pairwise_cutting();
  {
    const DLine ref(dirs[v], Rational(0));
    Interval iv;
    auto q_of = [&](int u) { return frame_offset(ref, scene[u]); };
    for (int j = 0; j < v; ++j)
      for (int k = 0; k < v; ++k) {
        EntryAtom e = entry_atom(m, v, j, k);
        if (e.star) continue;
        const std::string_view t = ta_names[e.ta];
        const TaGroup group = ta_group(e.ta);
        if (group == TaGroup::cc) {
          if (!cutting.contains(e.cyc)) continue;
          auto [aj, bj] = crossing_affine(dirs[v], scene[j]);
          auto [ak, bk] = crossing_affine(dirs[v], scene[k]);
          Rational c0 = ak - aj, c1 = bk - bj;
          int want = t == "cc_lt" ? 1 : t == "cc_gt" ? -1 : 0;
          if (c1.sign() == 0) {
            if (c0.sign() != want) iv.nothing();
            continue;
          }
          Rational root = -c0 / c1;
          if (want == 0) {
            iv.equal(root);
          } else if ((want > 0) == (c1.sign() > 0)) {
            iv.greater(root);
          } else {
            iv.less(root);
          }
        } else if (group == TaGroup::cp) {  // cp_m: k parallel to v on side m
          side(iv, t[3], q_of(k));
        } else if (group == TaGroup::pc) {  // pc_m: j parallel to v on side m
          side(iv, t[3], q_of(j));
        } else {  // pp_mn
          const char s = t[3];
          const int r = t[4] - '0';
          const Rational qj = q_of(j), qk = q_of(k);
          side(iv, s, qj);
          if (s == 'l') {
            if (r == 2) iv.less(qk);
            if (r == 3) iv.equal(qk);
            if (r == 4) iv.greater(qk);
          } else {
            if (r == 0) iv.less(qk);
            if (r == 1) iv.equal(qk);
            if (r == 2) iv.greater(qk);
          }
        }
      }
    if (iv.empty()) {
      failure = "no offset for " + var_name(v) + ": feasible set " + iv.str();
      return false;
    }
    Rational q = iv.pick(rng);
    scene[v] = DLine(dirs[v], q);
    log.push_back(var_name(v) + ": offset in " + iv.str() + " -> " + q.str());
  }
  return true;
}

}  // namespace

namespace {

// Entry (i, j, k) of the result is entry (p[i], p[j], p[k]) of m.
ConstraintMatrix permuted(const ConstraintMatrix& m, const std::vector<int>& p) {
  const int n = m.size();
  ConstraintMatrix r(m.algebra(), n);
  for (const Triple& t : m.canonical_triples())
    r.restrict(t.i, t.j, t.k, m.at(p[t.i], p[t.j], p[t.k]));
  return r;
}

ExtractResult extract_in_order(const ConstraintMatrix& m, std::mt19937_64* rng) {
  ExtractResult out;
  const int n = m.size();
  std::vector<Direction> dirs(n, Direction{1, 0});
  Scene& scene = out.realization.scene;
  scene.assign(n, DLine());
  for (int v = 0; v < n; ++v) {
    out.realization.order.push_back(v);
    if (!assign_direction(m, dirs, v, scene, rng, out.realization.log, out.failure))
      return out;
    if (m.algebra() == Algebra::cyc) {
      scene[v] = DLine(dirs[v], Rational(0));
    } else if (!assign_offset(m, dirs, v, scene, rng, out.realization.log, out.failure)) {
      return out;
    }
  }
  SolutionCheck c = check_solution(m, out.realization.scene);
  if (!c.ok) {
    out.failure = "model check failed: " + c.detail();
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace

ExtractResult extract_model(const ConstraintMatrix& m) {
  if (!m.all_atomic())
    throw std::invalid_argument("model extraction needs an atomic matrix");
  ExtractResult first = extract_in_order(m, nullptr);
  if (first.ok || m.algebra() != Algebra::pa) return first;
  // Choices made early can rule out crossing orders or incidences needed
  // later. Retry with other variable orders, in lexicographic sequence,
  // and random choices from a generator seeded by the attempt.
  std::vector<int> p(m.size());
  for (int v = 0; v < m.size(); ++v) p[v] = v;
  for (int attempt = 1; attempt < kAttempts; ++attempt) {
    std::next_permutation(p.begin(), p.end());
    std::mt19937_64 rng(attempt);
    ExtractResult r = extract_in_order(permuted(m, p), &rng);
    if (!r.ok) continue;
    ExtractResult out;
    out.ok = true;
    out.realization.order = p;
    out.realization.scene.resize(m.size());
    for (int v = 0; v < m.size(); ++v) out.realization.scene[p[v]] = r.realization.scene[v];
    out.realization.log.push_back("variable order " + std::to_string(attempt + 1));
    for (std::string& line : r.realization.log) out.realization.log.push_back(std::move(line));
    SolutionCheck c = check_solution(m, out.realization.scene);
    if (!c.ok) throw std::logic_error("permuted extraction failed its check: " + c.detail());
    return out;
  }
  return first;
}

std::string SolutionCheck::detail() const {
  if (ok) return "ok";
  return "triple (" + std::to_string(triple.i) + "," + std::to_string(triple.j) +
         "," + std::to_string(triple.k) + ") classifies as " + found;
}

SolutionCheck check_solution(const ConstraintMatrix& m, const Scene& scene) {
  const int n = m.size();
  if (static_cast<int>(scene.size()) != n)
    throw std::invalid_argument("scene size differs from the variable count");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        AtomId a;
        switch (m.algebra()) {
          case Algebra::cyc:
            a = classify_cyc(scene[i], scene[j], scene[k]);
            break;
          case Algebra::cpa:
            a = classify_cpa(scene[i], scene[j], scene[k]);
            break;
          default:
            a = classify_pa(scene[i], scene[j], scene[k]);
        }
        if (!m.at(i, j, k).contains(a))
          return {false, {i, j, k}, m.tables().name(a)};
      }
  return {};
}

ConstraintMatrix harvest_matrix(const Scene& scene, Algebra alg) {
  if (alg != Algebra::pa && alg != Algebra::cpa)
    throw std::invalid_argument("harvesting needs pa or cpa");
  const int n = static_cast<int>(scene.size());
  ConstraintMatrix m(alg, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        AtomId a = alg == Algebra::pa ? classify_pa(scene[i], scene[j], scene[k])
                                      : classify_cpa(scene[i], scene[j], scene[k]);
        if (!m.restrict(i, j, k, Relation::atom(alg, a)))
          throw std::logic_error("classification disagrees with the tables");
      }
  m.clear_trail();
  return m;
}

}  // namespace dlines
