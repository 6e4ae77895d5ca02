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

#include "dlines/derive.hpp"

#include "dlines/cyc.hpp"
#include "dlines/geometry.hpp"
#include "dlines/pa.hpp"
#include "dlines/ta.hpp"
#include "dlines/table_io.hpp"

namespace dlines {

namespace {

std::vector<std::string> names_of(Algebra alg) {
  std::vector<std::string> out;
  switch (alg) {
    case Algebra::cyc:
      for (auto n : cyct_atom_names()) out.emplace_back(n);
      break;
    case Algebra::ta:
      for (auto n : ta_atom_names()) out.emplace_back(n);
      break;
    case Algebra::pa:
      out = pa_atom_names();
      break;
    case Algebra::cpa:
      out = cpa_atom_names();
      break;
  }
  return out;
}

// Accumulates table entries as atoms are observed.
class Collector {
 public:
  explicit Collector(Algebra alg)
      : alg_(alg),
        n_(universe_size(alg)),
        conv_(n_, Relation(alg)),
        rot_(n_, Relation(alg)),
        comp_(static_cast<size_t>(n_) * n_, Relation(alg)),
        diag_(alg),
        ident_(alg) {}

  void conv(AtomId a, AtomId b) { conv_[a].insert(b); }
  void rot(AtomId a, AtomId b) { rot_[a].insert(b); }
  void comp(AtomId a, AtomId b, AtomId c) {
    comp_[static_cast<size_t>(a) * n_ + b].insert(c);
  }
  void diag(AtomId a) { diag_.insert(a); }
  void ident(AtomId a) { ident_.insert(a); }

  AtomTables build() const {
    AtomTables t(alg_, names_of(alg_));
    for (AtomId a = 0; a < n_; ++a) {
      t.set_converse(a, conv_[a]);
      t.set_rotation(a, rot_[a]);
      for (AtomId b = 0; b < n_; ++b)
        t.set_composition(a, b, comp_[static_cast<size_t>(a) * n_ + b]);
    }
    t.set_identity_diag(diag_);
    t.set_identity_comp(ident_);
    t.index();
    return t;
  }

 private:
  Algebra alg_;
  int n_;
  std::vector<Relation> conv_, rot_, comp_;
  Relation diag_, ident_;
};

AtomTables derive_cyc(int dir_bound) {
  const Direction x{1, 0};
  const std::vector<Direction> dirs = grid_directions(dir_bound);
  const size_t n = dirs.size();
  Collector c(Algebra::cyc);
  std::vector<AtomId> a(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      a[i * n + j] = cyct_classify(x, dirs[i], dirs[j]);
      c.conv(a[i * n + j], cyct_classify(x, dirs[j], dirs[i]));
      c.rot(a[i * n + j], cyct_classify(dirs[i], dirs[j], x));
    }
  for (size_t i = 0; i < n; ++i) c.ident(cyct_classify(x, dirs[i], dirs[i]));
  c.diag(cyct_classify(x, x, x));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        c.comp(a[i * n + j], a[j * n + k], a[i * n + k]);
  return c.build();
}

// Shared pass for the translation and combined algebras: x is the x axis,
// y, z and w range over the grid.
AtomTables derive_lines(Algebra alg, GridBounds b) {
  const DLine x(1, 0, 0);
  const std::vector<DLine> lines = grid_lines(b.dir, b.offset);
  const size_t n = lines.size();
  auto project = [alg](AtomId pa) {
    return alg == Algebra::ta ? pa_components(pa).ta : pa;
  };
  Collector c(alg);
  std::vector<AtomId> a(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      a[i * n + j] = project(classify_pa(x, lines[i], lines[j]));
      c.conv(a[i * n + j], project(classify_pa(x, lines[j], lines[i])));
      c.rot(a[i * n + j], project(classify_pa(lines[i], lines[j], x)));
    }
  for (size_t i = 0; i < n; ++i) c.ident(a[i * n + i]);
  c.diag(project(classify_pa(x, x, x)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const AtomId r = a[i * n + j];
      const AtomId* row_j = &a[j * n];
      const AtomId* row_i = &a[i * n];
      for (size_t k = 0; k < n; ++k) c.comp(r, row_j[k], row_i[k]);
    }
  return c.build();
}

}  // namespace

AtomTables derive_tables(Algebra alg, GridBounds bounds) {
  switch (alg) {
    case Algebra::cyc:
      return derive_cyc(bounds.dir);
    case Algebra::ta:
    case Algebra::pa:
      return derive_lines(alg, bounds);
    case Algebra::cpa:
      return build_cpa_tables(derive_saturated(Algebra::pa, bounds));
  }
  throw std::invalid_argument("unknown algebra");
}

AtomTables derive_saturated(Algebra alg, GridBounds bounds) {
  if (alg == Algebra::cpa) return derive_tables(alg, bounds);
  AtomTables small = derive_tables(alg, bounds);
  AtomTables large = derive_tables(alg, {bounds.dir + 1, bounds.offset + 1});
  std::vector<std::string> grown = diff_tables(large, small);
  if (!grown.empty())
    throw DerivationError("grid derivation did not saturate; first entry: " +
                          grown.front());
  if (small.identity_diag() != large.identity_diag() ||
      small.identity_comp() != large.identity_comp())
    throw DerivationError("grid derivation did not saturate on identities");
  return small;
}

std::vector<std::string> validate_tables(const AtomTables& stored,
                                         GridBounds bounds) {
  AtomTables derived = derive_saturated(stored.algebra(), bounds);
  std::vector<std::string> out = diff_tables(derived, stored);
  std::string tag(algebra_tag(stored.algebra()));
  if (derived.identity_diag() != stored.identity_diag())
    out.push_back(tag + " identity_diag = " +
                  derived.format(derived.identity_diag()) + "  (found " +
                  stored.format(stored.identity_diag()) + ")");
  if (derived.identity_comp() != stored.identity_comp())
    out.push_back(tag + " identity_comp = " +
                  derived.format(derived.identity_comp()) + "  (found " +
                  stored.format(stored.identity_comp()) + ")");
  return out;
}

std::string dump_algebra(const AtomTables& t) {
  if (t.algebra() == Algebra::ta) return dump_tables(t, ta_composition_groups());
  return dump_tables(t);
}

}  // namespace dlines
