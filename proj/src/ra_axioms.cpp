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

#include "dlines/ra_axioms.hpp"

#include <functional>
#include <sstream>

namespace dlines {

bool RaReport::all_passed() const {
  for (const auto& a : axioms)
    if (!a.passed) return false;
  return true;
}

std::string RaReport::str() const {
  std::ostringstream os;
  for (const auto& a : axioms) {
    os << (a.passed ? "pass " : "FAIL ") << a.name << " [atoms "
       << a.atom_checks << ", samples " << a.sample_checks << "]";
    if (!a.passed) os << ": " << a.counterexample;
    os << '\n';
  }
  return os.str();
}

Relation random_relation(Algebra alg, std::mt19937_64& rng) {
  const int n = universe_size(alg);
  // Half of the samples are small, the rest have a uniform size.
  int size = (rng() & 1) ? static_cast<int>(rng() % 4)
                         : static_cast<int>(rng() % (n + 1));
  Relation r(alg);
  while (r.size() < size) r.insert(static_cast<AtomId>(rng() % n));
  return r;
}

namespace {

class Checker {
 public:
  Checker(const AtomTables& t, int samples, std::uint64_t seed)
      : t_(t), samples_(samples), rng_(seed) {}

  RaReport run() {
    const int n = t_.size();
    auto A = [&](AtomId a) { return Relation::atom(t_.algebra(), a); };
    auto conv = [&](const Relation& r) { return converse(r, t_); };
    auto rot = [&](const Relation& r) { return rotate(r, t_); };
    auto comp = [&](const Relation& r, const Relation& s) {
      return t_.compose(r, s);
    };

    start("associativity");
    for (AtomId a = 0; a < n && ok(); ++a)
      for (AtomId b = 0; b < n && ok(); ++b) {
        Relation ab = comp(A(a), A(b));
        for (AtomId c = 0; c < n && ok(); ++c)
          atom_check(comp(ab, A(c)) == comp(A(a), comp(A(b), A(c))),
                     {A(a), A(b), A(c)});
      }
    sample3([&](const Relation& r, const Relation& s, const Relation& u) {
      return comp(comp(r, s), u) == comp(r, comp(s, u));
    });

    start("composition distributes over union");
    sample3([&](const Relation& r, const Relation& s, const Relation& u) {
      return comp(r | s, u) == (comp(r, u) | comp(s, u)) &&
             comp(u, r | s) == (comp(u, r) | comp(u, s));
    });

    start("identity");
    for (AtomId a = 0; a < n && ok(); ++a)
      atom_check(comp(A(a), t_.identity_comp()) == A(a) &&
                     comp(t_.identity_comp(), A(a)) == A(a),
                 {A(a)});
    sample1([&](const Relation& r) {
      return comp(r, t_.identity_comp()) == r &&
             comp(t_.identity_comp(), r) == r;
    });

    start("converse is an involution");
    for (AtomId a = 0; a < n && ok(); ++a) atom_check(conv(conv(A(a))) == A(a), {A(a)});
    sample1([&](const Relation& r) { return conv(conv(r)) == r; });

    start("converse distributes over union");
    sample2([&](const Relation& r, const Relation& s) {
      return conv(r | s) == (conv(r) | conv(s));
    });

    start("converse of a composition");
    for (AtomId a = 0; a < n && ok(); ++a)
      for (AtomId b = 0; b < n && ok(); ++b)
        atom_check(conv(comp(A(a), A(b))) == comp(conv(A(b)), conv(A(a))),
                   {A(a), A(b)});
    sample2([&](const Relation& r, const Relation& s) {
      return conv(comp(r, s)) == comp(conv(s), conv(r));
    });

    start("Peircean law");
    for (AtomId a = 0; a < n && ok(); ++a)
      for (AtomId b = 0; b < n && ok(); ++b)
        atom_check((comp(conv(A(a)), ~comp(A(a), A(b))) & A(b)).is_empty(),
                   {A(a), A(b)});
    sample2([&](const Relation& r, const Relation& s) {
      return (comp(conv(r), ~comp(r, s)) & s).is_empty();
    });

    start("rotation has period three");
    for (AtomId a = 0; a < n && ok(); ++a)
      atom_check(rot(rot(rot(A(a)))) == A(a), {A(a)});
    sample1([&](const Relation& r) { return rot(rot(rot(r))) == r; });

    start("rotation distributes over union");
    sample2([&](const Relation& r, const Relation& s) {
      return rot(r | s) == (rot(r) | rot(s));
    });

    return report_;
  }

 private:
  void start(const std::string& name) {
    report_.axioms.push_back({name, true, 0, 0, {}});
  }
  AxiomResult& cur() { return report_.axioms.back(); }
  bool ok() { return cur().passed; }

  void fail(const std::vector<Relation>& args) {
    cur().passed = false;
    std::string s;
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) s += " ";
      s += t_.format(args[i]);
    }
    cur().counterexample = s;
  }

  void atom_check(bool holds, const std::vector<Relation>& args) {
    ++cur().atom_checks;
    if (!holds) fail(args);
  }

  void sample1(const std::function<bool(const Relation&)>& f) {
    for (int i = 0; i < samples_ && ok(); ++i) {
      Relation r = random_relation(t_.algebra(), rng_);
      ++cur().sample_checks;
      if (!f(r)) fail({r});
    }
  }
  void sample2(const std::function<bool(const Relation&, const Relation&)>& f) {
    for (int i = 0; i < samples_ && ok(); ++i) {
      Relation r = random_relation(t_.algebra(), rng_);
      Relation s = random_relation(t_.algebra(), rng_);
      ++cur().sample_checks;
      if (!f(r, s)) fail({r, s});
    }
  }
  void sample3(const std::function<bool(const Relation&, const Relation&,
                                        const Relation&)>& f) {
    for (int i = 0; i < samples_ && ok(); ++i) {
      Relation r = random_relation(t_.algebra(), rng_);
      Relation s = random_relation(t_.algebra(), rng_);
      Relation u = random_relation(t_.algebra(), rng_);
      ++cur().sample_checks;
      if (!f(r, s, u)) fail({r, s, u});
    }
  }

  const AtomTables& t_;
  int samples_;
  std::mt19937_64 rng_;
  RaReport report_;
};

}  // namespace

RaReport check_ra_axioms(const AtomTables& t, int samples, std::uint64_t seed) {
  return Checker(t, samples, seed).run();
}

}  // namespace dlines
