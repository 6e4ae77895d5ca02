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

#include "dlines/csp_file.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "dlines/cyc.hpp"
#include "dlines/pa.hpp"
#include "dlines/realize.hpp"
#include "dlines/ta.hpp"

namespace dlines {

CspParseError::CspParseError(int line, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

int CspFile::var_index(const std::string& name) const {
  auto it = std::find(vars.begin(), vars.end(), name);
  return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

namespace {

std::vector<std::string> split(std::string_view s, std::string_view seps = " \t\r") {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && seps.find(s[i]) != std::string_view::npos) ++i;
    size_t j = i;
    while (j < s.size() && seps.find(s[j]) == std::string_view::npos) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

enum class Section { none, scene, freksa, dipole, dint, rect };

class Parser {
 public:
  CspFile run(std::string_view text) {
    int line = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line;
      line_ = line;
      handle(text.substr(pos, end - pos));
      pos = end + 1;
    }
    return std::move(f_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw CspParseError(line_, msg); }

  void handle(std::string_view raw) {
    std::string comment;
    size_t hash = raw.find('#');
    if (hash != std::string_view::npos) {
      comment = std::string(trim(raw.substr(hash + 1)));
      raw = raw.substr(0, hash);
    }
    std::string_view s = trim(raw);
    if (s.empty()) return;
    std::vector<std::string> tok = split(s);
    const std::string& head = tok[0];
    auto rest = [&] { return trim(s.substr(head.size())); };
    if (head == "vars") {
      section_ = Section::none;
      for (size_t i = 1; i < tok.size(); ++i) {
        if (f_.var_index(tok[i]) >= 0) fail("duplicate variable " + tok[i]);
        f_.vars.push_back(tok[i]);
      }
    } else if (head == "rel") {
      section_ = Section::none;
      rel(s);
    } else if (head == "scene") {
      if (tok.size() != 1) fail("scene takes no arguments");
      section_ = Section::scene;
    } else if (head == "dline") {
      dline(tok, comment);
    } else if (head == "freksa:" || head == "dipole:" || head == "dint:" ||
               head == "rect:") {
      Section sec = head == "freksa:"   ? Section::freksa
                    : head == "dipole:" ? Section::dipole
                    : head == "dint:"   ? Section::dint
                                        : Section::rect;
      section_ = sec;
      if (tok.size() > 1) item(sec, rest());
    } else if (section_ != Section::none && section_ != Section::scene) {
      item(section_, s);
    } else {
      fail("unexpected '" + head + "'");
    }
  }

  void rel(std::string_view s) {
    size_t open = s.find('{'), close = s.rfind('}');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
      fail("expected 'rel a b c : {atoms}'");
    if (!trim(s.substr(close + 1)).empty()) fail("text after '}'");
    std::vector<std::string> head = split(s.substr(0, open));
    if (head.size() == 4 && head[3].size() > 1 && head[3].back() == ':') {
      head[3].pop_back();
      head.push_back(":");
    }
    if (head.size() != 5 || head[4] != ":") fail("expected 'rel a b c : {atoms}'");
    std::array<int, 3> v{};
    for (int t = 0; t < 3; ++t) {
      v[t] = f_.var_index(head[t + 1]);
      if (v[t] < 0) fail("undeclared variable " + head[t + 1]);
    }
    Relation r = Relation::empty(Algebra::pa);
    for (const std::string& atom : split(s.substr(open + 1, close - open - 1), " \t,")) {
      try {
        r = r | parse_pa_atom_token(atom);
      } catch (const std::exception& e) {
        fail(e.what());
      }
    }
    f_.constraints.push_back({v[0], v[1], v[2], r});
  }

  void dline(const std::vector<std::string>& tok, const std::string& name) {
    if (tok.size() != 4) fail("expected 'dline a b offset'");
    try {
      std::int64_t a = std::stoll(tok[1]), b = std::stoll(tok[2]);
      if (a == 0 && b == 0) fail("zero direction");
      f_.scene.emplace_back(a, b, Rational::parse(tok[3]));
    } catch (const CspParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(std::string("malformed dline: ") + e.what());
    }
    f_.scene_names.push_back(name);
  }

  void item(Section sec, std::string_view s) {
    std::vector<std::string> tok = split(s);
    switch (sec) {
      case Section::freksa: {
        if (tok.size() != 4) fail("expected '<relation> a b c'");
        auto r = freksa_from_name(tok[0]);
        if (!r) fail("unknown double-cross relation " + tok[0]);
        f_.freksa.push_back({tok[1], tok[2], tok[3], *r});
        return;
      }
      case Section::dipole: {
        if (tok.size() != 3) fail("expected 'A <relation> B'");
        if (tok[1].size() != 1 && tok[1].size() != 4)
          fail("dipole relations are one letter or four letters");
        for (char c : tok[1])
          if (std::string_view("lbsiefr").find(c) == std::string_view::npos)
            fail("invalid dipole relation " + tok[1]);
        f_.dipole.push_back({tok[0], tok[1], tok[2]});
        return;
      }
      case Section::dint: {
        if (tok.size() != 3) fail("expected 'x <relation> y'");
        if (!dint_word(tok[1])) fail("unknown directed-interval relation " + tok[1]);
        f_.dint.push_back({tok[0], tok[1], tok[2]});
        return;
      }
      case Section::rect: {
        size_t open = s.find('('), close = s.rfind(')');
        if (open == std::string_view::npos || close == std::string_view::npos ||
            close < open)
          fail("expected 'P Q (rx, ry)'");
        std::vector<std::string> names = split(s.substr(0, open));
        std::vector<std::string> rels = split(s.substr(open + 1, close - open - 1), " \t,");
        if (names.size() != 2 || rels.size() != 2) fail("expected 'P Q (rx, ry)'");
        for (const std::string& r : rels)
          if (!allen_from_name(r)) fail("unknown Allen relation " + r);
        f_.rect.push_back({names[0], names[1], rels[0], rels[1]});
        return;
      }
      default:
        fail("no section");
    }
  }

  CspFile f_;
  Section section_ = Section::none;
  int line_ = 0;
};

}  // namespace

CspFile parse_csp_file(std::string_view text) { return Parser().run(text); }

std::string format_pa_relation(const Relation& r) {
  Relation cyc = pa_project_cyc(r);
  if (!r.is_empty() && embed_cyc(cyc) == r) return cyct_tables().format(cyc);
  Relation ta = pa_project_ta(r);
  if (!r.is_empty() && embed_ta(ta) == r) return ta_tables().format(ta);
  return pa_tables().format(r);
}

std::string format_csp_file(const CspFile& f) {
  std::ostringstream out;
  out << "vars";
  for (const std::string& v : f.vars) out << ' ' << v;
  out << '\n';
  for (const Constraint& c : f.constraints)
    out << "rel " << f.vars[c.i] << ' ' << f.vars[c.j] << ' ' << f.vars[c.k] << " : "
        << format_pa_relation(c.rel) << '\n';
  if (!f.scene.empty()) {
    out << "scene\n";
    for (size_t i = 0; i < f.scene.size(); ++i) {
      out << format_dline(f.scene[i]);
      if (i < f.scene_names.size() && !f.scene_names[i].empty())
        out << " # " << f.scene_names[i];
      out << '\n';
    }
  }
  return out.str();
}

TranslationResult translate_file(const CspFile& f) {
  TranslationResult out;
  FreksaTranslation ft = translate_freksa(f.freksa);
  if (ft.inconsistent) {
    out.inconsistent = true;
    out.reason = ft.reason;
    return out;
  }
  Translator& t = ft.translator;
  auto point = [&](const std::string& p) {
    auto it = ft.representative.find(p);
    return it == ft.representative.end() ? p : it->second;
  };
  for (const DipoleItem& d : f.dipole) {
    if (d.rel.size() == 1) {
      t.dipole_point(d.a, point(d.b), d.rel[0]);
    } else {
      t.dipole_dipole(d.a, d.b, d.rel);
    }
  }
  for (const DintItem& d : f.dint) t.directed_interval(d.x, d.rel, d.y);
  for (const RectItem& r : f.rect) t.rectangle(r.p, r.q, r.rx, r.ry);

  CspBuilder& b = t.csp();
  std::vector<int> map;
  for (const std::string& v : f.vars) map.push_back(b.var(v));
  for (const Constraint& c : f.constraints) b.add(map[c.i], map[c.j], map[c.k], c.rel);
  out.csp.vars = b.names();
  out.csp.constraints = b.constraints();
  return out;
}

Algebra choose_algebra(const CspFile& f) {
  for (const Constraint& c : f.constraints)
    if (!cpa_expressible(c.rel)) return Algebra::pa;
  return Algebra::cpa;
}

namespace {

ResultDocument make_document(const CspFile& f, Algebra alg, const ConstraintMatrix* m,
                             const SolveOptions& opt) {
  ResultDocument d;
  d.algebra = std::string(algebra_tag(alg));
  d.mode = opt.mode == SolveMode::search ? "search" : "propagate";
  d.with_stats = opt.stats;
  if (!m) return d;
  d.scenario = m->all_atomic();
  const int n = m->size();
  const ConstraintMatrix fresh(alg, n);
  for (const Triple& t : m->canonical_triples()) {
    const Relation& r = m->at(t);
    if (r == fresh.at(t)) continue;
    ResultEntry e{f.vars[t.i], f.vars[t.j], f.vars[t.k], {}};
    r.for_each([&](AtomId a) { e.atoms.emplace_back(m->tables().name(a)); });
    d.entries.push_back(std::move(e));
  }
  return d;
}

void add_scene(ResultDocument& d, const CspFile& f, const Scene& scene) {
  for (size_t v = 0; v < scene.size(); ++v)
    d.scene.emplace_back(f.vars[v], format_dline(scene[v]));
}

}  // namespace

namespace {

struct ComponentSearch {
  SearchStatus status = SearchStatus::found;
  Scene scene;
  SearchStats stats;
  int components = 0;
};

// Variables tied together by constraints other than the universal one.
std::vector<std::vector<int>> components(int n, const std::vector<Constraint>& cs) {
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto join = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  const Relation universal = pa_tables().universal();
  for (const Constraint& c : cs) {
    if (c.rel == universal) continue;
    join(c.i, c.j);
    join(c.i, c.k);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

// Without constraints between components any union of their models is a
// model, so each component is searched on its own.
ComponentSearch search_components(Algebra alg, int n, const std::vector<Constraint>& cs,
                                  std::int64_t node_limit) {
  ComponentSearch out;
  out.scene.assign(n, DLine());
  std::vector<int> local(n, -1);
  for (const std::vector<int>& comp : components(n, cs)) {
    ++out.components;
    for (size_t v = 0; v < comp.size(); ++v) local[comp[v]] = static_cast<int>(v);
    std::vector<Constraint> sub;
    for (const Constraint& c : cs)
      if (local[c.i] >= 0 && local[c.j] >= 0 && local[c.k] >= 0)
        sub.push_back({local[c.i], local[c.j], local[c.k], c.rel});
    for (int v : comp) local[v] = -1;
    auto m = matrix_from_constraints(alg, static_cast<int>(comp.size()), sub);
    if (!m) {
      out.status = SearchStatus::exhausted;
      return out;
    }
    SearchOptions so;
    if (node_limit >= 0) so.node_limit = std::max<std::int64_t>(0, node_limit - out.stats.nodes);
    so.accept = [](const ConstraintMatrix& x) { return extract_model(x).ok; };
    SearchOutcome r = ic_sa(std::move(*m), so);
    out.stats.nodes += r.stats.nodes;
    out.stats.backtracks += r.stats.backtracks;
    out.stats.rejected_leaves += r.stats.rejected_leaves;
    out.stats.propagation.quadruples += r.stats.propagation.quadruples;
    out.stats.propagation.revisions += r.stats.propagation.revisions;
    if (r.status != SearchStatus::found) {
      out.status = r.status;
      return out;
    }
    const Scene part = extract_model(*r.scenario).realization.scene;
    for (size_t v = 0; v < comp.size(); ++v) out.scene[comp[v]] = part[v];
  }
  return out;
}

}  // namespace

ResultDocument solve_file(const CspFile& input, const SolveOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  CspFile translated;
  const CspFile* fp = &input;
  if (input.has_calculus()) {
    TranslationResult tr = translate_file(input);
    if (tr.inconsistent) {
      ResultDocument d = make_document(input, Algebra::pa, nullptr, opt);
      d.status = "inconsistent";
      d.message = tr.reason;
      return d;
    }
    translated = std::move(tr.csp);
    fp = &translated;
  }
  const CspFile& f = *fp;
  const Algebra alg = choose_algebra(f);
  const int n = static_cast<int>(f.vars.size());
  std::optional<ConstraintMatrix> m0 = matrix_from_constraints(alg, n, f.constraints);
  std::vector<std::pair<std::string, std::int64_t>> stats;
  ResultDocument d;
  if (!m0) {
    d = make_document(f, alg, nullptr, opt);
    d.status = "inconsistent";
    d.message = "a constraint has an empty relation";
  } else if (opt.mode == SolveMode::propagate) {
    PropagationOptions po;
    po.shuffle_seed = opt.seed;
    PropagationOutcome p = ic_pa(std::move(*m0), po);
    stats = {{"quadruples", p.stats.quadruples}, {"revisions", p.stats.revisions}};
    if (p.status == PropagationStatus::inconsistent) {
      d = make_document(f, alg, nullptr, opt);
      d.status = "inconsistent";
      d.message = "an entry became empty";
    } else {
      d = make_document(f, alg, &p.matrix, opt);
      d.status = "unknown";
      if (p.matrix.all_atomic()) {
        ExtractResult x = extract_model(p.matrix);
        if (x.ok) {
          d.status = "consistent";
          if (opt.realize) add_scene(d, f, x.realization.scene);
        } else {
          d.message = x.failure;
        }
      } else if (opt.realize) {
        d.message = "propagation left non-atomic entries";
      }
    }
  } else {
    ComponentSearch s = search_components(alg, n, f.constraints, opt.node_limit);
    stats = {{"nodes", s.stats.nodes},
             {"backtracks", s.stats.backtracks},
             {"rejected_leaves", s.stats.rejected_leaves},
             {"quadruples", s.stats.propagation.quadruples},
             {"revisions", s.stats.propagation.revisions},
             {"components", s.components}};
    if (s.status == SearchStatus::found) {
      if (!check_solution(*m0, s.scene).ok)
        throw std::logic_error("component scenes violate the network");
      ConstraintMatrix scenario = harvest_matrix(s.scene, alg);
      d = make_document(f, alg, &scenario, opt);
      d.status = "consistent";
      if (opt.realize) add_scene(d, f, s.scene);
    } else {
      d = make_document(f, alg, nullptr, opt);
      d.status = s.status == SearchStatus::exhausted ? "inconsistent" : "unknown";
      if (s.status == SearchStatus::limit) d.message = "node limit reached";
    }
  }
  if (opt.stats) {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    stats.emplace_back("variables", n);
    stats.emplace_back("elapsed_us", us);
    d.stats = std::move(stats);
  }
  return d;
}

std::string to_text(const ResultDocument& d) {
  std::ostringstream out;
  out << "status " << d.status << '\n';
  out << "algebra " << d.algebra << '\n';
  out << "mode " << d.mode << '\n';
  out << "scenario " << (d.scenario ? "yes" : "no") << '\n';
  for (const ResultEntry& e : d.entries) {
    out << "entry " << e.a << ' ' << e.b << ' ' << e.c << " = {";
    for (size_t i = 0; i < e.atoms.size(); ++i) out << (i ? ", " : "") << e.atoms[i];
    out << "}\n";
  }
  for (const auto& [var, line] : d.scene) out << line << " # " << var << '\n';
  if (!d.message.empty()) out << "message " << d.message << '\n';
  if (d.with_stats)
    for (const auto& [k, v] : d.stats) out << "stat " << k << ' ' << v << '\n';
  return out.str();
}

nlohmann::ordered_json to_json(const ResultDocument& d) {
  nlohmann::ordered_json j;
  j["status"] = d.status;
  j["algebra"] = d.algebra;
  j["mode"] = d.mode;
  j["scenario"] = d.scenario;
  j["entries"] = nlohmann::ordered_json::array();
  for (const ResultEntry& e : d.entries)
    j["entries"].push_back({{"vars", {e.a, e.b, e.c}}, {"atoms", e.atoms}});
  j["scene"] = nlohmann::ordered_json::array();
  for (const auto& [var, line] : d.scene)
    j["scene"].push_back({{"var", var}, {"dline", line}});
  if (!d.message.empty()) j["message"] = d.message;
  if (d.with_stats) {
    nlohmann::ordered_json s = nlohmann::ordered_json::object();
    for (const auto& [k, v] : d.stats) s[k] = v;
    j["stats"] = s;
  }
  return j;
}

}  // namespace dlines
