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

// dlines: tables, solving, realization, classification and translation.
//
// Exit status: 0 success, consistent or unknown; 1 inconsistent; 2 usage
// or parse error; 3 internal error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "dlines/csp_file.hpp"
#include "dlines/derive.hpp"
#include "dlines/geometry.hpp"
#include "dlines/pa.hpp"
#include "dlines/realize.hpp"

namespace {

using namespace dlines;

constexpr int kOk = 0;
constexpr int kInconsistent = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  bool json = false;
  bool stats = false;
  std::uint64_t seed = 1;
  bool seed_given = false;
  int grid = 2;
  std::string output;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const Flags& flags, const std::string& text) {
  if (flags.output.empty() || flags.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(flags.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + flags.output);
  out << text;
}

Algebra parse_algebra(const std::string& tag) {
  auto alg = algebra_from_tag(tag);
  if (!alg) throw UsageError("unknown algebra " + tag);
  return *alg;
}

GridBounds bounds(const Flags& flags) { return {flags.grid, flags.grid + 1}; }

int cmd_tables(const Flags& flags, const std::string& action, const std::string& tag) {
  const Algebra alg = parse_algebra(tag);
  if (action == "dump") {
    write_output(flags, dump_algebra(tables_for(alg)));
    return kOk;
  }
  if (action == "derive") {
    write_output(flags, dump_algebra(derive_saturated(alg, bounds(flags))));
    return kOk;
  }
  if (action == "validate") {
    std::vector<std::string> diff = validate_tables(tables_for(alg), bounds(flags));
    std::string text;
    for (const std::string& d : diff) text += d + "\n";
    text += diff.empty() ? "ok " + tag + "\n" : std::to_string(diff.size()) + " differences\n";
    write_output(flags, text);
    return diff.empty() ? kOk : kInconsistent;
  }
  throw UsageError("unknown tables action " + action);
}

int status_code(const ResultDocument& d) {
  return d.status == "inconsistent" ? kInconsistent : kOk;
}

std::string render(const Flags& flags, const ResultDocument& d) {
  return flags.json ? to_json(d).dump(2) + "\n" : to_text(d);
}

int cmd_solve(const Flags& flags, const std::string& path, const std::string& mode,
              std::int64_t node_limit) {
  CspFile f = parse_csp_file(read_input(path));
  SolveOptions opt;
  if (mode == "propagate") {
    opt.mode = SolveMode::propagate;
  } else if (mode == "search") {
    opt.mode = SolveMode::search;
  } else {
    throw UsageError("unknown mode " + mode);
  }
  opt.stats = flags.stats;
  if (flags.seed_given) opt.seed = flags.seed;
  opt.node_limit = node_limit;
  ResultDocument d = solve_file(f, opt);
  write_output(flags, render(flags, d));
  return status_code(d);
}

int cmd_realize(const Flags& flags, const std::string& path, std::int64_t node_limit) {
  CspFile f = parse_csp_file(read_input(path));
  SolveOptions opt;
  opt.mode = SolveMode::search;
  opt.realize = true;
  opt.stats = flags.stats;
  opt.node_limit = node_limit;
  ResultDocument d = solve_file(f, opt);
  if (flags.json) {
    write_output(flags, render(flags, d));
  } else {
    std::string text = "# status " + d.status + "\n";
    if (!d.message.empty()) text += "# " + d.message + "\n";
    if (d.with_stats)
      for (const auto& [k, v] : d.stats)
        text += "# stat " + k + " " + std::to_string(v) + "\n";
    if (!d.scene.empty()) text += "scene\n";
    for (const auto& [var, line] : d.scene) text += line + " # " + var + "\n";
    write_output(flags, text);
  }
  if (d.status == "consistent" && d.scene.empty() && !f.vars.empty()) return kInternal;
  return status_code(d);
}

int cmd_classify(const Flags& flags, const std::string& path, const std::string& tag) {
  CspFile f = parse_csp_file(read_input(path));
  const Algebra alg = parse_algebra(tag);
  if (alg == Algebra::ta) throw UsageError("classification uses cyc, pa or cpa");
  const Scene& s = f.scene;
  const int n = static_cast<int>(s.size());
  const AtomTables& t = tables_for(alg);
  std::ostringstream out;
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (int i = 0; i < n; ++i)
    for (int k1 = 0; k1 < n; ++k1)
      for (int k2 = 0; k2 < n; ++k2) {
        AtomId a = alg == Algebra::cyc   ? classify_cyc(s[i], s[k1], s[k2])
                   : alg == Algebra::cpa ? classify_cpa(s[i], s[k1], s[k2])
                                         : classify_pa(s[i], s[k1], s[k2]);
        if (flags.json) {
          j.push_back({{"triple", {i + 1, k1 + 1, k2 + 1}}, {"atom", t.name(a)}});
        } else {
          out << "rel " << i + 1 << ' ' << k1 + 1 << ' ' << k2 + 1 << " = " << t.name(a)
              << '\n';
        }
      }
  write_output(flags, flags.json ? j.dump(2) + "\n" : out.str());
  return kOk;
}

int cmd_translate(const Flags& flags, const std::string& path) {
  CspFile f = parse_csp_file(read_input(path));
  TranslationResult tr = translate_file(f);
  if (tr.inconsistent) {
    write_output(flags, "# inconsistent: " + tr.reason + "\n");
    return kInconsistent;
  }
  write_output(flags, format_csp_file(tr.csp));
  return kOk;
}

int cmd_harvest(const Flags& flags, int lines) {
  if (lines < 1) throw UsageError("--lines must be positive");
  std::mt19937_64 rng(flags.seed);
  const std::vector<DLine> pool = grid_lines(flags.grid, flags.grid + 1);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  CspFile f;
  for (int v = 0; v < lines; ++v) {
    f.vars.push_back("x" + std::to_string(v + 1));
    f.scene.push_back(pool[pick(rng)]);
    f.scene_names.push_back(f.vars.back());
  }
  ConstraintMatrix m = harvest_matrix(f.scene, Algebra::cpa);
  std::string text = "vars";
  for (const std::string& v : f.vars) text += " " + v;
  text += "\n";
  for (const Triple& t : m.canonical_triples())
    text += "rel " + f.vars[t.i] + " " + f.vars[t.j] + " " + f.vars[t.k] + " : {" +
            m.tables().name(m.at(t).first()) + "}\n";
  text += "scene\n";
  for (int v = 0; v < lines; ++v) text += format_dline(f.scene[v]) + " # " + f.vars[v] + "\n";
  write_output(flags, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Qualitative reasoning over directed lines of the plane.");
  app.require_subcommand(1);
  Flags flags;
  auto common = [&](CLI::App* c) {
    c->add_flag("--json", flags.json, "JSON output");
    c->add_flag("--stats", flags.stats, "Add timing and search statistics");
    c->add_option("--seed", flags.seed, "Random seed")->each([&](const std::string&) {
      flags.seed_given = true;
    });
    c->add_option("--grid", flags.grid, "Direction bound of the derivation grid")
        ->check(CLI::Range(1, 8));
    c->add_option("-o,--output", flags.output, "Output file");
  };

  std::string action, tag = "pa", path = "-", mode = "propagate";
  std::int64_t node_limit = -1;
  int lines = 5;

  auto* tables = app.add_subcommand("tables", "Dump, derive or validate operation tables");
  tables->add_option("action", action, "dump, derive or validate")->required();
  tables->add_option("algebra", tag, "cyc, ta, pa or cpa")->required();
  common(tables);

  auto* solve = app.add_subcommand("solve", "Decide a CSP file");
  solve->add_option("file", path, "CSP file, - for standard input");
  solve->add_option("--mode", mode, "propagate or search");
  solve->add_option("--node-limit", node_limit, "Search node limit");
  common(solve);

  auto* realize = app.add_subcommand("realize", "Print lines satisfying a CSP file");
  realize->add_option("file", path, "CSP file, - for standard input");
  realize->add_option("--node-limit", node_limit, "Search node limit");
  common(realize);

  auto* classify = app.add_subcommand("classify", "List the atom of every ordered triple");
  classify->add_option("file", path, "Scene file, - for standard input");
  classify->add_option("--algebra", tag, "cyc, pa or cpa");
  common(classify);

  auto* translate = app.add_subcommand("translate", "Translate calculus sections");
  translate->add_option("file", path, "CSP file, - for standard input");
  common(translate);

  auto* harvest = app.add_subcommand("harvest", "Atomic network of a random grid scene");
  harvest->add_option("--lines", lines, "Number of lines");
  common(harvest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*tables) return cmd_tables(flags, action, tag);
    if (*solve) return cmd_solve(flags, path, mode, node_limit);
    if (*realize) return cmd_realize(flags, path, node_limit);
    if (*classify) return cmd_classify(flags, path, tag);
    if (*translate) return cmd_translate(flags, path);
    if (*harvest) return cmd_harvest(flags, lines);
  } catch (const CspParseError& e) {
    std::cerr << "dlines: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "dlines: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "dlines: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "dlines: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
