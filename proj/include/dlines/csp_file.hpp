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

// CSP files and result documents.
//
//   # comment
//   vars la1 la2 la3
//   rel la1 la2 la3 : {cc_eq:rlr}
//   scene
//   dline 1 0 0 # la1
//   freksa: f6 a b c
//   dipole:
//   A lrrl B
//   dint: x b= y
//   rect: P Q (before, during)
//
// Atoms in `rel` lines are combined names (cc_lt:rrl), coarse names
// (*:rrl), or bare orientation or translation atoms standing for their
// embeddings. A tagged section keyword with nothing after it applies to
// the following lines up to the next keyword.

#ifndef DLINES_CSP_FILE_HPP_
#define DLINES_CSP_FILE_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dlines/csp.hpp"
#include "dlines/geometry.hpp"
#include "dlines/translators.hpp"
#include "json.hpp"

namespace dlines {

class CspParseError : public std::runtime_error {
 public:
  CspParseError(int line, const std::string& msg);
  int line() const { return line_; }

 private:
  int line_;
};

struct DipoleItem {
  std::string a, rel, b;  // rel: one letter (point b) or a four-letter word
};

struct DintItem {
  std::string x, rel, y;
};

struct RectItem {
  std::string p, q, rx, ry;
};

struct CspFile {
  std::vector<std::string> vars;
  std::vector<Constraint> constraints;  // combined-algebra relations
  Scene scene;
  std::vector<std::string> scene_names;  // empty string when unnamed
  std::vector<FreksaConstraint> freksa;
  std::vector<DipoleItem> dipole;
  std::vector<DintItem> dint;
  std::vector<RectItem> rect;

  bool has_calculus() const {
    return !freksa.empty() || !dipole.empty() || !dint.empty() || !rect.empty();
  }
  int var_index(const std::string& name) const;  // -1 if absent
};

/// Throws CspParseError with a 1-based line number.
CspFile parse_csp_file(std::string_view text);

/// `vars` and `rel` lines, then the scene if any. Relations print with
/// orientation or translation names when they are plain embeddings.
std::string format_csp_file(const CspFile& f);
std::string format_pa_relation(const Relation& pa_rel);

/// Replaces the calculus sections by their translation. Variables and
/// constraints already in the file are kept. Throws std::invalid_argument
/// for unknown relation names.
struct TranslationResult {
  CspFile csp;
  bool inconsistent = false;  // detected while merging double-cross points
  std::string reason;
};
TranslationResult translate_file(const CspFile& f);

/// cpa if every constraint is expressible there, else pa.
Algebra choose_algebra(const CspFile& f);

enum class SolveMode { propagate, search };

struct SolveOptions {
  SolveMode mode = SolveMode::propagate;
  bool realize = false;
  bool stats = false;
  std::optional<std::uint64_t> seed;  // shuffles propagation
  std::int64_t node_limit = -1;
};

struct ResultEntry {
  std::string a, b, c;
  std::vector<std::string> atoms;
};

struct ResultDocument {
  std::string status;  // consistent, inconsistent or unknown
  std::string algebra;
  std::string mode;
  bool scenario = false;  // every entry atomic
  std::vector<ResultEntry> entries;
  std::vector<std::pair<std::string, std::string>> scene;  // var, dline
  std::string message;
  std::vector<std::pair<std::string, std::int64_t>> stats;
  bool with_stats = false;
};

ResultDocument solve_file(const CspFile& f, const SolveOptions& opt);
std::string to_text(const ResultDocument& d);
nlohmann::ordered_json to_json(const ResultDocument& d);

}  // namespace dlines

#endif  // DLINES_CSP_FILE_HPP_
