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

// Encodings into networks over lines: incidence geometry, polygons, the
// "across" schema, a coarse subset of the double-cross calculus, dipoles,
// directed intervals and rectangles.
//
// A point P is the crossing of two lines P_1, P_2 with P_2 cutting P_1
// from the left. Lines not named by the caller are called
// aux_<purpose>_<n>.

#ifndef DLINES_TRANSLATORS_HPP_
#define DLINES_TRANSLATORS_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlines/csp.hpp"

namespace dlines {

/// Named variables and constraints over combined-algebra relations.
class CspBuilder {
 public:
  /// The variable called `name`, created on first use.
  int var(const std::string& name);
  std::optional<int> find(const std::string& name) const;
  /// A new variable aux_<purpose>_<n>.
  int fresh(const std::string& purpose);
  void add(int i, int j, int k, const Relation& pa_rel);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::map<std::string, int> counters_;
  std::vector<Constraint> constraints_;
};

/// Relations used by the encodings, all in the combined algebra.
Relation concurrent_rel();     // {cc_eq, cp_c, pc_c}, lines through one point
Relation point_pair_rel();     // {<cp_c, lre>}
Relation oriented_pair_rel();  // {cc_lt, cp_c, pc_c, pp_c1}

struct PointRepr {
  int l1, l2;
};

struct SegmentRepr {
  int l1, l2, l3;
};

/// Creates name_1 and name_2 with {<cp_c, lre>}(name_1, name_2, name_1).
PointRepr add_point(CspBuilder& b, const std::string& name);
/// {cc_eq, cp_c, pc_c}(l, P_1, P_2).
void incident(CspBuilder& b, const PointRepr& p, int l);
/// {pp_l0, pp_l1, pp_c0, pp_c1, pp_c2, pp_r3, pp_r4}(la, lb, lc).
void between_dlines(CspBuilder& b, int la, int lb, int lc);
/// Large betweenness of P2 with respect to P1 and P3, through four fresh
/// lines.
void between_points(CspBuilder& b, const PointRepr& p1, const PointRepr& p2,
                    const PointRepr& p3);
/// Three fresh lines, two crossing the first at distinct points.
void non_collinear(CspBuilder& b, const PointRepr& p1, const PointRepr& p2,
                   const PointRepr& p3);
/// Creates name_1..name_3 with {<cc_gt, lor>}(name_1, name_2, name_3).
SegmentRepr add_segment(CspBuilder& b, const std::string& name);
/// {<cc_lt,rll>, <cc_lt,rol>, <cc_lt,rrl>}(l_{i+1}, l_i, l_{i+2}) for each
/// i, indices cyclic. Throws std::invalid_argument for fewer than three
/// lines.
void convex_polygon(CspBuilder& b, const std::vector<int>& lines);
/// F crosses the ribbon between g1 and g2 (g2 left of g1).
void across(CspBuilder& b, const SegmentRepr& f, int g1, int g2);

/// Coarse double-cross relations of C with respect to A, B.
enum class FreksaRel { fl, f6, f7, f8, f9, f10, fr, T };
/// fl, f6, ..., fr, T.
std::string_view freksa_name(FreksaRel r);
std::optional<FreksaRel> freksa_from_name(std::string_view s);

/// A line of the translated network, possibly used against its
/// orientation.
struct LineRef {
  int var;
  bool reversed;
};

/// Points, the lines joining them and the encodings built on top.
class Translator {
 public:
  /// With strict_order the order constraint of a pair line is stated for
  /// all four pairs of point lines instead of (P_1, Q_1) and (P_2, Q_2)
  /// only. The two-pair form admits models where both points are
  /// anywhere on the line, for instance when P_2 and Q_1 both coincide
  /// with it.
  explicit Translator(bool strict_order = true) : strict_order_(strict_order) {}

  CspBuilder& csp() { return csp_; }
  const CspBuilder& csp() const { return csp_; }

  PointRepr point(const std::string& name);
  bool has_point(const std::string& name) const { return points_.count(name) > 0; }
  const std::map<std::string, PointRepr>& points() const { return points_; }

  /// The line through p and q used from p to q. It is created on first use,
  /// oriented from p, with the incidence and order constraints of both
  /// points.
  LineRef pair_line(const std::string& p, const std::string& q,
                    const std::string& name = "");

  /// fl, f6, f8, f10 and fr on points A, B, C through LineRefs; f7, f9 and
  /// T are rejected with std::invalid_argument (see translate_freksa).
  void freksa(FreksaRel r, const std::string& a, const std::string& b,
              const std::string& c);

  struct Dipole {
    std::string s, e;  // endpoint names
    int line;          // oriented from s to e
  };
  /// Dipole `name` with endpoints s_<name>, e_<name> and line l_<name>.
  const Dipole& dipole(const std::string& name);
  const std::map<std::string, Dipole>& dipoles() const { return dipoles_; }
  /// One of l, b, s, i, e, f, r; anything else throws
  /// std::invalid_argument.
  void dipole_point(const std::string& a, const std::string& p, char rel);
  /// A R1R2R3R4 B: A R1 s_B, A R2 e_B, B R3 s_A, B R4 e_A.
  void dipole_dipole(const std::string& a, const std::string& b,
                     std::string_view word);

  /// Directed intervals on the line l_Renz, any orientation.
  void directed_interval(const std::string& x, std::string_view rel,
                         const std::string& y);

  /// Rectangle projections are directed intervals <P>_x and <P>_y on the
  /// carriers l_X and l_Y, oriented like them.
  void rectangle(const std::string& p, const std::string& q, std::string_view rx,
                 std::string_view ry);

 private:
  void emit_cyc(std::string_view atom, LineRef x, LineRef y, LineRef z);
  void on_carrier(int carrier, const std::string& interval, bool same_orientation);

  bool strict_order_;
  CspBuilder csp_;
  std::map<std::string, PointRepr> points_;
  struct PairLine {
    int var;
    std::string from;  // the line points from this endpoint
  };
  std::map<std::pair<std::string, std::string>, PairLine> pair_lines_;
  std::map<std::string, Dipole> dipoles_;
  std::map<std::pair<int, std::string>, bool> carried_;
};

/// The 26 base relations of directed intervals as dipole words.
struct DintRow {
  std::string_view name;  // e.g. "b=" or "mb!="
  std::string_view word;
};
const std::array<DintRow, 26>& dint_table();
std::optional<std::string_view> dint_word(std::string_view rel);

/// Allen's thirteen relations and the directed-interval relation each
/// becomes when both intervals point along the axis.
enum class Allen {
  before, meets, overlaps, starts, during, finishes, equals,
  after, met_by, overlapped_by, started_by, contains, finished_by
};
std::string_view allen_name(Allen a);
/// Accepts long names (met-by) and symbols (<, m, o, s, d, f, eq, >, mi,
/// oi, si, di, fi).
std::optional<Allen> allen_from_name(std::string_view s);
std::string_view allen_to_dint(Allen a);

struct FreksaConstraint {
  std::string a, b, c;
  FreksaRel rel;
};

struct FreksaTranslation {
  bool inconsistent = false;  // found while eliminating equal variables
  std::string reason;
  /// Each input point to the point that represents it after merging.
  std::map<std::string, std::string> representative;
  Translator translator;
};

/// Merges the variables that {f7} and {f9} force to be equal, then emits
/// the translation for the remaining points: one line per pair of points,
/// two per point, and the relation constraints.
FreksaTranslation translate_freksa(const std::vector<FreksaConstraint>& constraints,
                                   bool strict_order = true);

}  // namespace dlines

#endif  // DLINES_TRANSLATORS_HPP_
