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

// Exact geometry of directed lines with rational offsets, and the
// classification of line triples into atoms.
//
// A line with primitive direction d = (a, b) and offset q is the point set
// {p : n . p = q} with normal n = (-b, a). Its left half-plane is
// {p : n . p > q}.

#ifndef DLINES_GEOMETRY_HPP_
#define DLINES_GEOMETRY_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dlines/cyc.hpp"
#include "dlines/rational.hpp"
#include "dlines/relation.hpp"

namespace dlines {

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

class DLine {
 public:
  DLine() = default;
  /// The direction is reduced to a primitive vector; `offset` refers to
  /// the normal of the reduced direction.
  DLine(Direction dir, Rational offset);
  DLine(std::int64_t a, std::int64_t b, Rational offset);

  /// The line through p with direction d.
  static DLine through(const Point& p, Direction d);

  const Direction& dir() const { return dir_; }
  const Rational& offset() const { return offset_; }

  /// n . p - offset: positive on the left, zero on the line.
  Rational signed_distance(const Point& p) const;
  bool contains(const Point& p) const { return signed_distance(p).sign() == 0; }
  /// Some point of the line.
  Point anchor() const;
  /// The line with opposite direction and the same point set.
  DLine reversed() const;

  friend bool operator==(const DLine&, const DLine&) = default;

 private:
  Direction dir_{1, 0};
  Rational offset_;
};

using Scene = std::vector<DLine>;

bool parallel(const DLine& l1, const DLine& l2);
/// Same point set (either orientation).
bool coincide(const DLine& l1, const DLine& l2);

/// The offset of a line parallel to `ref` measured in `ref`'s frame, so
/// that it is left of ref iff the value exceeds ref.offset(). Throws
/// std::invalid_argument if the lines are not parallel.
Rational frame_offset(const DLine& ref, const DLine& par);

/// Intersection point, or nullopt for parallel lines.
std::optional<Point> intersect(const DLine& l1, const DLine& l2);

enum class Ordering { less, equal, greater };

/// Order of p and q along l. Throws std::invalid_argument if either point
/// is not on l.
Ordering order_along(const DLine& l, const Point& p, const Point& q);

/// Region 0..4 of a parallel line with offset q relative to the parallel
/// pair with offsets q1 (the reference) and q2, all in the reference frame.
int pp_region(const Rational& q1, const Rational& q2, const Rational& q);
/// Same, for lines: l2 and l3 must be parallel to l1.
int pp_region(const DLine& l1, const DLine& l2, const DLine& l3);

AtomId classify_cyc(const DLine& x, const DLine& y, const DLine& z);
AtomId classify_ta(const DLine& x, const DLine& y, const DLine& z);
AtomId classify_pa(const DLine& x, const DLine& y, const DLine& z);
AtomId classify_cpa(const DLine& x, const DLine& y, const DLine& z);

/// Primitive directions (a, b) with |a|, |b| <= bound, counterclockwise
/// from (1, 0).
std::vector<Direction> grid_directions(int bound);
/// Every grid direction with each integer offset in [-offset_bound,
/// offset_bound].
std::vector<DLine> grid_lines(int dir_bound, int offset_bound);

/// Calls f for every scene of k lines whose first line is the x axis and
/// whose other lines are grid lines. Stops early when f returns false.
void for_each_grid_scene(int k, int dir_bound, int offset_bound,
                         const std::function<bool(const Scene&)>& f);

std::string format_dline(const DLine& l);

}  // namespace dlines

#endif  // DLINES_GEOMETRY_HPP_
