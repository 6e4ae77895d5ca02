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

#include "dlines/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dlines/pa.hpp"
#include "dlines/ta.hpp"

namespace dlines {

DLine::DLine(Direction dir, Rational offset)
    : dir_(make_direction(dir.a, dir.b)), offset_(std::move(offset)) {}

DLine::DLine(std::int64_t a, std::int64_t b, Rational offset)
    : DLine(Direction{a, b}, std::move(offset)) {}

DLine DLine::through(const Point& p, Direction d) {
  d = make_direction(d.a, d.b);
  return DLine(d, Rational(-d.b) * p.x + Rational(d.a) * p.y);
}

Rational DLine::signed_distance(const Point& p) const {
  return Rational(-dir_.b) * p.x + Rational(dir_.a) * p.y - offset_;
}

Point DLine::anchor() const {
  Rational n2(dir_.a * dir_.a + dir_.b * dir_.b);
  return {Rational(-dir_.b) * offset_ / n2, Rational(dir_.a) * offset_ / n2};
}

DLine DLine::reversed() const { return DLine(opposite(dir_), -offset_); }

bool parallel(const DLine& l1, const DLine& l2) {
  return cross_sign(l1.dir(), l2.dir()) == 0;
}

bool coincide(const DLine& l1, const DLine& l2) {
  return parallel(l1, l2) && frame_offset(l1, l2) == l1.offset();
}

Rational frame_offset(const DLine& ref, const DLine& par) {
  if (!parallel(ref, par))
    throw std::invalid_argument("frame_offset of non-parallel lines");
  return ref.dir() == par.dir() ? par.offset() : -par.offset();
}

std::optional<Point> intersect(const DLine& l1, const DLine& l2) {
  const Direction& d1 = l1.dir();
  const Direction& d2 = l2.dir();
  std::int64_t det = d1.a * d2.b - d2.a * d1.b;
  if (det == 0) return std::nullopt;
  const Rational& c1 = l1.offset();
  const Rational& c2 = l2.offset();
  Rational x = (c1 * Rational(d2.a) - c2 * Rational(d1.a)) / Rational(det);
  Rational y = (c1 * Rational(d2.b) - c2 * Rational(d1.b)) / Rational(det);
  return Point{x, y};
}

Ordering order_along(const DLine& l, const Point& p, const Point& q) {
  if (!l.contains(p) || !l.contains(q))
    throw std::invalid_argument("order_along: point not on the line");
  Rational s = Rational(l.dir().a) * (q.x - p.x) + Rational(l.dir().b) * (q.y - p.y);
  if (s.sign() > 0) return Ordering::less;
  if (s.sign() < 0) return Ordering::greater;
  return Ordering::equal;
}

int pp_region(const Rational& q1, const Rational& q2, const Rational& q) {
  if (q2 > q1) {
    if (q > q2) return 0;
    if (q == q2) return 1;
    if (q > q1) return 2;
    if (q == q1) return 3;
    return 4;
  }
  if (q2 == q1) {
    if (q > q1) return 0;
    if (q == q1) return 1;
    return 2;
  }
  if (q > q1) return 0;
  if (q == q1) return 1;
  if (q > q2) return 2;
  if (q == q2) return 3;
  return 4;
}

int pp_region(const DLine& l1, const DLine& l2, const DLine& l3) {
  return pp_region(l1.offset(), frame_offset(l1, l2), frame_offset(l1, l3));
}

AtomId classify_cyc(const DLine& x, const DLine& y, const DLine& z) {
  return cyct_classify(x.dir(), y.dir(), z.dir());
}

namespace {

char side_char(const DLine& ref, const DLine& par) {
  Rational q = frame_offset(ref, par);
  if (q > ref.offset()) return 'l';
  if (q == ref.offset()) return 'c';
  return 'r';
}

}  // namespace

AtomId classify_ta(const DLine& x, const DLine& y, const DLine& z) {
  auto py = intersect(x, y);
  auto pz = intersect(x, z);
  std::string name;
  if (py && pz) {
    switch (order_along(x, *py, *pz)) {
      case Ordering::less:
        return ta_atom("cc_lt");
      case Ordering::equal:
        return ta_atom("cc_eq");
      case Ordering::greater:
        return ta_atom("cc_gt");
    }
  }
  if (py) return ta_atom(std::string("cp_") + side_char(x, z));
  if (pz) return ta_atom(std::string("pc_") + side_char(x, y));
  int region = pp_region(x, y, z);
  return ta_atom(std::string("pp_") + side_char(x, y) +
                 static_cast<char>('0' + region));
}

AtomId classify_pa(const DLine& x, const DLine& y, const DLine& z) {
  auto a = pa_atom(classify_ta(x, y, z), classify_cyc(x, y, z));
  if (!a) throw std::logic_error("incompatible classification components");
  return *a;
}

AtomId classify_cpa(const DLine& x, const DLine& y, const DLine& z) {
  return coarsen_atom(classify_pa(x, y, z));
}

std::vector<Direction> grid_directions(int bound) {
  if (bound < 1) throw std::invalid_argument("direction bound must be >= 1");
  std::vector<Direction> out;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      if ((a != 0 || b != 0) && std::gcd(a, b) == 1) out.push_back({a, b});
  auto half = [](const Direction& d) { return d.b < 0 || (d.b == 0 && d.a < 0); };
  std::sort(out.begin(), out.end(), [&](const Direction& p, const Direction& q) {
    if (half(p) != half(q)) return !half(p);
    return cross_sign(p, q) > 0;
  });
  return out;
}

std::vector<DLine> grid_lines(int dir_bound, int offset_bound) {
  if (offset_bound < 0) throw std::invalid_argument("negative offset bound");
  std::vector<DLine> out;
  for (const Direction& d : grid_directions(dir_bound))
    for (int q = -offset_bound; q <= offset_bound; ++q) out.emplace_back(d, q);
  return out;
}

void for_each_grid_scene(int k, int dir_bound, int offset_bound,
                         const std::function<bool(const Scene&)>& f) {
  if (k < 1) throw std::invalid_argument("scene needs at least one line");
  const std::vector<DLine> lines = grid_lines(dir_bound, offset_bound);
  Scene scene(k);
  scene[0] = DLine(1, 0, 0);
  std::vector<size_t> idx(k, 0);
  if (k == 1) {
    f(scene);
    return;
  }
  for (int i = 1; i < k; ++i) scene[i] = lines[0];
  while (true) {
    if (!f(scene)) return;
    int i = k - 1;
    while (i >= 1 && ++idx[i] == lines.size()) {
      idx[i] = 0;
      scene[i] = lines[0];
      --i;
    }
    if (i < 1) return;
    scene[i] = lines[idx[i]];
  }
}

std::string format_dline(const DLine& l) {
  return "dline " + std::to_string(l.dir().a) + " " + std::to_string(l.dir().b) +
         " " + l.offset().str();
}

}  // namespace dlines
