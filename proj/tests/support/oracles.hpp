#pragma once

// Test-side geometry oracles. Everything here is recomputed with exact
// rational arithmetic, fully independent of the library's adaptive
// predicates, so implementation and oracle can disagree only if one of
// them is wrong. Slow and simple on purpose.

#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "earmap/geom.hpp"

namespace oracle {

using rat = boost::multiprecision::cpp_rational;
using earmap::Point2;

inline rat cross3(const Point2& a, const Point2& b, const Point2& c) {
  return (rat(b.x) - rat(a.x)) * (rat(c.y) - rat(a.y)) -
         (rat(b.y) - rat(a.y)) * (rat(c.x) - rat(a.x));
}

// -1 clockwise, 0 collinear, +1 counterclockwise.
inline int orient_sign(const Point2& a, const Point2& b, const Point2& c) {
  const rat d = cross3(a, b, c);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

// p on the closed segment [a, b].
inline bool on_segment_closed(const Point2& a, const Point2& b, const Point2& p) {
  if (orient_sign(a, b, p) != 0) return false;
  const rat px(p.x), py(p.y);
  return std::min(rat(a.x), rat(b.x)) <= px && px <= std::max(rat(a.x), rat(b.x)) &&
         std::min(rat(a.y), rat(b.y)) <= py && py <= std::max(rat(a.y), rat(b.y));
}

// Do the closed segments [p1,q1] and [p2,q2] share at least one point.
inline bool segments_share_point(const Point2& p1, const Point2& q1, const Point2& p2,
                                 const Point2& q2) {
  const int d1 = orient_sign(p2, q2, p1);
  const int d2 = orient_sign(p2, q2, q1);
  const int d3 = orient_sign(p1, q1, p2);
  const int d4 = orient_sign(p1, q1, q2);
  if (d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0) return d1 != d2 && d3 != d4;
  if (d1 == 0 && on_segment_closed(p2, q2, p1)) return true;
  if (d2 == 0 && on_segment_closed(p2, q2, q1)) return true;
  if (d3 == 0 && on_segment_closed(p1, q1, p2)) return true;
  if (d4 == 0 && on_segment_closed(p1, q1, q2)) return true;
  return false;
}

// Chain simplicity: no two non-adjacent edges share a point, adjacent
// edges meet only at their common vertex, no zero-length edges.
inline bool simple_chain(const std::vector<Point2>& v) {
  const int n = static_cast<int>(v.size());
  if (n < 3) return false;
  for (int i = 0; i < n; ++i)
    if (v[static_cast<size_t>(i)] == v[static_cast<size_t>((i + 1) % n)]) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Point2& a = v[static_cast<size_t>(i)];
      const Point2& b = v[static_cast<size_t>((i + 1) % n)];
      const Point2& c = v[static_cast<size_t>(j)];
      const Point2& d = v[static_cast<size_t>((j + 1) % n)];
      if (j == i + 1) {
        // Hinge at b == c: offends only when the edges fold back over
        // each other (collinear and pointing the same way from b).
        if (orient_sign(b, a, d) == 0) {
          const rat fold = (rat(a.x) - rat(b.x)) * (rat(d.x) - rat(b.x)) +
                           (rat(a.y) - rat(b.y)) * (rat(d.y) - rat(b.y));
          if (fold > 0) return false;
        }
        continue;
      }
      if (i == 0 && j == n - 1) {
        // Hinge at a == d, same fold-back rule.
        if (orient_sign(a, b, c) == 0) {
          const rat fold = (rat(b.x) - rat(a.x)) * (rat(c.x) - rat(a.x)) +
                           (rat(b.y) - rat(a.y)) * (rat(c.y) - rat(a.y));
          if (fold > 0) return false;
        }
        continue;
      }
      if (segments_share_point(a, b, c, d)) return false;
    }
  }
  return true;
}

// Twice the signed area, exact.
inline rat area2(const std::vector<Point2>& v) {
  rat twice = 0;
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % n];
    twice += rat(a.x) * rat(b.y) - rat(b.x) * rat(a.y);
  }
  return twice;
}

inline bool in_triangle_closed(const Point2& p, const Point2& a, const Point2& b,
                               const Point2& c) {
  const int s1 = orient_sign(a, b, p);
  const int s2 = orient_sign(b, c, p);
  const int s3 = orient_sign(c, a, p);
  return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

inline bool on_boundary(const Point2& p, const std::vector<Point2>& poly) {
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i)
    if (on_segment_closed(poly[i], poly[(i + 1) % n], p)) return true;
  return false;
}

// Even-odd ray crossing with exact intersection abscissae; boundary
// points are handled by the caller via on_boundary.
inline bool in_polygon_strict(const Point2& p, const std::vector<Point2>& poly) {
  if (on_boundary(p, poly)) return false;
  const rat px(p.x), py(p.y);
  bool inside = false;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    const rat ay(a.y), by(b.y);
    if ((ay > py) == (by > py)) continue;
    const rat xi = rat(a.x) + (py - ay) * (rat(b.x) - rat(a.x)) / (by - ay);
    if (xi > px) inside = !inside;
  }
  return inside;
}

// Ear validity at front vertex i against the live vertices: strictly
// convex corner and no other live vertex inside the closed ear triangle.
inline bool valid_ear_brute(const std::vector<Point2>& poly, const std::vector<int>& live,
                            int prev, int i, int next) {
  const Point2& a = poly[static_cast<size_t>(prev)];
  const Point2& b = poly[static_cast<size_t>(i)];
  const Point2& c = poly[static_cast<size_t>(next)];
  if (orient_sign(a, b, c) <= 0) return false;
  for (int v : live) {
    if (v == prev || v == i || v == next) continue;
    if (in_triangle_closed(poly[static_cast<size_t>(v)], a, b, c)) return false;
  }
  return true;
}

}  // namespace oracle
