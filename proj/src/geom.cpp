#include "earmap/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace earmap {

Point2::Point2(double px, double py) : x(px), y(py) {
  if (!std::isfinite(px) || !std::isfinite(py))
    fail(ErrorCode::InvalidArgument, "point coordinates must be finite");
}

Point2 operator+(const Point2& p, const Vec2& v) { return Point2(p.x + v.x, p.y + v.y); }

Polygon::Polygon(std::vector<Point2> verts) : verts_(std::move(verts)) {
  if (verts_.size() < 3)
    fail(ErrorCode::InvalidArgument, "polygon needs at least 3 vertices, got " +
                                         std::to_string(verts_.size()));
  for (size_t i = 0; i < verts_.size(); ++i) {
    const size_t j = (i + 1) % verts_.size();
    if (verts_[i] == verts_[j])
      fail(ErrorCode::InvalidArgument,
           "consecutive duplicate vertex at index " + std::to_string(i));
  }
}

double Polygon::signed_area() const {
  double twice = 0.0;
  for (int i = 0; i < size(); ++i) {
    const Point2& a = verts_[static_cast<size_t>(i)];
    const Point2& b = verts_[static_cast<size_t>(next(i))];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

double Polygon::diameter() const {
  if (verts_.empty()) return 0.0;
  double xmin = verts_[0].x, xmax = verts_[0].x;
  double ymin = verts_[0].y, ymax = verts_[0].y;
  for (const Point2& p : verts_) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  if (orient2d(a, b, p) != Orientation::Collinear) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point2& p1, const Point2& q1, const Point2& p2, const Point2& q2) {
  const Orientation d1 = orient2d(p2, q2, p1);
  const Orientation d2 = orient2d(p2, q2, q1);
  const Orientation d3 = orient2d(p1, q1, p2);
  const Orientation d4 = orient2d(p1, q1, q2);

  if (d1 != Orientation::Collinear && d2 != Orientation::Collinear &&
      d3 != Orientation::Collinear && d4 != Orientation::Collinear)
    return d1 != d2 && d3 != d4;

  if (d1 == Orientation::Collinear && on_segment(p2, q2, p1)) return true;
  if (d2 == Orientation::Collinear && on_segment(p2, q2, q1)) return true;
  if (d3 == Orientation::Collinear && on_segment(p1, q1, p2)) return true;
  if (d4 == Orientation::Collinear && on_segment(p1, q1, q2)) return true;
  return false;
}

namespace detail {

bool point_in_ccw_triangle(const Point2& p, const Point2& a, const Point2& b, const Point2& c,
                           bool closed) {
  const Orientation oa = orient2d(a, b, p);
  const Orientation ob = orient2d(b, c, p);
  const Orientation oc = orient2d(c, a, p);
  if (oa == Orientation::CW || ob == Orientation::CW || oc == Orientation::CW) return false;
  if (closed) return true;
  return oa == Orientation::CCW && ob == Orientation::CCW && oc == Orientation::CCW;
}

}  // namespace detail

bool point_in_triangle(const Point2& p, const Point2& a, const Point2& b, const Point2& c,
                       bool closed) {
  switch (orient2d(a, b, c)) {
    case Orientation::CCW: break;
    case Orientation::Collinear:
      fail(ErrorCode::DegenerateTriangle, "triangle vertices are collinear");
    case Orientation::CW:
      fail(ErrorCode::InvalidArgument, "triangle must be ordered CCW");
  }
  return detail::point_in_ccw_triangle(p, a, b, c, closed);
}

bool is_simple(const Polygon& poly) {
  const int n = poly.size();
  for (int i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[poly.next(i)];
    for (int j = i + 1; j < n; ++j) {
      const Point2& c = poly[j];
      const Point2& d = poly[poly.next(j)];
      const bool share_b = poly.next(i) == j;
      const bool share_a = (i == 0 && j == n - 1);
      if (share_b || share_a) {
        // Consecutive edges: only an exact fold-back counts as a crossing.
        const Point2& hinge = share_b ? b : a;
        const Point2& arm1 = share_b ? a : b;
        const Point2& arm2 = share_b ? d : c;
        if (orient2d(arm1, hinge, arm2) == Orientation::Collinear &&
            (on_segment(arm1, hinge, arm2) || on_segment(hinge, arm2, arm1)))
          return false;
      } else {
        if (segments_intersect(a, b, c, d)) return false;
      }
    }
  }
  return true;
}

bool is_strictly_convex(const Polygon& poly) {
  const int n = poly.size();
  for (int i = 0; i < n; ++i) {
    if (orient2d(poly[poly.prev(i)], poly[i], poly[poly.next(i)]) != Orientation::CCW)
      return false;
  }
  // All-left-turn chains can still wind several times; one full turn of
  // summed exterior angles pins the winding (roundoff margin is ~2*pi).
  double turning = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2 u = poly[i] - poly[poly.prev(i)];
    const Vec2 w = poly[poly.next(i)] - poly[i];
    turning += std::atan2(cross(u, w), dot(u, w));
  }
  return std::lround(turning / (2.0 * std::numbers::pi)) == 1;
}

Orientation polygon_orientation(const Polygon& poly) {
  int lowest = 0;
  for (int i = 1; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[lowest];
    if (p.y < q.y || (p.y == q.y && p.x < q.x)) lowest = i;
  }
  return orient2d(poly[poly.prev(lowest)], poly[lowest], poly[poly.next(lowest)]);
}

Polygon normalize_ccw(const Polygon& poly) {
  switch (polygon_orientation(poly)) {
    case Orientation::CCW: return poly;
    case Orientation::CW: break;
    case Orientation::Collinear:
      fail(ErrorCode::DegenerateChain, "polygon is degenerate at its extreme vertex");
  }
  std::vector<Point2> rev;
  rev.reserve(static_cast<size_t>(poly.size()));
  rev.push_back(poly[0]);
  for (int i = poly.size() - 1; i >= 1; --i) rev.push_back(poly[i]);
  return Polygon(std::move(rev));
}

double interior_angle(const Point2& prev, const Point2& v, const Point2& next) {
  if (prev == v || v == next)
    fail(ErrorCode::InvalidArgument, "interior angle needs distinct neighbors");
  const Vec2 u = prev - v;
  const Vec2 w = next - v;
  switch (orient2d(prev, v, next)) {
    case Orientation::Collinear: return std::numbers::pi;
    case Orientation::CCW: return std::atan2(std::fabs(cross(u, w)), dot(u, w));
    case Orientation::CW: break;
  }
  return 2.0 * std::numbers::pi - std::atan2(std::fabs(cross(u, w)), dot(u, w));
}

}  // namespace earmap
