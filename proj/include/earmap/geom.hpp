#pragma once

#include <cmath>
#include <vector>

#include "earmap/errors.hpp"

namespace earmap {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

// Finite 2d point; construction rejects NaN and infinities.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2() = default;
  Point2(double px, double py);

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Vec2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator+(const Point2& p, const Vec2& v);
inline double distance(const Point2& a, const Point2& b) { return norm(a - b); }

enum class Orientation { CCW, CW, Collinear };

// Vertex triple by index into some vertex table, CCW when well-formed.
struct Triangle {
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

// Closed vertex chain: at least 3 vertices, consecutive vertices distinct.
// Simplicity and orientation are properties checked by the free functions
// below, not by the constructor.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Point2> verts);

  int size() const { return static_cast<int>(verts_.size()); }
  const Point2& operator[](int i) const { return verts_[static_cast<size_t>(i)]; }
  const std::vector<Point2>& vertices() const { return verts_; }

  int next(int i) const { return i + 1 == size() ? 0 : i + 1; }
  int prev(int i) const { return i == 0 ? size() - 1 : i - 1; }

  double signed_area() const;
  // Bounding-box diagonal; the scale used for relative tolerances.
  double diameter() const;

 private:
  std::vector<Point2> verts_;
};

// Exact sign of (b - a) x (c - a). Never wrong, regardless of coordinate
// magnitudes; the hot path is a single floating-point filter.
Orientation orient2d(const Point2& a, const Point2& b, const Point2& c);

// p on the closed segment [a, b] (exact).
bool on_segment(const Point2& a, const Point2& b, const Point2& p);

// Closed segments [p1,q1] and [p2,q2] share at least one point (exact).
bool segments_intersect(const Point2& p1, const Point2& q1, const Point2& p2, const Point2& q2);

// Membership of p in triangle (a, b, c), which must be strictly CCW.
// closed=true includes the boundary, closed=false is strict interior.
bool point_in_triangle(const Point2& p, const Point2& a, const Point2& b, const Point2& c,
                       bool closed);

// No two edges share a point except consecutive edges at their shared
// endpoint. O(n^2) exact segment tests.
bool is_simple(const Polygon& poly);

// Every consecutive vertex triple strictly CCW and total turning is one
// full turn (rules out multiply-wound chains). Implies is_simple.
bool is_strictly_convex(const Polygon& poly);

// Winding of a simple polygon, decided exactly at the bottom-most
// (then left-most) vertex. Collinear there means a degenerate chain.
Orientation polygon_orientation(const Polygon& poly);

// Returns the polygon in CCW winding, reversing if needed while keeping
// vertex 0 first. Idempotent. Degenerate chains are an error.
Polygon normalize_ccw(const Polygon& poly);

// Interior angle in (0, 2*pi) at v for the CCW chain prev -> v -> next:
// convex corners give values below pi, reflex above, straight exactly pi.
// The convex/reflex classification is exact; the value is floating.
double interior_angle(const Point2& prev, const Point2& v, const Point2& next);

namespace detail {

// Adaptive-precision determinant of [a-c; b-c]: sign always exact,
// magnitude approximate once the sign is certain.
double orient2d_det(const Point2& a, const Point2& b, const Point2& c);

// point_in_triangle without the precondition checks; (a, b, c) must be
// strictly CCW.
bool point_in_ccw_triangle(const Point2& p, const Point2& a, const Point2& b, const Point2& c,
                           bool closed);

}  // namespace detail

}  // namespace earmap
