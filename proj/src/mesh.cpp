#include "earmap/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace earmap {

CompatibleMeshPair::CompatibleMeshPair(std::vector<Point2> verts_a, std::vector<Point2> verts_b,
                                       std::vector<Triangle> tris, std::vector<int> boundary)
    : verts_a_(std::move(verts_a)),
      verts_b_(std::move(verts_b)),
      tris_(std::move(tris)),
      boundary_(std::move(boundary)) {
  if (verts_a_.size() != verts_b_.size())
    fail(ErrorCode::SizeMismatch, "embeddings have different vertex counts");
  const int n = static_cast<int>(verts_a_.size());
  for (const Triangle& t : tris_) {
    const bool in_range = t.a >= 0 && t.a < n && t.b >= 0 && t.b < n && t.c >= 0 && t.c < n;
    if (!in_range || t.a == t.b || t.b == t.c || t.a == t.c)
      fail(ErrorCode::InvalidArgument, "malformed triangle index");
  }
  for (int b : boundary_)
    if (b < 0 || b >= n) fail(ErrorCode::InvalidArgument, "boundary index out of range");
}

Polygon CompatibleMeshPair::boundary_polygon(Side s) const {
  const std::vector<Point2>& v = verts(s);
  std::vector<Point2> chain;
  chain.reserve(boundary_.size());
  for (int b : boundary_) chain.push_back(v[static_cast<size_t>(b)]);
  return Polygon(std::move(chain));
}

ValidationError::ValidationError(ValidationReport report)
    : Error(ErrorCode::ValidationFailed,
            std::to_string(report.flipped_a.size() + report.degenerate_a.size()) + " bad in A, " +
                std::to_string(report.flipped_b.size() + report.degenerate_b.size()) +
                " bad in B"),
      report_(std::move(report)) {}

ValidationReport validate(const CompatibleMeshPair& pair) {
  ValidationReport report;
  const std::vector<Point2>& va = pair.verts(Side::A);
  const std::vector<Point2>& vb = pair.verts(Side::B);
  for (size_t ti = 0; ti < pair.tris().size(); ++ti) {
    const Triangle& t = pair.tris()[ti];
    switch (orient2d(va[static_cast<size_t>(t.a)], va[static_cast<size_t>(t.b)],
                     va[static_cast<size_t>(t.c)])) {
      case Orientation::CCW: break;
      case Orientation::CW: report.flipped_a.push_back(static_cast<int>(ti)); break;
      case Orientation::Collinear: report.degenerate_a.push_back(static_cast<int>(ti)); break;
    }
    switch (orient2d(vb[static_cast<size_t>(t.a)], vb[static_cast<size_t>(t.b)],
                     vb[static_cast<size_t>(t.c)])) {
      case Orientation::CCW: break;
      case Orientation::CW: report.flipped_b.push_back(static_cast<int>(ti)); break;
      case Orientation::Collinear: report.degenerate_b.push_back(static_cast<int>(ti)); break;
    }
  }
  report.valid = report.flipped_a.empty() && report.flipped_b.empty() &&
                 report.degenerate_a.empty() && report.degenerate_b.empty();
  return report;
}

BarycentricLocation locate(const CompatibleMeshPair& pair, Side side, const Point2& p) {
  const std::vector<Point2>& v = pair.verts(side);
  for (size_t ti = 0; ti < pair.tris().size(); ++ti) {
    const Triangle& t = pair.tris()[ti];
    const Point2& a = v[static_cast<size_t>(t.a)];
    const Point2& b = v[static_cast<size_t>(t.b)];
    const Point2& c = v[static_cast<size_t>(t.c)];
    if (!detail::point_in_ccw_triangle(p, a, b, c, true)) continue;
    const double full = cross(b - a, c - a);
    double wa = cross(b - p, c - p) / full;
    double wb = cross(c - p, a - p) / full;
    double wc = cross(a - p, b - p) / full;
    wa = std::max(wa, 0.0);
    wb = std::max(wb, 0.0);
    wc = std::max(wc, 0.0);
    const double sum = wa + wb + wc;
    return {static_cast<int>(ti), {wa / sum, wb / sum, wc / sum}};
  }
  fail(ErrorCode::OutsideDomain, "point lies in no triangle of the requested side");
}

Point2 map_point(const CompatibleMeshPair& pair, Side from, const Point2& p) {
  const BarycentricLocation loc = locate(pair, from, p);
  const std::vector<Point2>& v = pair.verts(from == Side::A ? Side::B : Side::A);
  const Triangle& t = pair.tris()[static_cast<size_t>(loc.tri)];
  const Point2& a = v[static_cast<size_t>(t.a)];
  const Point2& b = v[static_cast<size_t>(t.b)];
  const Point2& c = v[static_cast<size_t>(t.c)];
  return Point2(loc.weights[0] * a.x + loc.weights[1] * b.x + loc.weights[2] * c.x,
                loc.weights[0] * a.y + loc.weights[1] * b.y + loc.weights[2] * c.y);
}

StretchReport l2_stretch(const CompatibleMeshPair& pair, MapDirection dir) {
  const Side src = dir == MapDirection::AtoB ? Side::A : Side::B;
  const Side dst = dir == MapDirection::AtoB ? Side::B : Side::A;
  const std::vector<Point2>& vs = pair.verts(src);
  const std::vector<Point2>& vd = pair.verts(dst);

  StretchReport report;
  report.per_tri.reserve(pair.tris().size());
  for (size_t ti = 0; ti < pair.tris().size(); ++ti) {
    const Triangle& t = pair.tris()[ti];
    const Point2& s0 = vs[static_cast<size_t>(t.a)];
    const Vec2 u = vs[static_cast<size_t>(t.b)] - s0;
    const Vec2 v = vs[static_cast<size_t>(t.c)] - s0;
    if (orient2d(vs[static_cast<size_t>(t.a)], vs[static_cast<size_t>(t.b)],
                 vs[static_cast<size_t>(t.c)]) == Orientation::Collinear)
      fail(ErrorCode::DegenerateSourceTriangle,
           "triangle " + std::to_string(ti) + " is degenerate on the source side");
    const Point2& d0 = vd[static_cast<size_t>(t.a)];
    const Vec2 p = vd[static_cast<size_t>(t.b)] - d0;
    const Vec2 q = vd[static_cast<size_t>(t.c)] - d0;
    // J = [p q] * [u v]^-1; the stretch is ||J||_F / sqrt(2).
    const double det = cross(u, v);
    const double j11 = (p.x * v.y - q.x * u.y) / det;
    const double j12 = (q.x * u.x - p.x * v.x) / det;
    const double j21 = (p.y * v.y - q.y * u.y) / det;
    const double j22 = (q.y * u.x - p.y * v.x) / det;
    report.per_tri.push_back(
        std::sqrt((j11 * j11 + j12 * j12 + j21 * j21 + j22 * j22) / 2.0));
  }

  if (report.per_tri.empty()) return report;
  report.min = *std::min_element(report.per_tri.begin(), report.per_tri.end());
  report.max = *std::max_element(report.per_tri.begin(), report.per_tri.end());
  double sum = 0.0;
  for (double s : report.per_tri) sum += s;
  report.mean = sum / static_cast<double>(report.per_tri.size());

  constexpr double kTiny = 1e-300;
  report.log_min = std::log10(std::max(report.min, kTiny));
  report.log_max = std::log10(std::max(report.max, kTiny));
  const double span = report.log_max - report.log_min;
  const int bins = static_cast<int>(report.log_histogram.size());
  for (double s : report.per_tri) {
    int bin = 0;
    if (span > 0.0) {
      const double w = (std::log10(std::max(s, kTiny)) - report.log_min) / span;
      bin = std::clamp(static_cast<int>(w * bins), 0, bins - 1);
    }
    ++report.log_histogram[static_cast<size_t>(bin)];
  }
  return report;
}

CompatibleMeshPair merge(const CompatibleMeshPair& core) { return core; }

CompatibleMeshPair merge(const Polygon& outer_a, const Polygon& outer_b,
                         const std::vector<Triangle>& band, const CompatibleMeshPair& core,
                         const std::vector<int>& core_to_merged) {
  const int n = outer_a.size();
  const int m = core.vertex_count();
  if (outer_b.size() != n) fail(ErrorCode::SizeMismatch, "outer polygons differ in size");
  if (static_cast<int>(core_to_merged.size()) != m)
    fail(ErrorCode::IndexMapMismatch, "index map size does not match core vertex count");
  std::vector<char> taken(static_cast<size_t>(m), 0);
  for (int target : core_to_merged) {
    if (target < n || target >= n + m)
      fail(ErrorCode::IndexMapMismatch, "index map target outside the inner slot range");
    if (taken[static_cast<size_t>(target - n)]++)
      fail(ErrorCode::IndexMapMismatch, "index map target used twice");
  }

  std::vector<Point2> va(static_cast<size_t>(n + m));
  std::vector<Point2> vb(static_cast<size_t>(n + m));
  for (int i = 0; i < n; ++i) {
    va[static_cast<size_t>(i)] = outer_a[i];
    vb[static_cast<size_t>(i)] = outer_b[i];
  }
  for (int k = 0; k < m; ++k) {
    va[static_cast<size_t>(core_to_merged[static_cast<size_t>(k)])] =
        core.verts(Side::A)[static_cast<size_t>(k)];
    vb[static_cast<size_t>(core_to_merged[static_cast<size_t>(k)])] =
        core.verts(Side::B)[static_cast<size_t>(k)];
  }

  std::vector<Triangle> tris = band;
  tris.reserve(band.size() + core.tris().size());
  for (const Triangle& t : core.tris())
    tris.push_back({core_to_merged[static_cast<size_t>(t.a)],
                    core_to_merged[static_cast<size_t>(t.b)],
                    core_to_merged[static_cast<size_t>(t.c)]});

  std::vector<int> boundary(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) boundary[static_cast<size_t>(i)] = i;
  return CompatibleMeshPair(std::move(va), std::move(vb), std::move(tris), std::move(boundary));
}

}  // namespace earmap
