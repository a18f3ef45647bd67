#include "earmap/offset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <unordered_map>

namespace earmap {

namespace {

int64_t directed_key(int u, int v) {
  return (static_cast<int64_t>(u) << 32) | static_cast<uint32_t>(v);
}

int64_t undirected_key(int u, int v) {
  return u < v ? directed_key(u, v) : directed_key(v, u);
}

// Vertex following i in the cyclic order of t. i must be a corner of t.
int successor_in(const Triangle& t, int i) {
  if (t.a == i) return t.b;
  if (t.b == i) return t.c;
  if (t.c == i) return t.a;
  fail(ErrorCode::InternalError, "vertex not in triangle");
}

std::vector<Triangle> band_connectivity(int n, const std::vector<int>& mult) {
  std::vector<int> start(static_cast<size_t>(n), 0);
  int total = 0;
  for (int i = 0; i < n; ++i) {
    start[static_cast<size_t>(i)] = n + total;
    total += mult[static_cast<size_t>(i)];
  }
  std::vector<Triangle> band;
  band.reserve(static_cast<size_t>(total + n));
  for (int i = 0; i < n; ++i) {
    const int s = start[static_cast<size_t>(i)];
    const int k = mult[static_cast<size_t>(i)];
    // Fan between consecutive inner points owned by vertex i.
    for (int j = 0; j + 1 < k; ++j) band.push_back({i, s + j + 1, s + j});
    // Quad over the outer edge (i, i+1), split by its diagonal.
    const int i1 = (i + 1 == n) ? 0 : i + 1;
    band.push_back({i, i1, s + k - 1});
    band.push_back({i1, start[static_cast<size_t>(i1)], s + k - 1});
  }
  return band;
}

// Guiding triangulation under refinement: polygon vertices first, then
// interior split points.
struct Scaffold {
  std::vector<Point2> verts;
  int boundary_count;
  std::vector<Triangle> tris;
};

// Splits the interior edge {eu, ev}, subdividing both incident triangles.
// The new vertex sits at the edge midpoint pulled slightly toward the mean
// of the two flanking apexes. Pure midpoints would make the offset samples
// of any triangle with two split edges exactly collinear ((3a+b)/4,
// (a+b+2c)/4, (b+3c)/4 differ by multiples of c-a), and the core earcut is
// then eventually forced to emit triangles of near-zero area. The pull is
// halved until all four subtriangles verify strictly CCW, falling back to
// the midpoint itself; symmetric quads keep the exact midpoint because the
// pull vector cancels to zero.
void split_edge(Scaffold& mesh, int eu, int ev) {
  const Point2 a = mesh.verts[static_cast<size_t>(eu)];
  const Point2 b = mesh.verts[static_cast<size_t>(ev)];

  std::vector<int> split_tris;
  for (size_t ti = 0; ti < mesh.tris.size(); ++ti) {
    const Triangle& t = mesh.tris[ti];
    const bool has_u = t.a == eu || t.b == eu || t.c == eu;
    const bool has_v = t.a == ev || t.b == ev || t.c == ev;
    if (has_u && has_v) split_tris.push_back(static_cast<int>(ti));
  }
  if (split_tris.size() != 2) fail(ErrorCode::InternalError, "split edge is not interior");

  // Rotate so the split edge is (t.b, t.c) and t.a is the apex.
  Triangle flank[2];
  for (int k = 0; k < 2; ++k) {
    Triangle t = mesh.tris[static_cast<size_t>(split_tris[k])];
    while (t.a == eu || t.a == ev) t = {t.b, t.c, t.a};
    flank[k] = t;
  }

  const Point2 m0(std::midpoint(a.x, b.x), std::midpoint(a.y, b.y));
  const Point2& apex0 = mesh.verts[static_cast<size_t>(flank[0].a)];
  const Point2& apex1 = mesh.verts[static_cast<size_t>(flank[1].a)];
  const Vec2 pull =
      Point2(std::midpoint(apex0.x, apex1.x), std::midpoint(apex0.y, apex1.y)) - m0;
  Point2 split_pt = m0;
  if (pull.x != 0.0 || pull.y != 0.0) {
    double scale = 0.25;
    for (int step = 0; step < 60; ++step, scale *= 0.5) {
      const Point2 cand(m0.x + scale * pull.x, m0.y + scale * pull.y);
      bool ok = true;
      for (const Triangle& t : flank) {
        const Point2& ap = mesh.verts[static_cast<size_t>(t.a)];
        const Point2& pb = mesh.verts[static_cast<size_t>(t.b)];
        const Point2& pc = mesh.verts[static_cast<size_t>(t.c)];
        if (orient2d(ap, pb, cand) != Orientation::CCW ||
            orient2d(ap, cand, pc) != Orientation::CCW) {
          ok = false;
          break;
        }
      }
      if (ok) {
        split_pt = cand;
        break;
      }
    }
  }

  const int mid = static_cast<int>(mesh.verts.size());
  mesh.verts.push_back(split_pt);
  for (int k = 0; k < 2; ++k) {
    mesh.tris[static_cast<size_t>(split_tris[k])] = {flank[k].a, flank[k].b, mid};
    mesh.tris.push_back({flank[k].a, mid, flank[k].c});
  }
}

// Refines until (1) no interior edge joins two boundary vertices and
// (2) every boundary vertex has an incident interior edge. Without (1)
// the two midpoint samples of a shared diagonal would coincide and the
// offset chain would touch itself. New edges always end at the new
// interior vertex, so neither condition can regress and the loop is
// bounded by the initial interior edge count plus one split per vertex.
void refine(Scaffold& mesh) {
  const int n = mesh.boundary_count;
  const int max_passes = 2 * n + 8;
  for (int pass = 0;; ++pass) {
    if (pass > max_passes) fail(ErrorCode::InternalError, "offset refinement did not converge");

    std::unordered_map<int64_t, int> edge_count;
    for (const Triangle& t : mesh.tris) {
      ++edge_count[undirected_key(t.a, t.b)];
      ++edge_count[undirected_key(t.b, t.c)];
      ++edge_count[undirected_key(t.c, t.a)];
    }

    int64_t diagonal = -1;
    std::vector<int> interior_incidence(static_cast<size_t>(n), 0);
    for (const auto& [key, count] : edge_count) {
      if (count != 2) continue;
      const int u = static_cast<int>(key >> 32);
      const int v = static_cast<int>(key & 0xffffffff);
      if (u < n && v < n && (diagonal < 0 || key < diagonal)) diagonal = key;
      if (u < n) ++interior_incidence[static_cast<size_t>(u)];
      if (v < n) ++interior_incidence[static_cast<size_t>(v)];
    }
    if (diagonal >= 0) {
      split_edge(mesh, static_cast<int>(diagonal >> 32),
                 static_cast<int>(diagonal & 0xffffffff));
      continue;
    }

    int deficient = -1;
    for (int i = 0; i < n; ++i)
      if (interior_incidence[static_cast<size_t>(i)] == 0) {
        deficient = i;
        break;
      }
    if (deficient < 0) return;

    // A vertex with no interior edge sits in exactly one triangle; split
    // the edge opposite it and connect the midpoint across.
    int tri_at = -1;
    for (size_t ti = 0; ti < mesh.tris.size(); ++ti) {
      const Triangle& t = mesh.tris[ti];
      if (t.a == deficient || t.b == deficient || t.c == deficient) {
        if (tri_at >= 0) fail(ErrorCode::InternalError, "deficient vertex in two triangles");
        tri_at = static_cast<int>(ti);
      }
    }
    if (tri_at < 0) fail(ErrorCode::InternalError, "deficient vertex in no triangle");

    const int eu = successor_in(mesh.tris[static_cast<size_t>(tri_at)], deficient);
    const int ev = successor_in(mesh.tris[static_cast<size_t>(tri_at)], eu);
    split_edge(mesh, eu, ev);
  }
}

}  // namespace

OffsetResult topological_offset(const Polygon& poly, EarStrategy guide) {
  const int n = poly.size();
  if (n <= 3) fail(ErrorCode::TooFewVertices, "topological offset needs more than 3 vertices");

  Scaffold mesh{poly.vertices(), n, earcut_single(poly, guide)};
  refine(mesh);

  std::unordered_map<int64_t, int> tri_of;
  for (size_t ti = 0; ti < mesh.tris.size(); ++ti) {
    const Triangle& t = mesh.tris[ti];
    tri_of[directed_key(t.a, t.b)] = static_cast<int>(ti);
    tri_of[directed_key(t.b, t.c)] = static_cast<int>(ti);
    tri_of[directed_key(t.c, t.a)] = static_cast<int>(ti);
  }
  const auto tri_with = [&](int u, int v) {
    const auto it = tri_of.find(directed_key(u, v));
    if (it == tri_of.end()) fail(ErrorCode::InternalError, "missing directed edge");
    return it->second;
  };

  // Around each boundary vertex, the triangle fan from the incoming to the
  // outgoing boundary edge visits the incident interior edges in chain
  // order; the mesh topology fixes the order, no angles involved.
  std::vector<Point2> chain;
  std::vector<int> mult(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int t = tri_with(poly.prev(i), i);
    int w = successor_in(mesh.tris[static_cast<size_t>(t)], i);
    const int stop = poly.next(i);
    size_t guard = 0;
    while (w != stop) {
      if (++guard > mesh.tris.size())
        fail(ErrorCode::InternalError, "fan walk did not close");
      const Point2& a = mesh.verts[static_cast<size_t>(i)];
      const Point2& b = mesh.verts[static_cast<size_t>(w)];
      chain.push_back(Point2(std::midpoint(a.x, b.x), std::midpoint(a.y, b.y)));
      ++mult[static_cast<size_t>(i)];
      t = tri_with(w, i);
      w = successor_in(mesh.tris[static_cast<size_t>(t)], i);
    }
    if (mult[static_cast<size_t>(i)] == 0)
      fail(ErrorCode::InternalError, "refinement left a vertex without interior edges");
  }

  return {Polygon(std::move(chain)), band_connectivity(n, mult), std::move(mult)};
}

OffsetResult geometric_offset(const Polygon& poly, const Disk& disk,
                              const std::vector<int>& multiplicities) {
  const int n = poly.size();
  if (static_cast<int>(multiplicities.size()) != n)
    fail(ErrorCode::MultiplicityMismatch,
         "expected " + std::to_string(n) + " multiplicities, got " +
             std::to_string(multiplicities.size()));
  for (int m : multiplicities)
    if (m < 1) fail(ErrorCode::MultiplicityMismatch, "multiplicities must be positive");
  if (!(disk.radius > 0.0)) fail(ErrorCode::InvalidArgument, "disk radius must be positive");

  const Point2& c = disk.center;
  for (int i = 0; i < n; ++i)
    if (poly[i] == c)
      fail(ErrorCode::DegenerateRay, "vertex " + std::to_string(i) + " coincides with the center");
  for (int i = 0; i < n; ++i) {
    const int j = poly.next(i);
    if (orient2d(c, poly[i], poly[j]) == Orientation::Collinear &&
        dot(poly[i] - c, poly[j] - c) > 0.0)
      fail(ErrorCode::AngleCollision, "vertices " + std::to_string(i) + " and " +
                                          std::to_string(j) + " share a ray from the center");
  }

  std::vector<double> angle(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Vec2 d = poly[i] - c;
    angle[static_cast<size_t>(i)] = std::atan2(d.y, d.x);
  }

  std::vector<Point2> chain;
  for (int i = 0; i < n; ++i) {
    const int j = poly.next(i);
    double arc = angle[static_cast<size_t>(j)] - angle[static_cast<size_t>(i)];
    if (arc < 0.0) arc += 2.0 * std::numbers::pi;
    if (arc == 0.0)
      fail(ErrorCode::AngleCollision, "vertices " + std::to_string(i) + " and " +
                                          std::to_string(j) +
                                          " collide at floating-point resolution");
    const Vec2 d = poly[i] - c;
    const double len = norm(d);
    chain.push_back(Point2(c.x + disk.radius * d.x / len, c.y + disk.radius * d.y / len));
    // Extras sample the open first half of the arc toward the next anchor.
    const int k = multiplicities[static_cast<size_t>(i)];
    for (int e = 1; e < k; ++e) {
      const double phi =
          angle[static_cast<size_t>(i)] + arc * static_cast<double>(e) / (2.0 * k);
      chain.push_back(Point2(c.x + disk.radius * std::cos(phi),
                             c.y + disk.radius * std::sin(phi)));
    }
  }

  return {Polygon(std::move(chain)), band_connectivity(n, multiplicities), multiplicities};
}

std::vector<Triangle> band_triangulate(const Polygon& outer, const Polygon& inner,
                                       const std::vector<int>& multiplicities) {
  const int n = outer.size();
  if (static_cast<int>(multiplicities.size()) != n)
    fail(ErrorCode::MultiplicityMismatch,
         "expected " + std::to_string(n) + " multiplicities, got " +
             std::to_string(multiplicities.size()));
  int total = 0;
  for (int m : multiplicities) {
    if (m < 1) fail(ErrorCode::MultiplicityMismatch, "multiplicities must be positive");
    total += m;
  }
  if (total != inner.size())
    fail(ErrorCode::MultiplicityMismatch, "multiplicities sum to " + std::to_string(total) +
                                              " but the inner polygon has " +
                                              std::to_string(inner.size()) + " vertices");
  return band_connectivity(n, multiplicities);
}

namespace {

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
  const Vec2 ab = b - a;
  const Vec2 ap = p - a;
  const double len2 = dot(ab, ab);
  const double t = len2 > 0.0 ? std::clamp(dot(ap, ab) / len2, 0.0, 1.0) : 0.0;
  return distance(p, Point2(a.x + t * ab.x, a.y + t * ab.y));
}

}  // namespace

std::vector<Point2> polygon_kernel(const Polygon& poly) {
  // Start from a box strictly containing the polygon and clip it by the
  // inward half-plane of every edge.
  double xmin = poly[0].x, xmax = poly[0].x, ymin = poly[0].y, ymax = poly[0].y;
  for (const Point2& p : poly.vertices()) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double pad = std::max(xmax - xmin, ymax - ymin) * 0.5 + 1.0;
  std::vector<Point2> region{Point2(xmin - pad, ymin - pad), Point2(xmax + pad, ymin - pad),
                             Point2(xmax + pad, ymax + pad), Point2(xmin - pad, ymax + pad)};

  for (int i = 0; i < poly.size(); ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[poly.next(i)];
    std::vector<Point2> clipped;
    clipped.reserve(region.size() + 1);
    for (size_t k = 0; k < region.size(); ++k) {
      const Point2& u = region[k];
      const Point2& v = region[(k + 1) % region.size()];
      const double du = detail::orient2d_det(a, b, u);
      const double dv = detail::orient2d_det(a, b, v);
      if (du >= 0.0) clipped.push_back(u);
      if ((du > 0.0 && dv < 0.0) || (du < 0.0 && dv > 0.0)) {
        const double t = du / (du - dv);
        clipped.push_back(Point2(u.x + t * (v.x - u.x), u.y + t * (v.y - u.y)));
      }
    }
    region = std::move(clipped);
    if (region.size() < 3) return {};
  }
  return region;
}

Disk auto_disk(const Polygon& poly, double shrink) {
  if (!(shrink > 0.0) || shrink >= 1.0)
    fail(ErrorCode::InvalidArgument, "shrink factor must lie in (0, 1)");
  const std::vector<Point2> kernel = polygon_kernel(poly);
  if (kernel.size() < 3) fail(ErrorCode::EmptyKernel, "polygon has an empty kernel");

  double twice_area = 0.0;
  double cx = 0.0, cy = 0.0;
  for (size_t i = 0; i < kernel.size(); ++i) {
    const Point2& a = kernel[i];
    const Point2& b = kernel[(i + 1) % kernel.size()];
    const double w = a.x * b.y - b.x * a.y;
    twice_area += w;
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  Point2 center;
  if (std::fabs(twice_area) > 1e-30) {
    center = Point2(cx / (3.0 * twice_area), cy / (3.0 * twice_area));
  } else {
    // Sliver kernel: fall back to the vertex mean, still inside the hull.
    for (const Point2& p : kernel) {
      center.x += p.x;
      center.y += p.y;
    }
    center.x /= static_cast<double>(kernel.size());
    center.y /= static_cast<double>(kernel.size());
  }

  double clearance = std::numeric_limits<double>::infinity();
  for (int i = 0; i < poly.size(); ++i)
    clearance = std::min(clearance, point_segment_distance(center, poly[i], poly[poly.next(i)]));
  const double radius = shrink * clearance;
  if (!(radius > 0.0)) fail(ErrorCode::EmptyKernel, "kernel collapsed to the boundary");
  return {center, radius};
}

}  // namespace earmap
