#include "doctest.h"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "earmap/earcut.hpp"
#include "earmap/errors.hpp"
#include "earmap/generators.hpp"
#include "earmap/mesh.hpp"
#include "earmap/offset.hpp"
#include "support/oracles.hpp"

using namespace earmap;

namespace {

std::vector<int> iota_boundary(int n) {
  std::vector<int> b(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) b[static_cast<size_t>(i)] = i;
  return b;
}

std::vector<Point2> square_pts() {
  return {Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1)};
}

// Barycentric weights of p in triangle (a, b, c), plain Cramer solve.
std::array<double, 3> bary_of(const Point2& p, const Point2& a, const Point2& b,
                              const Point2& c) {
  const double det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  const double l1 = ((b.x - p.x) * (c.y - p.y) - (c.x - p.x) * (b.y - p.y)) / det;
  const double l2 = ((c.x - p.x) * (a.y - p.y) - (a.x - p.x) * (c.y - p.y)) / det;
  return {l1, l2, 1.0 - l1 - l2};
}

}  // namespace

TEST_CASE("validate certifies legal pairs and localizes damage") {
  const Polygon a = gen_splat(7, 24, 0.7, 0.6);
  const Polygon b = gen_circle(24);
  const CompatibleMeshPair good = earcut_compatible(a, b);
  const ValidationReport ok = validate(good);
  CHECK(ok.valid);
  CHECK(ok.flipped_a.empty());
  CHECK(ok.flipped_b.empty());
  CHECK(ok.degenerate_a.empty());
  CHECK(ok.degenerate_b.empty());

  // One collinear triangle on the B side.
  {
    const std::vector<Triangle> tris{{0, 1, 2}, {0, 2, 3}};
    const std::vector<Point2> vb{Point2(0, 0), Point2(1, 0), Point2(2, 0), Point2(0, 1)};
    const CompatibleMeshPair pair(square_pts(), vb, tris, iota_boundary(4));
    const ValidationReport r = validate(pair);
    CHECK_FALSE(r.valid);
    CHECK(r.degenerate_b == std::vector<int>{0});
    CHECK(r.degenerate_a.empty());
    CHECK(r.flipped_a.empty());
  }

  // Two B vertices swapped flips at least one triangle.
  {
    std::vector<Point2> vb = square_pts();
    std::swap(vb[1], vb[2]);
    const std::vector<Triangle> tris{{0, 1, 2}, {0, 2, 3}};
    const CompatibleMeshPair pair(square_pts(), vb, tris, iota_boundary(4));
    const ValidationReport r = validate(pair);
    CHECK_FALSE(r.valid);
    CHECK_FALSE(r.flipped_b.empty());
    CHECK(r.flipped_a.empty());
  }
}

TEST_CASE("locate finds the lowest containing triangle with clean weights") {
  const Polygon a = gen_splat(11, 32, 0.75, 0.7);
  const Polygon b = gen_circle(32);
  const CompatibleMeshPair pair = earcut_compatible(a, b);

  // Mesh vertices get exact unit weights.
  for (int i = 0; i < pair.vertex_count(); ++i) {
    const BarycentricLocation loc = locate(pair, Side::A, pair.verts(Side::A)[i]);
    const Triangle& t = pair.tris()[static_cast<size_t>(loc.tri)];
    const int corner = t.a == i ? 0 : (t.b == i ? 1 : 2);
    REQUIRE((t.a == i || t.b == i || t.c == i));
    for (int k = 0; k < 3; ++k)
      CHECK(loc.weights[static_cast<size_t>(k)] == (k == corner ? 1.0 : 0.0));
  }

  // Triangle centroids locate to their own triangle.
  const auto& va = pair.verts(Side::A);
  for (size_t ti = 0; ti < pair.tris().size(); ++ti) {
    const Triangle& t = pair.tris()[ti];
    const Point2 c((va[t.a].x + va[t.b].x + va[t.c].x) / 3.0,
                   (va[t.a].y + va[t.b].y + va[t.c].y) / 3.0);
    const BarycentricLocation loc = locate(pair, Side::A, c);
    CHECK(loc.tri == static_cast<int>(ti));
    for (double w : loc.weights) CHECK(w == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }

  // Random interior points: containment agrees with the oracle, weights
  // reconstruct the query.
  std::mt19937_64 rng(401);
  const double diam = a.diameter();
  for (int iter = 0; iter < 300; ++iter) {
    const Triangle& t =
        pair.tris()[static_cast<size_t>(rng() % pair.tris().size())];
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    const Point2 p(va[t.a].x + u * (va[t.b].x - va[t.a].x) + v * (va[t.c].x - va[t.a].x),
                   va[t.a].y + u * (va[t.b].y - va[t.a].y) + v * (va[t.c].y - va[t.a].y));
    const BarycentricLocation loc = locate(pair, Side::A, p);
    const Triangle& lt = pair.tris()[static_cast<size_t>(loc.tri)];
    CHECK(oracle::in_triangle_closed(p, va[lt.a], va[lt.b], va[lt.c]));
    for (size_t ti = 0; ti < static_cast<size_t>(loc.tri); ++ti) {
      const Triangle& e = pair.tris()[ti];
      CHECK_FALSE(oracle::in_triangle_closed(p, va[e.a], va[e.b], va[e.c]));
    }
    const Point2 back(loc.weights[0] * va[lt.a].x + loc.weights[1] * va[lt.b].x +
                          loc.weights[2] * va[lt.c].x,
                      loc.weights[0] * va[lt.a].y + loc.weights[1] * va[lt.b].y +
                          loc.weights[2] * va[lt.c].y);
    CHECK(distance(back, p) <= 1e-12 * diam);
  }

  CHECK_THROWS_AS(static_cast<void>(locate(pair, Side::A, Point2(50, 50))), Error);
}

TEST_CASE("map_point carries boundary vertices and centroids across") {
  const Polygon a = gen_splat(5, 20, 0.7, 0.65);
  const CompatibleMeshPair pair = earcut_compatible(a, gen_circle(20));
  const auto& va = pair.verts(Side::A);
  const auto& vb = pair.verts(Side::B);

  for (int i = 0; i < pair.vertex_count(); ++i) {
    const Point2 q = map_point(pair, Side::A, va[static_cast<size_t>(i)]);
    CHECK(q.x == vb[static_cast<size_t>(i)].x);
    CHECK(q.y == vb[static_cast<size_t>(i)].y);
    const Point2 r = map_point(pair, Side::B, vb[static_cast<size_t>(i)]);
    CHECK(r.x == va[static_cast<size_t>(i)].x);
    CHECK(r.y == va[static_cast<size_t>(i)].y);
  }

  for (const Triangle& t : pair.tris()) {
    const Point2 ca((va[t.a].x + va[t.b].x + va[t.c].x) / 3.0,
                    (va[t.a].y + va[t.b].y + va[t.c].y) / 3.0);
    const Point2 cb((vb[t.a].x + vb[t.b].x + vb[t.c].x) / 3.0,
                    (vb[t.a].y + vb[t.b].y + vb[t.c].y) / 3.0);
    CHECK(distance(map_point(pair, Side::A, ca), cb) <= 1e-12 * 2.0);
  }
}

TEST_CASE("points on shared edges map identically from either triangle") {
  const std::vector<Triangle> tris = earcut_single(Polygon(square_pts()));
  REQUIRE(tris.size() == 2);
  std::vector<Point2> vb;
  for (int i = 0; i < 4; ++i) {
    const double phi = std::numbers::pi * (0.25 + 0.5 * i);
    vb.push_back(Point2(std::cos(phi), std::sin(phi)));
  }
  const CompatibleMeshPair pair(square_pts(), vb, tris, iota_boundary(4));
  REQUIRE(validate(pair).valid);

  // The two triangles share a diagonal; probe its midpoint.
  std::vector<int> shared;
  for (int v : {tris[0].a, tris[0].b, tris[0].c})
    if (v == tris[1].a || v == tris[1].b || v == tris[1].c) shared.push_back(v);
  REQUIRE(shared.size() == 2);
  const auto& va = pair.verts(Side::A);
  const Point2 mid(0.5 * (va[shared[0]].x + va[shared[1]].x),
                   0.5 * (va[shared[0]].y + va[shared[1]].y));

  std::vector<Point2> images;
  for (const Triangle& t : tris) {
    const auto w = bary_of(mid, va[t.a], va[t.b], va[t.c]);
    images.push_back(Point2(w[0] * vb[t.a].x + w[1] * vb[t.b].x + w[2] * vb[t.c].x,
                            w[0] * vb[t.a].y + w[1] * vb[t.b].y + w[2] * vb[t.c].y));
  }
  CHECK(distance(images[0], images[1]) <= 1e-12);
  CHECK(distance(map_point(pair, Side::A, mid), images[0]) <= 1e-12);
}

TEST_CASE("stretch is 1 for identity, 2 for doubling, 1 for rotation") {
  const Polygon a = gen_splat(3, 28, 0.8, 0.7);
  const std::vector<Triangle> tris = earcut_single(a);
  const std::vector<Point2>& va = a.vertices();

  const CompatibleMeshPair ident(va, va, tris, iota_boundary(a.size()));
  for (double s : l2_stretch(ident, MapDirection::AtoB).per_tri)
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<Point2> doubled;
  for (const Point2& p : va) doubled.push_back(Point2(2 * p.x, 2 * p.y));
  const CompatibleMeshPair scaled(va, doubled, tris, iota_boundary(a.size()));
  for (double s : l2_stretch(scaled, MapDirection::AtoB).per_tri)
    CHECK(s == doctest::Approx(2.0).epsilon(1e-12));
  for (double s : l2_stretch(scaled, MapDirection::BtoA).per_tri)
    CHECK(s == doctest::Approx(0.5).epsilon(1e-12));

  const double phi = 37.0 * std::numbers::pi / 180.0;
  std::vector<Point2> rotated;
  for (const Point2& p : va)
    rotated.push_back(
        Point2(p.x * std::cos(phi) - p.y * std::sin(phi),
               p.x * std::sin(phi) + p.y * std::cos(phi)));
  const CompatibleMeshPair turned(va, rotated, tris, iota_boundary(a.size()));
  for (double s : l2_stretch(turned, MapDirection::AtoB).per_tri)
    CHECK(s == doctest::Approx(1.0).epsilon(1e-9));

  // Rigid motion of the target leaves the report unchanged.
  const CompatibleMeshPair base = earcut_compatible(a, gen_circle(a.size()));
  std::vector<Point2> moved;
  for (const Point2& p : base.verts(Side::B))
    moved.push_back(Point2(p.x * std::cos(phi) - p.y * std::sin(phi) + 3.5,
                           p.x * std::sin(phi) + p.y * std::cos(phi) - 1.25));
  const CompatibleMeshPair shifted(base.verts(Side::A), moved, base.tris(), base.boundary());
  const StretchReport r1 = l2_stretch(base, MapDirection::AtoB);
  const StretchReport r2 = l2_stretch(shifted, MapDirection::AtoB);
  REQUIRE(r1.per_tri.size() == r2.per_tri.size());
  for (size_t i = 0; i < r1.per_tri.size(); ++i)
    CHECK(r2.per_tri[i] == doctest::Approx(r1.per_tri[i]).epsilon(1e-9));

  // Report bookkeeping.
  CHECK(r1.min <= r1.mean);
  CHECK(r1.mean <= r1.max);
  int hist_total = 0;
  for (int c : r1.log_histogram) hist_total += c;
  CHECK(hist_total == static_cast<int>(r1.per_tri.size()));

  // A collinear source triangle has no invertible Jacobian.
  const std::vector<Point2> flat{Point2(0, 0), Point2(1, 0), Point2(2, 0), Point2(0, 1)};
  const CompatibleMeshPair degen(flat, square_pts(), {{0, 1, 2}, {0, 2, 3}}, iota_boundary(4));
  try {
    static_cast<void>(l2_stretch(degen, MapDirection::AtoB));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateSourceTriangle);
  }
}

TEST_CASE("merge stitches bands and cores around matching indices") {
  const CompatibleMeshPair core = earcut_compatible(gen_splat(17, 16, 0.6, 0.5), gen_circle(16));
  const CompatibleMeshPair same = merge(core);
  CHECK(same.tris() == core.tris());
  CHECK(same.verts(Side::A) == core.verts(Side::A));
  CHECK(same.verts(Side::B) == core.verts(Side::B));

  // Square ring: outer squares, inner quarter square against a disk.
  const Polygon outer_a(square_pts());
  const Polygon outer_b(square_pts());
  const OffsetResult topo = topological_offset(outer_a);
  const OffsetResult geo =
      geometric_offset(outer_b, Disk{Point2(0.5, 0.5), 0.3}, topo.multiplicities);
  const CompatibleMeshPair ring_core = earcut_compatible(topo.inner, geo.inner);
  std::vector<int> core_to_merged{4, 5, 6, 7};
  const CompatibleMeshPair merged =
      merge(outer_a, outer_b, topo.band, ring_core, core_to_merged);
  CHECK(merged.vertex_count() == 8);
  CHECK(merged.tris().size() == topo.band.size() + ring_core.tris().size());
  CHECK(validate(merged).valid);

  CHECK_THROWS_AS(
      static_cast<void>(merge(outer_a, outer_b, topo.band, ring_core, {4, 5, 6})), Error);
  try {
    static_cast<void>(merge(outer_a, outer_b, topo.band, ring_core, {4, 5, 6, 6}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexMapMismatch);
  }
}
