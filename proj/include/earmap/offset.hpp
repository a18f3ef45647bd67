#pragma once

#include <optional>
#include <vector>

#include "earmap/earcut.hpp"
#include "earmap/geom.hpp"

namespace earmap {

struct Disk {
  Point2 center;
  double radius = 0.0;
};

// Inner offset polygon plus the triangle band connecting it to the outer
// boundary. Band indices address a merged table: outer vertices 0..n-1,
// then inner vertices n..n+m-1 grouped per outer vertex in chain order.
// multiplicities[i] is the number of inner vertices owned by outer vertex i.
struct OffsetResult {
  Polygon inner;
  std::vector<Triangle> band;
  std::vector<int> multiplicities;
};

// Inward offset driven purely by mesh topology: a guiding ear-cut
// triangulation is refined until every boundary vertex has an incident
// interior edge, offset points are dropped at the midpoint of each such
// edge, and the scaffolding triangulation is discarded. For |P| >= 5 the
// inner polygon always has at least |P| + 2 vertices.
OffsetResult topological_offset(const Polygon& poly,
                                EarStrategy guide = EarStrategy::AnglePrioritized);

// Inward offset of a weakly-visible polygon onto a circle: one radial
// anchor per vertex projected onto the disk boundary, plus multiplicity-1
// extra points spread over the first half of each vertex's arc. The disk
// center must see the whole boundary for the result to make sense; exact
// angular collisions are refused.
OffsetResult geometric_offset(const Polygon& poly, const Disk& disk,
                              const std::vector<int>& multiplicities);

// The band alone. Connectivity is a function of the multiplicities only;
// the polygons contribute nothing but their sizes.
std::vector<Triangle> band_triangulate(const Polygon& outer, const Polygon& inner,
                                       const std::vector<int>& multiplicities);

// Intersection of the inward half-planes of all edges: the locus of points
// that see the entire boundary. Empty when the polygon is not star-shaped.
// The result is convex; fewer than 3 vertices means empty.
std::vector<Point2> polygon_kernel(const Polygon& poly);

// Largest-clearance disk for geometric offsetting: centered at the kernel
// centroid, radius = shrink * distance to the polygon boundary.
Disk auto_disk(const Polygon& poly, double shrink = 0.9);

}  // namespace earmap
