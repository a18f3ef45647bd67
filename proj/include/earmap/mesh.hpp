#pragma once

#include <array>
#include <vector>

#include "earmap/geom.hpp"

namespace earmap {

enum class Side { A, B };
enum class MapDirection { AtoB, BtoA };

// One triangle list shared by two vertex embeddings of equal size.
// Structural well-formedness (index bounds, distinct corners) is enforced
// at construction; geometric validity is a separate property, see validate.
class CompatibleMeshPair {
 public:
  CompatibleMeshPair(std::vector<Point2> verts_a, std::vector<Point2> verts_b,
                     std::vector<Triangle> tris, std::vector<int> boundary);

  int vertex_count() const { return static_cast<int>(verts_a_.size()); }
  const std::vector<Point2>& verts(Side s) const {
    return s == Side::A ? verts_a_ : verts_b_;
  }
  const std::vector<Triangle>& tris() const { return tris_; }
  // Indices of the input polygon boundary, in chain order.
  const std::vector<int>& boundary() const { return boundary_; }

  Polygon boundary_polygon(Side s) const;

 private:
  std::vector<Point2> verts_a_;
  std::vector<Point2> verts_b_;
  std::vector<Triangle> tris_;
  std::vector<int> boundary_;
};

struct ValidationReport {
  bool valid = false;
  std::vector<int> flipped_a;
  std::vector<int> flipped_b;
  std::vector<int> degenerate_a;
  std::vector<int> degenerate_b;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Exact orientation check of every triangle in both embeddings. The pair
// is a bijective piecewise-linear map iff the report comes back valid.
ValidationReport validate(const CompatibleMeshPair& pair);

struct BarycentricLocation {
  int tri = -1;
  std::array<double, 3> weights{};
};

// Containing triangle (exact, lowest index wins on shared edges/vertices)
// plus barycentric weights clamped to [0,1] and normalized.
BarycentricLocation locate(const CompatibleMeshPair& pair, Side side, const Point2& p);

// Transport p across the map: locate in `from`, re-evaluate the weights in
// the other embedding. Boundary vertices map to their partners exactly.
Point2 map_point(const CompatibleMeshPair& pair, Side from, const Point2& p);

struct StretchReport {
  std::vector<double> per_tri;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  // Histogram of log10(stretch) over [log_min, log_max].
  std::array<int, 16> log_histogram{};
  double log_min = 0.0;
  double log_max = 0.0;
};

// Per-triangle L2 stretch of the linear map taking each source triangle to
// its image: sqrt((G^2 + g^2) / 2) for singular values G >= g, which equals
// ||J||_F / sqrt(2).
StretchReport l2_stretch(const CompatibleMeshPair& pair, MapDirection dir);

// Direct route: the core pair is the whole map.
CompatibleMeshPair merge(const CompatibleMeshPair& core);

// Offset route: outer boundaries + one combinatorial band (indices: outer
// 0..n-1, inner n..n+m-1) + the core pair over the inner polygons.
// core_to_merged[k] is the merged index of core vertex k and must hit each
// inner slot exactly once.
CompatibleMeshPair merge(const Polygon& outer_a, const Polygon& outer_b,
                         const std::vector<Triangle>& band, const CompatibleMeshPair& core,
                         const std::vector<int>& core_to_merged);

}  // namespace earmap
