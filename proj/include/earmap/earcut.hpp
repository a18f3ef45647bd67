#pragma once

#include <vector>

#include "earmap/geom.hpp"
#include "earmap/mesh.hpp"

namespace earmap {

enum class EarStrategy { Sequential, AnglePrioritized };

// Live vertices of a polygon during ear cutting: a cyclic doubly-linked
// structure over indices 0..n-1.
class Front {
 public:
  explicit Front(int n);

  int size() const { return size_; }
  bool alive(int i) const { return alive_[static_cast<size_t>(i)] != 0; }
  int next(int i) const { return next_[static_cast<size_t>(i)]; }
  int prev(int i) const { return prev_[static_cast<size_t>(i)]; }
  // Lowest live index.
  int first() const;

  // Unlinks a live vertex; the front never shrinks below a triangle.
  void remove(int i);

 private:
  std::vector<int> next_;
  std::vector<int> prev_;
  std::vector<char> alive_;
  int size_ = 0;
};

// Min-heap of ear candidates keyed by (key, vertex). Entries are lazily
// invalidated: each carries the stamp of the vertex state it was computed
// from, and consumers discard entries whose stamp has moved on.
class EarQueue {
 public:
  struct Entry {
    double key = 0.0;
    int vertex = -1;
    int stamp = 0;
  };

  bool empty() const { return heap_.empty(); }
  void push(const Entry& e);
  Entry pop();

 private:
  std::vector<Entry> heap_;
};

// Whether front vertex i is a cuttable ear of poly: strictly convex corner
// and no non-convex live vertex inside the closed candidate triangle.
bool is_valid_ear(const Front& front, const Polygon& poly, int i);

// Next ear under the given strategy. Sequential scans live vertices
// starting at scan_from; AnglePrioritized picks the valid ear whose
// interior angle is closest to pi/3 (ties to the lower index).
int find_valid_ear(const Front& front, const Polygon& poly, EarStrategy strategy,
                   int scan_from = 0);

// Ear cutting of one simple CCW polygon. Exactly n-2 triangles, no new
// vertices, all strictly CCW.
std::vector<Triangle> earcut_single(const Polygon& poly,
                                    EarStrategy strategy = EarStrategy::AnglePrioritized);

// Grows one triangle list valid in both polygons at once: ears are chosen
// on A, and because B is strictly convex every cut is valid there too.
// Requires equal sizes, A simple, both CCW, B strictly convex.
CompatibleMeshPair earcut_compatible(const Polygon& va, const Polygon& vb,
                                     EarStrategy strategy = EarStrategy::AnglePrioritized);

}  // namespace earmap
