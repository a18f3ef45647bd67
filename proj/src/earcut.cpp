#include "earmap/earcut.hpp"

#include <algorithm>
#include <cassert>
#include <numbers>
#include <string>

namespace earmap {

Front::Front(int n) : size_(n) {
  if (n < 3) fail(ErrorCode::TooFewVertices, "front needs at least 3 vertices");
  next_.resize(static_cast<size_t>(n));
  prev_.resize(static_cast<size_t>(n));
  alive_.assign(static_cast<size_t>(n), 1);
  for (int i = 0; i < n; ++i) {
    next_[static_cast<size_t>(i)] = (i + 1 == n) ? 0 : i + 1;
    prev_[static_cast<size_t>(i)] = (i == 0) ? n - 1 : i - 1;
  }
}

int Front::first() const {
  for (size_t i = 0; i < alive_.size(); ++i)
    if (alive_[i]) return static_cast<int>(i);
  fail(ErrorCode::InternalError, "empty front");
}

void Front::remove(int i) {
  if (!alive(i)) fail(ErrorCode::InternalError, "removing dead front vertex");
  if (size_ <= 3) fail(ErrorCode::InternalError, "front cannot shrink below a triangle");
  const int p = prev(i);
  const int n = next(i);
  next_[static_cast<size_t>(p)] = n;
  prev_[static_cast<size_t>(n)] = p;
  alive_[static_cast<size_t>(i)] = 0;
  --size_;
}

namespace {

bool entry_after(const EarQueue::Entry& l, const EarQueue::Entry& r) {
  if (l.key != r.key) return l.key > r.key;
  if (l.vertex != r.vertex) return l.vertex > r.vertex;
  return l.stamp > r.stamp;
}

}  // namespace

void EarQueue::push(const Entry& e) {
  heap_.push_back(e);
  std::push_heap(heap_.begin(), heap_.end(), entry_after);
}

EarQueue::Entry EarQueue::pop() {
  if (heap_.empty()) fail(ErrorCode::InternalError, "pop from empty ear queue");
  std::pop_heap(heap_.begin(), heap_.end(), entry_after);
  const Entry e = heap_.back();
  heap_.pop_back();
  return e;
}

namespace {

constexpr double kTargetAngle = std::numbers::pi / 3.0;

Orientation corner_orientation(const Front& front, const Polygon& poly, int i) {
  return orient2d(poly[front.prev(i)], poly[i], poly[front.next(i)]);
}

// Containment candidates are the non-strictly-convex live vertices: a
// convex vertex strictly inside the candidate triangle would force some
// reflex vertex inside as well, and exactly-straight vertices can sit on
// the closing diagonal, so they must be checked too.
bool ear_ok(const Front& front, const Polygon& poly, const std::vector<Orientation>& corner,
            int i) {
  if (corner[static_cast<size_t>(i)] != Orientation::CCW) return false;
  const int p = front.prev(i);
  const int n = front.next(i);
  const Point2& a = poly[p];
  const Point2& b = poly[i];
  const Point2& c = poly[n];
  for (int j = front.next(n); j != p; j = front.next(j)) {
    if (corner[static_cast<size_t>(j)] == Orientation::CCW) continue;
    if (detail::point_in_ccw_triangle(poly[j], a, b, c, true)) return false;
  }
#ifndef NDEBUG
  for (int j = front.next(n); j != p; j = front.next(j))
    assert(!detail::point_in_ccw_triangle(poly[j], a, b, c, true));
#endif
  return true;
}

std::vector<Orientation> classify_front(const Front& front, const Polygon& poly) {
  std::vector<Orientation> corner(static_cast<size_t>(poly.size()), Orientation::Collinear);
  const int start = front.first();
  int i = start;
  do {
    corner[static_cast<size_t>(i)] = corner_orientation(front, poly, i);
    i = front.next(i);
  } while (i != start);
  return corner;
}

double ear_key(const Front& front, const Polygon& poly, int i) {
  const double angle = interior_angle(poly[front.prev(i)], poly[i], poly[front.next(i)]);
  return std::fabs(angle - kTargetAngle);
}

// Incremental ear-cutting state shared by both strategies.
struct Runner {
  const Polygon& poly;
  EarStrategy strategy;
  Front front;
  std::vector<Orientation> corner;
  std::vector<int> stamp;
  EarQueue queue;
  std::vector<EarQueue::Entry> parked;
  int cursor = 0;
  std::vector<Triangle> tris;

  Runner(const Polygon& p, EarStrategy s)
      : poly(p), strategy(s), front(p.size()), stamp(static_cast<size_t>(p.size()), 0) {
    corner = classify_front(front, poly);
    if (strategy == EarStrategy::AnglePrioritized) {
      for (int i = 0; i < poly.size(); ++i)
        if (corner[static_cast<size_t>(i)] == Orientation::CCW)
          queue.push({ear_key(front, poly, i), i, 0});
    }
  }

  void reclassify(int v) {
    corner[static_cast<size_t>(v)] = corner_orientation(front, poly, v);
    ++stamp[static_cast<size_t>(v)];
    if (strategy == EarStrategy::AnglePrioritized &&
        corner[static_cast<size_t>(v)] == Orientation::CCW)
      queue.push({ear_key(front, poly, v), v, stamp[static_cast<size_t>(v)]});
  }

  int pick_sequential() {
    int j = cursor;
    for (int steps = 0; steps < front.size(); ++steps, j = front.next(j))
      if (ear_ok(front, poly, corner, j)) return j;
    fail(ErrorCode::InternalError, "no valid ear on a simple front");
  }

  int pick_prioritized() {
    while (!queue.empty()) {
      const EarQueue::Entry e = queue.pop();
      if (!front.alive(e.vertex) || e.stamp != stamp[static_cast<size_t>(e.vertex)])
        continue;
      if (ear_ok(front, poly, corner, e.vertex)) return e.vertex;
      parked.push_back(e);
    }
    fail(ErrorCode::InternalError, "no valid ear on a simple front");
  }

  std::vector<Triangle> run() {
    tris.reserve(static_cast<size_t>(poly.size() - 2));
    while (front.size() > 3) {
      const int i = strategy == EarStrategy::Sequential ? pick_sequential() : pick_prioritized();
      const int p = front.prev(i);
      const int n = front.next(i);
      tris.push_back({p, i, n});
      front.remove(i);
      ++stamp[static_cast<size_t>(i)];
      reclassify(p);
      reclassify(n);
      if (strategy == EarStrategy::Sequential) {
        cursor = p;
      } else {
        // Blocked candidates may have been freed by this cut.
        for (const EarQueue::Entry& e : parked)
          if (front.alive(e.vertex) && e.stamp == stamp[static_cast<size_t>(e.vertex)])
            queue.push(e);
        parked.clear();
      }
    }
    const int x = front.first();
    const int y = front.next(x);
    const int z = front.next(y);
    tris.push_back({x, y, z});
    return std::move(tris);
  }
};

}  // namespace

bool is_valid_ear(const Front& front, const Polygon& poly, int i) {
  if (!front.alive(i)) return false;
  return ear_ok(front, poly, classify_front(front, poly), i);
}

int find_valid_ear(const Front& front, const Polygon& poly, EarStrategy strategy, int scan_from) {
  const std::vector<Orientation> corner = classify_front(front, poly);
  if (strategy == EarStrategy::Sequential) {
    int j = scan_from;
    while (!front.alive(j)) j = (j + 1) % poly.size();
    for (int steps = 0; steps < front.size(); ++steps, j = front.next(j))
      if (ear_ok(front, poly, corner, j)) return j;
    fail(ErrorCode::InternalError, "no valid ear on a simple front");
  }
  std::vector<std::pair<double, int>> candidates;
  const int start = front.first();
  int i = start;
  do {
    if (corner[static_cast<size_t>(i)] == Orientation::CCW)
      candidates.emplace_back(ear_key(front, poly, i), i);
    i = front.next(i);
  } while (i != start);
  std::sort(candidates.begin(), candidates.end());
  for (const auto& [key, v] : candidates)
    if (ear_ok(front, poly, corner, v)) return v;
  fail(ErrorCode::InternalError, "no valid ear on a simple front");
}

std::vector<Triangle> earcut_single(const Polygon& poly, EarStrategy strategy) {
  if (!is_simple(poly)) fail(ErrorCode::NotSimple, "polygon is not simple");
  if (polygon_orientation(poly) != Orientation::CCW)
    fail(ErrorCode::NotCounterClockwise, "polygon must wind CCW");
  return Runner(poly, strategy).run();
}

CompatibleMeshPair earcut_compatible(const Polygon& va, const Polygon& vb, EarStrategy strategy) {
  if (va.size() != vb.size())
    fail(ErrorCode::SizeMismatch, "polygons have " + std::to_string(va.size()) + " and " +
                                      std::to_string(vb.size()) + " vertices");
  if (!is_simple(va)) fail(ErrorCode::NotSimple, "polygon A is not simple");
  if (polygon_orientation(va) != Orientation::CCW)
    fail(ErrorCode::NotCounterClockwise, "polygon A must wind CCW");
  if (!is_strictly_convex(vb)) fail(ErrorCode::NotStrictlyConvex, "polygon B is not strictly convex");

  std::vector<Triangle> tris = Runner(va, strategy).run();
#ifndef NDEBUG
  for (const Triangle& t : tris)
    assert(orient2d(vb[t.a], vb[t.b], vb[t.c]) == Orientation::CCW);
#endif
  std::vector<int> boundary(static_cast<size_t>(va.size()));
  for (int i = 0; i < va.size(); ++i) boundary[static_cast<size_t>(i)] = i;
  return CompatibleMeshPair(va.vertices(), vb.vertices(), std::move(tris), std::move(boundary));
}

}  // namespace earmap
