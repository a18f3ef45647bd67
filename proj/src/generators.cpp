#include "earmap/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace earmap {

std::string_view to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::Circle: return "circle";
    case TargetKind::Square: return "square";
    case TargetKind::Star: return "star";
  }
  return "unknown";
}

Polygon gen_circle(int n) {
  if (n < 3) fail(ErrorCode::InvalidCount, "circle needs at least 3 vertices");
  std::vector<Point2> verts;
  verts.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    verts.push_back(Point2(std::cos(phi), std::sin(phi)));
  }
  return Polygon(std::move(verts));
}

Polygon gen_square(int n) {
  if (n < 4) fail(ErrorCode::InvalidCount, "square needs at least 4 vertices");
  const Point2 corner[4] = {Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1)};
  const int extras = n - 4;
  std::vector<Point2> verts;
  verts.reserve(static_cast<size_t>(n));
  for (int e = 0; e < 4; ++e) {
    verts.push_back(corner[e]);
    const int on_edge = extras / 4 + (e < extras % 4 ? 1 : 0);
    const Point2& a = corner[e];
    const Point2& b = corner[(e + 1) % 4];
    for (int j = 1; j <= on_edge; ++j) {
      const double t = static_cast<double>(j) / (on_edge + 1);
      verts.push_back(Point2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)));
    }
  }
  return Polygon(std::move(verts));
}

Polygon gen_star(int n, int points, double inner_ratio) {
  if (points < 2) fail(ErrorCode::InvalidCount, "star needs at least 2 points");
  if (n < 2 * points)
    fail(ErrorCode::InvalidCount, "star with " + std::to_string(points) + " points needs at least " +
                                      std::to_string(2 * points) + " vertices");
  if (!(inner_ratio > 0.0) || inner_ratio >= 1.0)
    fail(ErrorCode::InvalidArgument, "inner ratio must lie in (0, 1)");

  const int spine = 2 * points;
  std::vector<Point2> spikes;
  spikes.reserve(static_cast<size_t>(spine));
  for (int j = 0; j < spine; ++j) {
    const double phi =
        std::numbers::pi / 2.0 + std::numbers::pi * static_cast<double>(j) / points;
    const double r = (j % 2 == 0) ? 1.0 : inner_ratio;
    spikes.push_back(Point2(r * std::cos(phi), r * std::sin(phi)));
  }

  const int extras = n - spine;
  std::vector<Point2> verts;
  verts.reserve(static_cast<size_t>(n));
  for (int e = 0; e < spine; ++e) {
    verts.push_back(spikes[static_cast<size_t>(e)]);
    const int on_edge = extras / spine + (e < extras % spine ? 1 : 0);
    const Point2& a = spikes[static_cast<size_t>(e)];
    const Point2& b = spikes[static_cast<size_t>((e + 1) % spine)];
    for (int j = 1; j <= on_edge; ++j) {
      const double t = static_cast<double>(j) / (on_edge + 1);
      verts.push_back(Point2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)));
    }
  }
  return Polygon(std::move(verts));
}

Polygon gen_target(TargetKind kind, int n) {
  switch (kind) {
    case TargetKind::Circle: return gen_circle(n);
    case TargetKind::Square: return gen_square(n);
    case TargetKind::Star: return gen_star(n);
  }
  fail(ErrorCode::InvalidArgument, "unknown target kind");
}

Polygon gen_splat(uint64_t seed, int n, double irregularity, double spikiness) {
  if (n < 4) fail(ErrorCode::InvalidCount, "splat needs at least 4 vertices");
  irregularity = std::clamp(irregularity, 0.0, 0.95);
  spikiness = std::clamp(spikiness, 0.0, 0.95);

  std::mt19937_64 rng(seed);
  // Explicit 53-bit mapping; the standard distributions are not pinned
  // down across implementations and this must be reproducible bit for bit.
  const auto u01 = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  // Jittered angles stay strictly increasing because each vertex moves at
  // most irregularity/2 < 1/2 of a step from its regular position.
  std::vector<double> theta(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    theta[static_cast<size_t>(k)] = 2.0 * std::numbers::pi *
                                    (static_cast<double>(k) + irregularity * (u01() - 0.5)) / n;

  std::vector<double> noise(static_cast<size_t>(n));
  for (double& v : noise) v = 2.0 * u01() - 1.0;
  // Two smoothing passes, then peak normalization to [-1, 1].
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<double> smooth(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      const double l = noise[static_cast<size_t>((k + n - 1) % n)];
      const double r = noise[static_cast<size_t>((k + 1) % n)];
      smooth[static_cast<size_t>(k)] = (l + noise[static_cast<size_t>(k)] + r) / 3.0;
    }
    noise = std::move(smooth);
  }
  double amax = 0.0;
  for (double v : noise) amax = std::max(amax, std::fabs(v));
  if (amax > 0.0)
    for (double& v : noise) v /= amax;

  std::vector<Point2> verts;
  verts.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double r = 1.0 + spikiness * noise[static_cast<size_t>(k)];
    verts.push_back(Point2(r * std::cos(theta[static_cast<size_t>(k)]),
                           r * std::sin(theta[static_cast<size_t>(k)])));
  }
  return Polygon(std::move(verts));
}

}  // namespace earmap
