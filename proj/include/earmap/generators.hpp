#pragma once

#include <cstdint>
#include <string_view>

#include "earmap/geom.hpp"

namespace earmap {

enum class TargetKind { Circle, Square, Star };

std::string_view to_string(TargetKind kind);

// Regular n-gon on the unit circle, CCW, first vertex at angle 0.
Polygon gen_circle(int n);

// Axis-aligned unit square subdivided into n boundary vertices, corners
// included, extras spread as evenly as possible; CCW from the origin.
Polygon gen_square(int n);

// k-pointed star alternating radius 1 and inner_ratio, subdivided to n
// boundary vertices; CCW, first vertex is the top spike.
Polygon gen_star(int n, int points = 5, double inner_ratio = 0.4);

Polygon gen_target(TargetKind kind, int n);

// Seeded random blob: jittered angles (monotone, so simple by
// construction) and smoothed radius noise. irregularity in [0,1) drives
// the angular jitter, spikiness in [0,1) the radial noise; both are
// clamped to 0.95. Identical arguments give identical vertices, bit for
// bit.
Polygon gen_splat(uint64_t seed, int n, double irregularity = 0.85, double spikiness = 0.65);

}  // namespace earmap
