#pragma once

#include <optional>
#include <string>
#include <vector>

#include "earmap/earcut.hpp"
#include "earmap/mesh.hpp"
#include "earmap/offset.hpp"

namespace earmap {

enum class Route { Auto, DirectConvex, WeaklyVisible };

std::string_view to_string(Route route);
std::string_view to_string(EarStrategy strategy);

struct MappingRequest {
  Polygon source;
  Polygon target;
  std::optional<Disk> disk;           // geometric offset disk; auto when absent
  EarStrategy strategy = EarStrategy::AnglePrioritized;
  Route route = Route::Auto;          // Auto picks Direct iff the target is strictly convex
  double disk_shrink = 0.9;
  MapDirection stretch_direction = MapDirection::AtoB;
};

struct StageTimings {
  double offset_ms = 0.0;
  double earcut_ms = 0.0;
  double merge_ms = 0.0;
  double validate_ms = 0.0;
  double total_ms = 0.0;
};

struct MappingOutcome {
  CompatibleMeshPair pair;
  ValidationReport report;
  StretchReport stretch;
  StageTimings timings;
  Route route_taken = Route::DirectConvex;
  // Vertices added to each domain beyond the input boundary.
  int added_vertices = 0;
};

// Full mapping pipeline: normalize, pick a route, offset if needed, grow
// the shared triangulation, merge, certify. An invalid certificate is an
// error (ValidationError carrying the report), not a degraded result.
MappingOutcome run(const MappingRequest& request);

struct DiagnosisItem {
  ErrorCode code;
  std::string detail;
};

// Dry-run precondition report: every violated requirement of the request,
// in a stable order, no exceptions. Empty means run() will get past its
// input checks.
std::vector<DiagnosisItem> diagnose(const MappingRequest& request);

}  // namespace earmap
