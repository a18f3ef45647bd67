#include "earmap/pipeline.hpp"

#include <chrono>
#include <numeric>

namespace earmap {

std::string_view to_string(Route route) {
  switch (route) {
    case Route::Auto: return "auto";
    case Route::DirectConvex: return "direct";
    case Route::WeaklyVisible: return "weakly-visible";
  }
  return "unknown";
}

std::string_view to_string(EarStrategy strategy) {
  switch (strategy) {
    case EarStrategy::Sequential: return "seq";
    case EarStrategy::AnglePrioritized: return "prio";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

MappingOutcome run(const MappingRequest& request) {
  const Clock::time_point t_total = Clock::now();

  if (request.source.size() != request.target.size())
    fail(ErrorCode::SizeMismatch,
         "source has " + std::to_string(request.source.size()) + " vertices, target " +
             std::to_string(request.target.size()));
  if (!is_simple(request.source)) fail(ErrorCode::NotSimple, "source polygon is not simple");
  if (!is_simple(request.target)) fail(ErrorCode::NotSimple, "target polygon is not simple");

  const Polygon a = normalize_ccw(request.source);
  const Polygon b = normalize_ccw(request.target);

  Route route = request.route;
  if (route == Route::Auto)
    route = is_strictly_convex(b) ? Route::DirectConvex : Route::WeaklyVisible;

  StageTimings timings;
  if (route == Route::DirectConvex) {
    const Clock::time_point t_cut = Clock::now();
    CompatibleMeshPair core = earcut_compatible(a, b, request.strategy);
    timings.earcut_ms = ms_since(t_cut);

    const Clock::time_point t_merge = Clock::now();
    CompatibleMeshPair pair = merge(core);
    timings.merge_ms = ms_since(t_merge);

    const Clock::time_point t_validate = Clock::now();
    ValidationReport report = validate(pair);
    timings.validate_ms = ms_since(t_validate);
    if (!report.valid) throw ValidationError(std::move(report));

    StretchReport stretch = l2_stretch(pair, request.stretch_direction);
    timings.total_ms = ms_since(t_total);
    return {std::move(pair), std::move(report), std::move(stretch),
            timings,         Route::DirectConvex, 0};
  }

  const Clock::time_point t_offset = Clock::now();
  OffsetResult topo = topological_offset(a, request.strategy);
  const Disk disk = request.disk ? *request.disk : auto_disk(b, request.disk_shrink);
  OffsetResult geo = geometric_offset(b, disk, topo.multiplicities);
  timings.offset_ms = ms_since(t_offset);

  const Clock::time_point t_cut = Clock::now();
  CompatibleMeshPair core = earcut_compatible(topo.inner, geo.inner, request.strategy);
  timings.earcut_ms = ms_since(t_cut);

  const Clock::time_point t_merge = Clock::now();
  std::vector<int> core_to_merged(static_cast<size_t>(core.vertex_count()));
  std::iota(core_to_merged.begin(), core_to_merged.end(), a.size());
  CompatibleMeshPair pair = merge(a, b, topo.band, core, core_to_merged);
  timings.merge_ms = ms_since(t_merge);

  const Clock::time_point t_validate = Clock::now();
  ValidationReport report = validate(pair);
  timings.validate_ms = ms_since(t_validate);
  if (!report.valid) throw ValidationError(std::move(report));

  StretchReport stretch = l2_stretch(pair, request.stretch_direction);
  timings.total_ms = ms_since(t_total);
  return {std::move(pair),  std::move(report),     std::move(stretch),
          timings,          Route::WeaklyVisible,  topo.inner.size()};
}

std::vector<DiagnosisItem> diagnose(const MappingRequest& request) {
  std::vector<DiagnosisItem> items;
  if (request.source.size() != request.target.size())
    items.push_back({ErrorCode::SizeMismatch,
                     "source has " + std::to_string(request.source.size()) +
                         " vertices, target " + std::to_string(request.target.size())});

  const bool source_simple = is_simple(request.source);
  const bool target_simple = is_simple(request.target);
  if (!source_simple) items.push_back({ErrorCode::NotSimple, "source polygon is not simple"});
  if (!target_simple) items.push_back({ErrorCode::NotSimple, "target polygon is not simple"});

  if (source_simple && polygon_orientation(request.source) == Orientation::Collinear)
    items.push_back({ErrorCode::DegenerateChain, "source polygon is degenerate"});
  if (!target_simple) return items;

  if (polygon_orientation(request.target) == Orientation::Collinear) {
    items.push_back({ErrorCode::DegenerateChain, "target polygon is degenerate"});
    return items;
  }

  const Polygon b = normalize_ccw(request.target);
  Route route = request.route;
  if (route == Route::Auto)
    route = is_strictly_convex(b) ? Route::DirectConvex : Route::WeaklyVisible;

  if (route == Route::DirectConvex) {
    if (!is_strictly_convex(b))
      items.push_back({ErrorCode::NotStrictlyConvex,
                       "direct route requires a strictly convex target"});
    return items;
  }

  if (request.source.size() <= 3)
    items.push_back({ErrorCode::TooFewVertices,
                     "weakly-visible route needs more than 3 vertices"});
  if (request.disk) {
    if (!(request.disk->radius > 0.0))
      items.push_back({ErrorCode::InvalidArgument, "disk radius must be positive"});
    bool sees_all = true;
    for (int i = 0; i < b.size() && sees_all; ++i)
      if (orient2d(b[i], b[b.next(i)], request.disk->center) == Orientation::CW)
        sees_all = false;
    if (!sees_all)
      items.push_back({ErrorCode::EmptyKernel,
                       "disk center does not see the whole target boundary"});
  } else {
    if (polygon_kernel(b).size() < 3)
      items.push_back({ErrorCode::EmptyKernel, "target polygon has an empty kernel"});
  }
  return items;
}

}  // namespace earmap
