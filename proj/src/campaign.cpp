#include "earmap/campaign.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <thread>

#include <json.hpp>

#include "earmap/generators.hpp"
#include "earmap/io.hpp"

namespace earmap {

int worker_count(int requested) {
  int count = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (count < 1) count = 1;
  if (const char* cap = std::getenv("EARMAP_THREADS")) {
    const int limit = std::atoi(cap);
    if (limit > 0) count = std::min(count, limit);
  }
  return count;
}

void parallel_for(int count, const std::function<void(int)>& fn, int workers) {
  const int pool = std::min(worker_count(workers), count);
  if (pool <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(pool));
  for (int w = 0; w < pool; ++w)
    threads.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (std::thread& t : threads) t.join();
}

namespace {

constexpr TargetKind kTargets[] = {TargetKind::Circle, TargetKind::Square, TargetKind::Star};

Polygon make_target(TargetKind kind, int n) {
  if (kind == TargetKind::Star) {
    const int points = std::min(5, n / 2);
    return gen_star(n, points);
  }
  return gen_target(kind, n);
}

CampaignRow map_one(int shape_id, const Polygon& splat, TargetKind kind,
                    EarStrategy strategy) {
  CampaignRow row;
  row.shape_id = shape_id;
  row.n = splat.size();
  row.target = to_string(kind);
  row.strategy = std::string(to_string(strategy));
  try {
    MappingRequest request;
    request.source = splat;
    request.target = make_target(kind, splat.size());
    request.strategy = strategy;
    MappingOutcome outcome = run(request);
    row.route = to_string(outcome.route_taken);
    row.valid = true;
    row.tri_count = static_cast<int>(outcome.pair.tris().size());
    row.added_vertices = outcome.added_vertices;
    row.max_stretch = outcome.stretch.max;
    row.timings = outcome.timings;
  } catch (const Error& e) {
    row.route = "-";
    row.valid = false;
    row.error = to_string(e.code());
  }
  return row;
}

void write_csv(const std::filesystem::path& path, const std::vector<CampaignRow>& rows,
               bool timings) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << "shape_id,n,target,strategy,route,valid,tri_count,added_vertices,max_stretch,error";
  if (timings) out << ",offset_ms,earcut_ms,merge_ms,validate_ms,total_ms";
  out << '\n';
  for (const CampaignRow& r : rows) {
    out << r.shape_id << ',' << r.n << ',' << r.target << ',' << r.strategy << ',' << r.route
        << ',' << (r.valid ? 1 : 0) << ',' << r.tri_count << ',' << r.added_vertices << ','
        << format_double(r.max_stretch) << ',' << r.error;
    if (timings)
      out << ',' << format_double(r.timings.offset_ms) << ',' << format_double(r.timings.earcut_ms)
          << ',' << format_double(r.timings.merge_ms) << ','
          << format_double(r.timings.validate_ms) << ',' << format_double(r.timings.total_ms);
    out << '\n';
  }
  if (!out.flush()) fail(ErrorCode::IoError, "write failed for " + path.string());
}

void write_summary(const std::filesystem::path& path, const CampaignSummary& summary,
                   const CampaignConfig& config) {
  nlohmann::json doc;
  doc["count"] = config.count;
  doc["n_min"] = config.n_min;
  doc["n_max"] = config.n_max;
  doc["seed"] = config.seed;
  doc["rows"] = summary.rows.size();
  doc["total_ms"] = summary.total_ms;
  nlohmann::json strategies = nlohmann::json::object();
  for (const auto& [name, stats] : summary.by_strategy) {
    strategies[name] = {
        {"maps", stats.maps},
        {"valid", stats.valid},
        {"failed", stats.maps - stats.valid},
        {"validity_rate", stats.maps > 0 ? static_cast<double>(stats.valid) / stats.maps : 0.0},
    };
  }
  doc["strategies"] = strategies;
  double offset_ms = 0.0, earcut_ms = 0.0, merge_ms = 0.0, validate_ms = 0.0;
  for (const CampaignRow& r : summary.rows) {
    offset_ms += r.timings.offset_ms;
    earcut_ms += r.timings.earcut_ms;
    merge_ms += r.timings.merge_ms;
    validate_ms += r.timings.validate_ms;
  }
  doc["stage_ms"] = {{"offset", offset_ms},
                     {"earcut", earcut_ms},
                     {"merge", merge_ms},
                     {"validate", validate_ms}};

  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << doc.dump(2) << '\n';
  if (!out.flush()) fail(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& config) {
  if (config.count < 0) fail(ErrorCode::InvalidCount, "campaign shape count cannot be negative");
  if (config.n_min < 4 || config.n_max < config.n_min)
    fail(ErrorCode::InvalidArgument, "campaign vertex range must satisfy 4 <= n_min <= n_max");
  if (config.strategies.empty())
    fail(ErrorCode::InvalidArgument, "campaign needs at least one strategy");
  if (!config.out_dir.empty()) std::filesystem::create_directories(config.out_dir);

  const auto t0 = std::chrono::steady_clock::now();

  // All randomness is drawn up front so the worker schedule cannot
  // influence the result.
  struct ShapeParams {
    uint64_t seed;
    int n;
  };
  std::mt19937_64 master(config.seed);
  std::vector<ShapeParams> shapes(static_cast<size_t>(config.count));
  const uint64_t span = static_cast<uint64_t>(config.n_max - config.n_min) + 1;
  for (ShapeParams& s : shapes) {
    s.seed = master();
    s.n = config.n_min + static_cast<int>(master() % span);
  }

  const int per_shape = static_cast<int>(std::size(kTargets)) *
                        static_cast<int>(config.strategies.size());
  std::vector<CampaignRow> rows(static_cast<size_t>(config.count * per_shape));
  parallel_for(
      config.count,
      [&](int shape) {
        const Polygon splat = gen_splat(shapes[static_cast<size_t>(shape)].seed,
                                        shapes[static_cast<size_t>(shape)].n,
                                        config.irregularity, config.spikiness);
        int slot = shape * per_shape;
        for (const TargetKind kind : kTargets)
          for (const EarStrategy strategy : config.strategies)
            rows[static_cast<size_t>(slot++)] = map_one(shape, splat, kind, strategy);
      },
      config.threads);

  CampaignSummary summary;
  summary.rows = std::move(rows);
  for (const CampaignRow& r : summary.rows) {
    StrategyStats& stats = summary.by_strategy[r.strategy];
    ++stats.maps;
    if (r.valid) ++stats.valid;
  }
  summary.total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  if (!config.out_dir.empty()) {
    summary.csv_path = config.out_dir / "campaign.csv";
    summary.summary_path = config.out_dir / "summary.json";
    write_csv(summary.csv_path, summary.rows, config.timings_in_csv);
    write_summary(summary.summary_path, summary, config);
  }
  return summary;
}

}  // namespace earmap
