#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "earmap/pipeline.hpp"

namespace earmap {

// Worker count honoring the EARMAP_THREADS cap; requested == 0 means
// hardware concurrency.
int worker_count(int requested = 0);

// Runs fn(0..count-1) on a small thread pool. fn must not throw.
void parallel_for(int count, const std::function<void(int)>& fn, int workers = 0);

struct CampaignConfig {
  int count = 200;
  int n_min = 10;
  int n_max = 500;
  uint64_t seed = 1;
  double irregularity = 0.85;
  double spikiness = 0.65;
  std::vector<EarStrategy> strategies = {EarStrategy::AnglePrioritized, EarStrategy::Sequential};
  std::filesystem::path out_dir;
  // Wall-clock columns make the CSV non-reproducible; off by default.
  bool timings_in_csv = false;
  int threads = 0;
};

struct CampaignRow {
  int shape_id = 0;
  int n = 0;
  std::string target;
  std::string strategy;
  std::string route;
  bool valid = false;
  int tri_count = 0;
  int added_vertices = 0;
  double max_stretch = 0.0;
  StageTimings timings;
  std::string error;
};

struct StrategyStats {
  int maps = 0;
  int valid = 0;
};

struct CampaignSummary {
  std::vector<CampaignRow> rows;
  std::map<std::string, StrategyStats> by_strategy;
  double total_ms = 0.0;
  std::filesystem::path csv_path;
  std::filesystem::path summary_path;
};

// Maps `count` seeded splats onto circle, square and star targets of the
// same vertex count under every requested strategy. Failures become rows,
// not exceptions. Writes campaign.csv and summary.json into out_dir.
CampaignSummary run_campaign(const CampaignConfig& config);

}  // namespace earmap
