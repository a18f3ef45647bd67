#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "earmap/campaign.hpp"
#include "earmap/generators.hpp"
#include "earmap/io.hpp"
#include "earmap/pipeline.hpp"

namespace {

using namespace earmap;

Polygon rotate_indexing(const Polygon& poly, int k) {
  const int n = poly.size();
  k = ((k % n) + n) % n;
  std::vector<Point2> verts;
  verts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) verts.push_back(poly[(i + k) % n]);
  return Polygon(std::move(verts));
}

EarStrategy parse_strategy(const std::string& name) {
  if (name == "seq") return EarStrategy::Sequential;
  if (name == "prio") return EarStrategy::AnglePrioritized;
  fail(ErrorCode::InvalidArgument, "unknown strategy '" + name + "'");
}

void print_stretch(const StretchReport& stretch) {
  std::printf("stretch      min %.6g  mean %.6g  max %.6g\n", stretch.min, stretch.mean,
              stretch.max);
}

int cmd_map(const std::string& src_path, const std::string& dst_path,
            const std::vector<double>& disk_args, const std::string& strategy,
            const std::string& route, int rotate_target, double shrink,
            const std::string& obj_prefix, const std::string& svg_path,
            const std::string& svg_color, const std::string& svg_side) {
  MappingRequest request{read_polygon(src_path), read_polygon(dst_path)};
  if (rotate_target != 0) request.target = rotate_indexing(request.target, rotate_target);
  if (!disk_args.empty())
    request.disk = Disk{Point2(disk_args[0], disk_args[1]), disk_args[2]};
  request.strategy = parse_strategy(strategy);
  request.disk_shrink = shrink;
  if (route == "direct") request.route = Route::DirectConvex;
  else if (route == "weakly") request.route = Route::WeaklyVisible;

  const MappingOutcome outcome = run(request);
  std::printf("route        %s\n", std::string(to_string(outcome.route_taken)).c_str());
  std::printf("vertices     %d boundary + %d added per side\n", request.source.size(),
              outcome.added_vertices);
  std::printf("triangles    %zu\n", outcome.pair.tris().size());
  std::printf("valid        yes (all triangles strictly CCW in both domains)\n");
  print_stretch(outcome.stretch);
  std::printf("timings ms   offset %.2f  earcut %.2f  merge %.2f  validate %.2f  total %.2f\n",
              outcome.timings.offset_ms, outcome.timings.earcut_ms, outcome.timings.merge_ms,
              outcome.timings.validate_ms, outcome.timings.total_ms);

  if (!obj_prefix.empty()) {
    emit_obj_pair(obj_prefix, outcome.pair);
    std::printf("obj          %s_A.obj %s_B.obj\n", obj_prefix.c_str(), obj_prefix.c_str());
  }
  if (!svg_path.empty()) {
    const Side side = svg_side == "B" ? Side::B : Side::A;
    const SvgColoring coloring =
        svg_color == "stretch" ? SvgColoring::Stretch : SvgColoring::None;
    emit_svg(std::filesystem::path(svg_path), outcome.pair, side, coloring);
    std::printf("svg          %s\n", svg_path.c_str());
  }
  return 0;
}

int cmd_gen(const std::string& kind, int n, uint64_t seed, int points, double ratio,
            double irregularity, double spikiness, const std::string& out_path) {
  Polygon poly = [&] {
    if (kind == "circle") return gen_circle(n);
    if (kind == "square") return gen_square(n);
    if (kind == "star") return gen_star(n, points, ratio);
    if (kind == "splat") return gen_splat(seed, n, irregularity, spikiness);
    fail(ErrorCode::InvalidArgument, "unknown shape kind '" + kind + "'");
  }();
  if (out_path.empty()) {
    write_polygon(std::cout, poly);
  } else {
    write_polygon(std::filesystem::path(out_path), poly);
  }
  return 0;
}

int cmd_campaign(const CampaignConfig& config, const std::string& strategies) {
  CampaignConfig cfg = config;
  if (strategies == "prio") cfg.strategies = {EarStrategy::AnglePrioritized};
  else if (strategies == "seq") cfg.strategies = {EarStrategy::Sequential};
  else cfg.strategies = {EarStrategy::AnglePrioritized, EarStrategy::Sequential};

  const CampaignSummary summary = run_campaign(cfg);
  bool ok = true;
  for (const auto& [name, stats] : summary.by_strategy) {
    std::printf("%-5s %d/%d valid\n", name.c_str(), stats.valid, stats.maps);
    if (name != "seq" && stats.valid != stats.maps) ok = false;
  }
  if (summary.by_strategy.size() == 1 && summary.by_strategy.count("seq")) {
    const StrategyStats& stats = summary.by_strategy.at("seq");
    ok = stats.valid == stats.maps;
  }
  std::printf("rows  %zu -> %s\n", summary.rows.size(), summary.csv_path.string().c_str());
  std::printf("total %.1f s\n", summary.total_ms / 1000.0);
  return ok ? 0 : 1;
}

int cmd_check(const std::string& src_path, const std::string& dst_path) {
  const Polygon src = read_polygon(src_path);
  std::printf("%s: %d vertices\n", src_path.c_str(), src.size());
  const bool simple = is_simple(src);
  std::printf("  simple            %s\n", simple ? "yes" : "NO");
  bool ok = simple;
  if (simple) {
    const Orientation orientation = polygon_orientation(src);
    std::printf("  orientation       %s\n", orientation == Orientation::CCW   ? "ccw"
                                            : orientation == Orientation::CW ? "cw (will be normalized)"
                                                                             : "DEGENERATE");
    ok = orientation != Orientation::Collinear;
    std::printf("  strictly convex   %s\n", is_strictly_convex(src) ? "yes" : "no");
    std::printf("  kernel            %s\n", polygon_kernel(src).size() >= 3 ? "non-empty" : "empty");
  }

  if (!dst_path.empty()) {
    MappingRequest request{src, read_polygon(dst_path)};
    const std::vector<DiagnosisItem> items = diagnose(request);
    if (items.empty()) {
      std::printf("pair preconditions: all satisfied\n");
    } else {
      for (const DiagnosisItem& item : items)
        std::printf("violation: %s (%s)\n", std::string(to_string(item.code)).c_str(),
                    item.detail.c_str());
      ok = false;
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"earmap: bijective piecewise-linear maps between simple polygons"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "earmap 1.0.0");

  // map
  std::string src_path, dst_path;
  std::vector<double> disk_args;
  std::string strategy = "prio";
  std::string route = "auto";
  int rotate_target = 0;
  double shrink = 0.9;
  std::string obj_prefix, svg_path, svg_side = "A", svg_color = "stretch";
  CLI::App* map_cmd = app.add_subcommand("map", "map one polygon onto another");
  map_cmd->add_option("src", src_path, "source polygon file")->required();
  map_cmd->add_option("dst", dst_path, "target polygon file")->required();
  map_cmd->add_option("--disk", disk_args, "offset disk: cx cy r")->expected(3);
  map_cmd->add_option("--strategy", strategy, "ear strategy: prio|seq")
      ->check(CLI::IsMember({"prio", "seq"}));
  map_cmd->add_option("--route", route, "route: auto|direct|weakly")
      ->check(CLI::IsMember({"auto", "direct", "weakly"}));
  map_cmd->add_option("--rotate-target", rotate_target, "rotate target correspondence by k");
  map_cmd->add_option("--shrink", shrink, "auto disk shrink factor in (0,1)");
  map_cmd->add_option("--obj", obj_prefix, "write <prefix>_A.obj and <prefix>_B.obj");
  map_cmd->add_option("--svg", svg_path, "write an SVG of one side");
  map_cmd->add_option("--side", svg_side, "SVG side: A|B")->check(CLI::IsMember({"A", "B"}));
  map_cmd->add_option("--color", svg_color, "SVG fill: stretch|none")
      ->check(CLI::IsMember({"stretch", "none"}));

  // gen
  std::string gen_kind, gen_out;
  int gen_n = 32;
  uint64_t gen_seed = 1;
  int gen_points = 5;
  double gen_ratio = 0.4, gen_irr = 0.85, gen_spike = 0.65;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a polygon");
  gen_cmd->add_option("kind", gen_kind, "circle|square|star|splat")
      ->required()
      ->check(CLI::IsMember({"circle", "square", "star", "splat"}));
  gen_cmd->add_option("-n,--count", gen_n, "vertex count");
  gen_cmd->add_option("--seed", gen_seed, "splat seed");
  gen_cmd->add_option("--points", gen_points, "star spike count");
  gen_cmd->add_option("--ratio", gen_ratio, "star inner radius ratio");
  gen_cmd->add_option("--irregularity", gen_irr, "splat angular jitter in [0,1)");
  gen_cmd->add_option("--spikiness", gen_spike, "splat radial noise in [0,1)");
  gen_cmd->add_option("-o,--out", gen_out, "output file (default stdout)");

  // campaign
  CampaignConfig config;
  std::string campaign_strategies = "both";
  std::string campaign_out;
  CLI::App* campaign_cmd = app.add_subcommand("campaign", "batch mapping study");
  campaign_cmd->add_option("--count", config.count, "number of shapes");
  campaign_cmd->add_option("--seed", config.seed, "master seed");
  campaign_cmd->add_option("--nmin", config.n_min, "minimum vertex count");
  campaign_cmd->add_option("--nmax", config.n_max, "maximum vertex count");
  campaign_cmd->add_option("--out", campaign_out, "output directory")->required();
  campaign_cmd->add_option("--strategy", campaign_strategies, "prio|seq|both")
      ->check(CLI::IsMember({"prio", "seq", "both"}));
  campaign_cmd->add_option("--irregularity", config.irregularity, "splat angular jitter");
  campaign_cmd->add_option("--spikiness", config.spikiness, "splat radial noise");
  campaign_cmd->add_flag("--timings", config.timings_in_csv,
                         "include wall-clock columns in the CSV (non-reproducible)");
  campaign_cmd->add_option("--threads", config.threads, "worker threads (0 = auto)");

  // check
  std::string check_src, check_dst;
  CLI::App* check_cmd = app.add_subcommand("check", "validate mapping preconditions");
  check_cmd->add_option("src", check_src, "polygon file")->required();
  check_cmd->add_option("dst", check_dst, "optional target polygon file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (map_cmd->parsed())
      return cmd_map(src_path, dst_path, disk_args, strategy, route, rotate_target, shrink,
                     obj_prefix, svg_path, svg_color, svg_side);
    if (gen_cmd->parsed())
      return cmd_gen(gen_kind, gen_n, gen_seed, gen_points, gen_ratio, gen_irr, gen_spike,
                     gen_out);
    if (campaign_cmd->parsed()) {
      config.out_dir = campaign_out;
      return cmd_campaign(config, campaign_strategies);
    }
    if (check_cmd->parsed()) return cmd_check(check_src, check_dst);
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    const ValidationReport& report = e.report();
    std::fprintf(stderr, "  flipped A: %zu  degenerate A: %zu  flipped B: %zu  degenerate B: %zu\n",
                 report.flipped_a.size(), report.degenerate_a.size(), report.flipped_b.size(),
                 report.degenerate_b.size());
    return 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
