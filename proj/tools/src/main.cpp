#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <graphflow/error.hpp>
#include <graphflow/version.hpp>

#include "cache.hpp"
#include "commands.hpp"

namespace {

using graphflow::Error;
using graphflow::ErrorCode;
using graphflow::Json;
using namespace graphflow::cli;

enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kParse = 2,
  kResourceLimit = 3,
  kValidation = 4,
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
      return kParse;
    case ErrorCode::ResourceLimit:
      return kResourceLimit;
    case ErrorCode::Validation:
    case ErrorCode::CurvesIntersect:
      return kValidation;
    default:
      return kFailure;
  }
}

int report(const std::string& kind, const std::string& message, int code) {
  const Json err = {{"error", kind}, {"message", message}, {"exit_code", code}};
  std::cerr << err.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph cohomology and configuration space integrals for knots"};
  app.set_version_flag("--version", std::string(graphflow::kVersion));
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.workers = graphflow::default_workers();
  cfg.cache_dir = default_cache_dir().string();
  std::string samples = "1e6";
  bool no_cache = false;
  std::string curve, other, graph, cocycle;
  std::vector<double> direction;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "Worker threads (default: GRAPHFLOW_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cache-dir", cfg.cache_dir, "Result cache directory");
    sub->add_flag("--no-cache", no_cache, "Neither read nor write the result cache");
  };

  auto* graphs = app.add_subcommand("graphs", "Decorated graphs, the coboundary and cocycles");
  graphs->require_subcommand(1);
  auto* g_enum = graphs->add_subcommand("enumerate", "List canonical graphs of one grade");
  auto* g_delta = graphs->add_subcommand("delta", "Coboundary of a graph or graph sum");
  auto* g_coc = graphs->add_subcommand("cocycles", "Kernel of the coboundary on degree 0");
  for (auto* sub : {g_enum, g_coc}) {
    sub->add_option("--flavor", cfg.flavor, "manifold or knot")->check(CLI::IsMember({"manifold", "knot"}));
    sub->add_option("--order", cfg.order, "Order")->check(CLI::NonNegativeNumber);
    sub->add_option("--degree", cfg.degree, "Degree")->check(CLI::NonNegativeNumber);
  }
  g_enum->add_flag("--all", cfg.all_graphs, "Include disconnected graphs");
  g_delta->add_option("--graph", graph, "Graph text, graph JSON or graph-sum JSON file")->required();

  auto* knot = app.add_subcommand("knot", "Knot curves: integrals and the combinatorial oracle");
  knot->require_subcommand(1);
  auto* k_sln = knot->add_subcommand("sln", "Self-linking (writhe) integral");
  auto* k_a2 = knot->add_subcommand("a2", "Casson invariant from planar projections");
  auto* k_v2 = knot->add_subcommand("v2", "Order-2 configuration space invariant");
  auto* k_lk = knot->add_subcommand("lk", "Gauss linking integral of two components");
  auto* k_ag = knot->add_subcommand("agamma", "Configuration space integral of one graph");
  for (auto* sub : {k_sln, k_a2, k_v2, k_lk, k_ag}) {
    sub->add_option("--curve", curve, "Curve JSON file")->required();
    sub->add_option("--eps-reg", cfg.eps_reg, "Minimum speed for regularity");
    sub->add_option("--eps-emb", cfg.eps_emb, "Minimum distance between non-adjacent points");
    common(sub);
  }
  for (auto* sub : {k_sln, k_lk}) sub->add_option("--grid", cfg.grid, "Quadrature points per axis")->check(CLI::Range(8, 1 << 16));
  for (auto* sub : {k_v2, k_ag, k_a2}) sub->add_option("--seed", cfg.seed, "Random seed");
  for (auto* sub : {k_v2, k_ag}) sub->add_option("--samples", samples, "Monte Carlo samples (e.g. 1e7)");
  k_v2->add_option("--cocycle", cocycle, "Graph-sum JSON file (default: the order-2 knot cocycle)");
  k_ag->add_option("--graph", graph, "Graph file")->required();
  k_lk->add_option("--other", other, "Second component, when --curve holds a single knot");
  k_a2->add_option("--direction", direction, "Projection direction x y z")->expected(3);
  k_a2->add_option("--directions", cfg.directions, "Number of random directions to compare")->check(CLI::PositiveNumber);
  for (auto* sub : {g_enum, g_delta, g_coc}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report("Parse", e.what(), kParse);
  }

  using Handler = std::function<Json(const RunConfig&)>;
  const std::map<CLI::App*, std::pair<std::string, Handler>> handlers = {
      {g_enum, {"graphs enumerate", graphs_enumerate}}, {g_delta, {"graphs delta", graphs_delta}},
      {g_coc, {"graphs cocycles", graphs_cocycles}},    {k_sln, {"knot sln", knot_sln}},
      {k_a2, {"knot a2", knot_a2}},                     {k_v2, {"knot v2", knot_v2}},
      {k_lk, {"knot lk", knot_lk}},                     {k_ag, {"knot agamma", knot_agamma}},
  };

  try {
    const auto it = std::find_if(handlers.begin(), handlers.end(), [](const auto& h) { return h.first->parsed(); });
    cfg.command = it->second.first;
    cfg.use_cache = !no_cache;
    if (!samples.empty()) cfg.samples = parse_count(samples);
    if (direction.size() == 3) cfg.direction = std::array<double, 3>{direction[0], direction[1], direction[2]};
    for (const auto* path : {&curve, &graph}) {
      if (!path->empty()) cfg.inputs.push_back(*path);
    }
    if (!other.empty()) cfg.inputs.push_back(other);
    if (!cocycle.empty()) cfg.inputs.push_back(cocycle);

    // Only the knot commands are expensive enough to cache.
    const bool cacheable = cfg.command.rfind("knot ", 0) == 0;
    const ResultCache cache(cfg.cache_dir, cfg.use_cache && cacheable);
    const std::string key = cacheable ? cache_key(cfg) : std::string();
    if (auto hit = cache.load(key)) {
      std::cout << *hit;
      return kOk;
    }
    Json out = it->second.second(cfg);
    out["config"] = config_to_json(cfg);
    out["version"] = graphflow::kVersion;
    const std::string document = out.dump(2) + "\n";
    cache.store(key, document);
    std::cout << document;
    return kOk;
  } catch (const Error& e) {
    return report(std::string(graphflow::to_string(e.code())), e.what(), exit_code(e.code()));
  } catch (const std::exception& e) {
    return report("Internal", e.what(), kFailure);
  }
}
