#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <graphflow/cocycle_solver.hpp>
#include <graphflow/error.hpp>
#include <graphflow/gauss_diagram.hpp>
#include <graphflow/graph_complex.hpp>
#include <graphflow/version.hpp>

#include "cache.hpp"

namespace graphflow::cli {

namespace {

CurveTolerances tolerances(const RunConfig& c) {
  CurveTolerances t;
  t.regular = c.eps_reg;
  t.embedded = c.eps_emb;
  return t;
}

std::vector<KnotCurve> load_curves(const std::string& path) { return curves_from_json(parse_json(read_file(path))); }

const std::string& require_input(const RunConfig& c, std::size_t i, const char* what) {
  if (c.inputs.size() <= i) throw Error(ErrorCode::Parse, std::string("missing ") + what);
  return c.inputs[i];
}

KnotCurve load_knot(const RunConfig& c) {
  auto curves = load_curves(require_input(c, 0, "--curve"));
  if (curves.size() != 1) throw Error(ErrorCode::Parse, "expected a single knot, got a link");
  validate(curves[0], tolerances(c));
  return curves[0];
}

std::string curve_hash(const KnotCurve& k) { return sha256_hex(curve_to_json(k).dump()); }

// A graph file holds graph text, a graph JSON object, or a graph sum array.
GraphSum load_graph_sum(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    const Json j = parse_json(text);
    if (j.is_array()) return graph_sum_from_json(j);
    return GraphSum(graph_from_json(j));
  }
  return GraphSum(graph_from_text(text));
}

DecoratedGraph load_graph(const std::string& path) {
  const GraphSum s = load_graph_sum(path);
  if (s.size() != 1) throw Error(ErrorCode::Parse, "expected a single graph in " + path);
  const auto& [g, coeff] = *s.terms().begin();
  if (coeff != 1 && coeff != -1) throw Error(ErrorCode::Parse, "expected a single graph in " + path);
  return g;
}

Json estimate_fields(Json out, const IntegralEstimate& e) {
  out.update(estimate_to_json(e));
  return out;
}

McOptions mc_options(const RunConfig& c) {
  McOptions o;
  o.n_samples = c.samples;
  o.seed = c.seed;
  o.workers = c.workers;
  return o;
}

Vec3 random_direction(std::mt19937_64& rng) {
  auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double z = 2.0 * u() - 1.0;
  const double phi = 2.0 * std::numbers::pi * u();
  const double s = std::sqrt(1.0 - z * z);
  return {s * std::cos(phi), s * std::sin(phi), z};
}

}  // namespace

Json config_to_json(const RunConfig& c) {
  Json j = {{"command", c.command},
            {"inputs", c.inputs},
            {"flavor", c.flavor},
            {"order", c.order},
            {"degree", c.degree},
            {"all_graphs", c.all_graphs},
            {"samples", c.samples},
            {"seed", c.seed},
            {"grid", c.grid},
            {"workers", c.workers},
            {"directions", c.directions},
            {"eps_reg", c.eps_reg},
            {"eps_emb", c.eps_emb},
            {"cache_dir", c.cache_dir},
            {"use_cache", c.use_cache}};
  j["direction"] = c.direction ? Json(*c.direction) : Json(nullptr);
  return j;
}

std::uint64_t parse_count(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "not a number: '" + text + "'");
  }
  if (used != text.size() || !(v >= 1) || v > 1e15 || v != std::floor(v))
    throw Error(ErrorCode::Parse, "expected a positive integer count, got '" + text + "'");
  return static_cast<std::uint64_t>(v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json graphs_enumerate(const RunConfig& c) {
  const Flavor f = flavor_from_string(c.flavor);
  const auto graphs = enumerate(f, c.order, c.degree, !c.all_graphs);
  Json list = Json::array();
  for (const auto& g : graphs) list.push_back(graph_to_json(g));
  return {{"op", "enumerate"}, {"flavor", c.flavor}, {"order", c.order}, {"degree", c.degree},
          {"connected", !c.all_graphs}, {"count", graphs.size()}, {"graphs", list}};
}

Json graphs_delta(const RunConfig& c) {
  const GraphSum s = load_graph_sum(require_input(c, 0, "--graph"));
  return {{"op", "delta"}, {"input", graph_sum_to_json(s)}, {"delta", graph_sum_to_json(delta(s))}};
}

Json graphs_cocycles(const RunConfig& c) {
  const DeltaMatrix dm = delta_matrix(flavor_from_string(c.flavor), c.order, c.degree);
  Json cocycles = Json::array();
  for (const auto& v : kernel_basis(dm.matrix)) cocycles.push_back(graph_sum_to_json(combine(dm.domain, v)));
  Json domain = Json::array();
  for (const auto& g : dm.domain) domain.push_back(graph_to_json(g));
  return {{"op", "cocycles"},
          {"flavor", c.flavor},
          {"order", c.order},
          {"degree", c.degree},
          {"domain", domain},
          {"codomain_size", dm.codomain.size()},
          {"rank", rank(dm.matrix)},
          {"cocycles", cocycles}};
}

Json knot_sln(const RunConfig& c) {
  const KnotCurve k = load_knot(c);
  return estimate_fields({{"op", "sln"}, {"curve_hash", curve_hash(k)}, {"grid", c.grid}}, sln_integral(k, c.grid));
}

Json knot_a2(const RunConfig& c) {
  const KnotCurve k = load_knot(c);
  std::vector<Vec3> dirs;
  if (c.direction) dirs.push_back({(*c.direction)[0], (*c.direction)[1], (*c.direction)[2]});
  std::mt19937_64 rng(c.seed);
  const int wanted = c.direction ? 1 : c.directions;

  Json projections = Json::array();
  std::optional<long> value;
  GaussDiagram first;
  int attempts = 0;
  while (static_cast<int>(projections.size()) < wanted) {
    if (++attempts > 10 * wanted + 10)
      throw Error(ErrorCode::DegenerateProjection, "no generic projection direction found");
    const Vec3 d = c.direction ? dirs[0] : random_direction(rng);
    GaussDiagram diagram;
    try {
      diagram = project_to_diagram(k, d);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateProjection || c.direction) throw;
      continue;  // perturb: draw the next direction
    }
    const long a2 = a2_oracle(diagram);
    if (value && *value != a2)
      throw Error(ErrorCode::InconsistentDiagram, "a2 differs between projection directions");
    if (!value) first = diagram;
    value = a2;
    projections.push_back({{"direction", {d.x(), d.y(), d.z()}},
                           {"crossings", diagram.crossings.size()},
                           {"writhe", diagram.writhe()},
                           {"a2", a2}});
  }
  return {{"op", "a2"}, {"a2", *value}, {"curve_hash", curve_hash(k)}, {"projections", projections},
          {"diagram", diagram_to_json(first)}};
}

Json knot_v2(const RunConfig& c) {
  const KnotCurve k = load_knot(c);
  const GraphSum cocycle =
      c.inputs.size() > 1 ? load_graph_sum(c.inputs[1]) : reference::knot_order2_cocycle();
  Json omitted = Json::array();
  for (const auto& [g, coeff] : cocycle.terms())
    if (has_internal_loop(g)) omitted.push_back({{"coeff", to_fraction_string(coeff)}, {"graph", graph_to_json(g)}});
  V2Options opt;
  opt.mc = mc_options(c);
  return estimate_fields({{"op", "v2"},
                          {"curve_hash", curve_hash(k)},
                          {"cocycle", graph_sum_to_json(cocycle)},
                          {"omitted_terms", omitted}},
                         v2_invariant(k, cocycle, opt));
}

Json knot_lk(const RunConfig& c) {
  std::vector<KnotCurve> curves = load_curves(require_input(c, 0, "--curve"));
  if (c.inputs.size() > 1) {
    for (auto& k : load_curves(c.inputs[1])) curves.push_back(std::move(k));
  }
  if (curves.size() != 2) throw Error(ErrorCode::Parse, "linking needs exactly two components");
  for (const auto& k : curves) validate(k, tolerances(c));
  return estimate_fields({{"op", "lk"}, {"curve_hash", {curve_hash(curves[0]), curve_hash(curves[1])}}, {"grid", c.grid}},
                         linking_integral(curves[0], curves[1], c.grid, c.eps_emb));
}

Json knot_agamma(const RunConfig& c) {
  const KnotCurve k = load_knot(c);
  const DecoratedGraph g = load_graph(require_input(c, 1, "--graph"));
  return estimate_fields({{"op", "a_gamma"}, {"graph", graph_to_json(g)}, {"curve_hash", curve_hash(k)}},
                         a_gamma_mc(g, k, mc_options(c)));
}

std::string cache_key(const RunConfig& c) {
  Json contents = Json::array();
  for (const auto& path : c.inputs) contents.push_back(sha256_hex(read_file(path)));
  Json key = config_to_json(c);
  // Results do not depend on these, so they must not split the cache.
  key.erase("inputs");
  key.erase("workers");
  key.erase("cache_dir");
  key.erase("use_cache");
  key["input_sha256"] = contents;
  key["version"] = kVersion;
  return key.dump();
}

}  // namespace graphflow::cli
