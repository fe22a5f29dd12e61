#include "graphflow/io.hpp"

#include <sstream>

#include "graphflow/error.hpp"

namespace graphflow {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    parse_error(std::string("field '") + key + "': " + e.what());
  }
}

std::vector<double> numbers(const Json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : j) {
    if (!x.is_number()) parse_error(std::string(what) + " must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Vec3 point3(const Json& j) {
  const auto v = numbers(j, "point");
  if (v.size() != 3) parse_error("points must have three coordinates");
  return {v[0], v[1], v[2]};
}

// Library validation errors on structurally bad input surface as parse errors.
template <typename F>
auto rethrow_as_parse(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidParams) parse_error(e.what());
    throw;
  }
}

}  // namespace

std::string graph_to_text(const DecoratedGraph& g) {
  std::ostringstream out;
  out << "flavor " << to_string(g.flavor) << "\n";
  out << "ext " << g.n_ext << "\n";
  out << "int " << g.n_int << "\n";
  for (const auto& e : g.edges) out << "edge " << e.from << " " << e.to << "\n";
  return out.str();
}

DecoratedGraph graph_from_text(std::string_view text) {
  DecoratedGraph g;
  bool have_flavor = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string key;
    if (!(words >> key)) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (key == "flavor") {
      std::string value;
      words >> value;
      try {
        g.flavor = flavor_from_string(value);
      } catch (const Error&) {
        parse_error(where + "unknown flavor '" + value + "'");
      }
      have_flavor = true;
    } else if (key == "ext" || key == "int") {
      int n = -1;
      if (!(words >> n) || n < 0) parse_error(where + "expected a non-negative count");
      (key == "ext" ? g.n_ext : g.n_int) = n;
    } else if (key == "edge") {
      Edge e;
      if (!(words >> e.from >> e.to)) parse_error(where + "expected 'edge <i> <j>'");
      g.edges.push_back(e);
    } else {
      parse_error(where + "unknown directive '" + key + "'");
    }
    std::string extra;
    if (words >> extra) parse_error(where + "unexpected '" + extra + "'");
  }
  if (!have_flavor) parse_error("graph text has no 'flavor' line");
  rethrow_as_parse([&] {
    validate(g);
    return 0;
  });
  return g;
}

Json graph_to_json(const DecoratedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({e.from, e.to});
  return {{"flavor", to_string(g.flavor)}, {"ext", g.n_ext}, {"int", g.n_int}, {"edges", edges}};
}

DecoratedGraph graph_from_json(const Json& j) {
  DecoratedGraph g;
  try {
    g.flavor = flavor_from_string(field<std::string>(j, "flavor"));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Parse) parse_error(e.what());
    throw;
  }
  g.n_ext = field<int>(j, "ext");
  g.n_int = field<int>(j, "int");
  for (const auto& e : field<Json>(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      parse_error("edges must be pairs of integers");
    g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  rethrow_as_parse([&] {
    validate(g);
    return 0;
  });
  return g;
}

Json graph_sum_to_json(const GraphSum& s) {
  Json out = Json::array();
  for (const auto& [g, c] : s.terms()) out.push_back({{"coeff", to_fraction_string(c)}, {"graph", graph_to_json(g)}});
  return out;
}

GraphSum graph_sum_from_json(const Json& j) {
  if (!j.is_array()) parse_error("a graph sum is a JSON array of terms");
  GraphSum s;
  for (const auto& term : j) s.add(graph_from_json(field<Json>(term, "graph")), parse_rational(field<std::string>(term, "coeff")));
  return s;
}

Json curve_to_json(const KnotCurve& k) {
  if (k.is_fourier()) {
    const auto& f = k.fourier_data();
    Json harmonics = Json::array();
    for (int c = 0; c < 3; ++c) harmonics.push_back({f.cos[c], f.sin[c]});
    Json out = {{"type", "fourier"}, {"harmonics", harmonics}};
    if (!f.warp.empty()) out["warp"] = f.warp;
    return out;
  }
  const auto& p = k.polyline_data();
  Json points = Json::array();
  for (const auto& x : p.points) points.push_back({x.x(), x.y(), x.z()});
  Json out = {{"type", "polyline"}, {"points", points}};
  if (!p.arclength.empty()) out["arclength"] = p.arclength;
  return out;
}

KnotCurve curve_from_json(const Json& j) {
  const auto type = field<std::string>(j, "type");
  return rethrow_as_parse([&] {
    if (type == "fourier") {
      const Json h = field<Json>(j, "harmonics");
      if (!h.is_array() || h.size() != 3) parse_error("harmonics must list three coordinates");
      KnotCurve::Fourier f;
      for (int c = 0; c < 3; ++c) {
        if (!h[c].is_array() || h[c].size() != 2) parse_error("each coordinate needs [cos, sin] coefficient arrays");
        f.cos[c] = numbers(h[c][0], "cosine coefficients");
        f.sin[c] = numbers(h[c][1], "sine coefficients");
      }
      KnotCurve k = KnotCurve::fourier(std::move(f));
      if (j.contains("warp")) k = k.with_warp(numbers(j["warp"], "warp"));
      return k;
    }
    if (type == "polyline") {
      std::vector<Vec3> pts;
      const Json p = field<Json>(j, "points");
      if (!p.is_array()) parse_error("points must be an array");
      for (const auto& x : p) pts.push_back(point3(x));
      std::vector<double> arc;
      if (j.contains("arclength")) arc = numbers(j["arclength"], "arclength");
      return KnotCurve::polyline(std::move(pts), std::move(arc));
    }
    parse_error("unknown curve type '" + type + "'");
  });
}

std::vector<KnotCurve> curves_from_json(const Json& j) {
  if (j.is_object() && j.value("type", "") == "link") {
    std::vector<KnotCurve> out;
    for (const auto& c : field<Json>(j, "components")) out.push_back(curve_from_json(c));
    if (out.empty()) parse_error("link has no components");
    return out;
  }
  return {curve_from_json(j)};
}

Json diagram_to_json(const GaussDiagram& d) {
  Json crossings = Json::array();
  for (const auto& c : d.crossings) crossings.push_back({{"over", c.over}, {"under", c.under}, {"sign", c.sign}});
  return {{"crossings", crossings}};
}

GaussDiagram diagram_from_json(const Json& j) {
  GaussDiagram d;
  for (const auto& c : field<Json>(j, "crossings"))
    d.crossings.push_back({field<double>(c, "over"), field<double>(c, "under"), field<int>(c, "sign")});
  validate(d);
  return d;
}

Json estimate_to_json(const IntegralEstimate& e) {
  return {{"value", e.value},
          {"std_error", e.std_error},
          {"n_samples", e.n_samples},
          {"seed", e.seed},
          {"method", to_string(e.method)}};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(e.what());
  }
}

}  // namespace graphflow
