#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphflow/gauss_diagram.hpp"
#include "graphflow/graph.hpp"
#include "graphflow/graph_sum.hpp"
#include "graphflow/integrator.hpp"
#include "graphflow/knot_curve.hpp"

namespace graphflow {

using Json = nlohmann::json;

// Graph text format, one directive per line ('#' starts a comment):
//   flavor manifold|knot
//   ext <n>
//   int <n>
//   edge <i> <j>
std::string graph_to_text(const DecoratedGraph& g);
DecoratedGraph graph_from_text(std::string_view text);

// {"flavor": "knot", "ext": 4, "int": 0, "edges": [[1, 3], [2, 4]]}
Json graph_to_json(const DecoratedGraph& g);
DecoratedGraph graph_from_json(const Json& j);

// [{"coeff": "p/q", "graph": {...}}, ...] in canonical order.
Json graph_sum_to_json(const GraphSum& s);
GraphSum graph_sum_from_json(const Json& j);

// {"type": "fourier", "harmonics": [[cos_x, sin_x], [cos_y, sin_y], [cos_z, sin_z]], "warp": [...]}
// {"type": "polyline", "points": [[x, y, z], ...], "arclength": [...]}
Json curve_to_json(const KnotCurve& k);
KnotCurve curve_from_json(const Json& j);

/// A curve file holds one curve, or {"type": "link", "components": [...]}.
std::vector<KnotCurve> curves_from_json(const Json& j);

// {"crossings": [{"over": t1, "under": t2, "sign": 1}, ...]}
Json diagram_to_json(const GaussDiagram& d);
GaussDiagram diagram_from_json(const Json& j);

Json estimate_to_json(const IntegralEstimate& e);

/// Parses JSON text, mapping syntax errors to Error(Parse).
Json parse_json(std::string_view text);

}  // namespace graphflow
