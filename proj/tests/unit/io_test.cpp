#include <doctest.h>

#include <graphflow/error.hpp>
#include <graphflow/graph_complex.hpp>
#include <graphflow/io.hpp>

#include "data.hpp"

using namespace graphflow;
namespace ref = graphflow::reference;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Validation;
}

}  // namespace

TEST_CASE("graph text round trip") {
  for (const auto& g : {ref::theta(), ref::manifold_gamma2(), ref::knot_gamma1(), ref::knot_gamma3()}) {
    CHECK(graph_from_text(graph_to_text(g)) == g);
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
  const auto g = graph_from_text("# bubble\nflavor knot\next 2\nint 2\nedge 1 3\nedge 3 4  # twice\nedge 3 4\nedge 4 2\n");
  CHECK(g == ref::knot_gamma3());
  CHECK(graph_from_text(oracle::read_text(oracle::data_path("graphs/knot_gamma3.txt"))) == ref::knot_gamma3());
}

TEST_CASE("graph text errors carry the line") {
  try {
    graph_from_text("flavor knot\next 2\nedge 1 x\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(code_of([] { graph_from_text("flavor blob\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { graph_from_text("colour red\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { graph_from_json(Json::parse(R"({"flavor":"knot","ext":2})")); }) == ErrorCode::Parse);
}

TEST_CASE("graph sums") {
  for (const auto& s : {ref::knot_order2_cocycle(), ref::manifold_order2_cocycle()})
    CHECK(graph_sum_from_json(graph_sum_to_json(s)) == s);
  const auto stored = graph_sum_from_json(parse_json(oracle::read_text(oracle::data_path("graphs/knot_order2_cocycle.json"))));
  CHECK(stored == ref::knot_order2_cocycle());
  CHECK(graph_sum_to_json(GraphSum()).dump() == "[]");
  CHECK(code_of([] { graph_sum_from_json(Json::parse(R"([{"coeff":"1/0","graph":{}}])")); }) == ErrorCode::Parse);
}

TEST_CASE("curve round trips") {
  const auto trefoil = oracle::load_curve("trefoil.json").with_warp({0.2});
  const auto back = curve_from_json(curve_to_json(trefoil));
  for (double t : {0.0, 0.3, 0.71}) CHECK((back.point(t) - trefoil.point(t)).norm() == 0);

  const auto poly = resample_arclength(trefoil, 300);
  const auto poly_back = curve_from_json(curve_to_json(poly));
  CHECK(poly_back.polyline_data().points == poly.polyline_data().points);
  CHECK(poly_back.polyline_data().arclength == poly.polyline_data().arclength);

  CHECK(oracle::load_link("hopf.json").size() == 2);
  CHECK(curves_from_json(curve_to_json(trefoil)).size() == 1);
  CHECK(code_of([] { curve_from_json(Json::parse(R"({"type":"spline"})")); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_json("{\"type\": "); }) == ErrorCode::Parse);
}

TEST_CASE("diagram and estimate JSON") {
  const GaussDiagram d{{{0.1, 0.6, 1}, {0.4, 0.9, -1}}};
  CHECK(diagram_from_json(diagram_to_json(d)).crossings == d.crossings);

  const IntegralEstimate e{0.25, 0.01, 1000, 42, Method::MonteCarlo};
  const auto j = estimate_to_json(e);
  CHECK(j.at("value") == 0.25);
  CHECK(j.at("std_error") == 0.01);
  CHECK(j.at("n_samples") == 1000);
  CHECK(j.at("seed") == 42);
  CHECK(j.at("method") == "monte_carlo");
}
