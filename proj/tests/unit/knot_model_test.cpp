#include <doctest.h>

#include <cmath>
#include <numbers>

#include <graphflow/error.hpp>
#include <graphflow/gauss_diagram.hpp>
#include <graphflow/knot_curve.hpp>

#include "data.hpp"
#include "skein.hpp"

using namespace graphflow;

namespace {

const std::vector<Vec3> kDirections = {Vec3(0.1, 0.2, 1).normalized(), Vec3(0.7, -0.3, 0.64).normalized(),
                                       Vec3(-0.35, 0.8, 0.5).normalized(), Vec3(0.9, 0.1, -0.42).normalized()};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Parse;
}

std::vector<long> conway(const GaussDiagram& d) { return oracle::conway(oracle::from_knot_diagram(d)); }

GaussDiagram standard_trefoil() {
  // Alternating 3-crossing diagram, crossings met over, under, over, ... from the base point.
  return {{{0.0, 0.5, 1}, {1.0 / 3, 5.0 / 6, 1}, {2.0 / 3, 1.0 / 6, 1}}};
}

GaussDiagram standard_figure_eight() {
  // Gauss code U1 O2 U3 O1 U4 O3 U2 O4.
  const double s = 1.0 / 8;
  return {{{3 * s, 0 * s, 1}, {1 * s, 6 * s, -1}, {5 * s, 2 * s, -1}, {7 * s, 4 * s, 1}}};
}

}  // namespace

TEST_CASE("torus knot parameters are checked") {
  CHECK(code_of([] { make_torus_knot(1, 0, 2, 1); }) == ErrorCode::InvalidParams);
  CHECK(code_of([] { make_torus_knot(2, 4, 2, 0.5); }) == ErrorCode::InvalidParams);
  CHECK(code_of([] { make_torus_knot(2, 3, 0.5, 2); }) == ErrorCode::InvalidParams);
  CHECK_NOTHROW(make_torus_knot(3, 2, 2, 0.5));
}

TEST_CASE("Fourier curves close up and warp keeps the image") {
  const auto k = make_torus_knot(2, 3, 2, 0.5);
  CHECK((k.point(0) - k.point(1)).norm() < 1e-12);
  const auto w = k.with_warp({0.3, -0.2});
  for (double t : {0.1, 0.37, 0.82}) {
    const double phi = t + 0.3 * std::sin(2 * std::numbers::pi * t) / (2 * std::numbers::pi) -
                       0.2 * std::sin(4 * std::numbers::pi * t) / (4 * std::numbers::pi);
    CHECK((w.point(t) - k.point(phi)).norm() < 1e-12);
  }
  CHECK(code_of([&] { k.with_warp({0.7, 0.6}); }) == ErrorCode::InvalidParams);
  CHECK(k.scaled(2).diameter() == doctest::Approx(2 * k.diameter()).epsilon(1e-12));
}

TEST_CASE("validation names the violated invariant") {
  KnotCurve::Fourier f;
  for (auto& c : f.cos) c = {0, 0};
  for (auto& c : f.sin) c = {0, 0};
  f.cos[0] = {0, 1};
  f.sin[1] = {0, 0, 1};  // (cos 2 pi t, sin 4 pi t, 0): a planar figure eight through the origin
  const auto crossing = KnotCurve::fourier(f);
  try {
    validate(crossing);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Validation);
    CHECK(std::string(e.what()).find("embedded") != std::string::npos);
  }

  const auto still = KnotCurve::polyline({Vec3(0, 0, 0), Vec3(0, 0, 0), Vec3(1, 0, 0)});
  try {
    validate(still);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("regular") != std::string::npos);
  }

  CHECK_NOTHROW(validate(make_circle()));
  CHECK(inspect(make_circle()).embedded);
}

TEST_CASE("arclength resampling") {
  const auto square = resample_arclength(make_circle(), 4);
  const auto& pts = square.polyline_data().points;
  REQUIRE(pts.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK((pts[i] - pts[(i + 1) % 4]).norm() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(square.polyline_data().arclength.back() == doctest::Approx(2 * std::numbers::pi).epsilon(1e-6));

  for (const auto& k : {oracle::load_curve("trefoil.json"), oracle::load_curve("figure_eight.json")}) {
    const auto once = resample_arclength(k, 500);
    const auto twice = resample_arclength(once, 500);
    double worst = 0;
    for (std::size_t i = 0; i < 500; ++i)
      worst = std::max(worst, (once.polyline_data().points[i] - twice.polyline_data().points[i]).norm());
    CHECK(worst <= 1e-9);
  }

  const auto fine = resample_arclength(make_torus_knot(2, 3, 2, 0.5), 2000);
  CHECK_NOTHROW(validate(fine, CurveTolerances{1e-6, 1e-3, 2000}));
}

TEST_CASE("projection examples") {
  CHECK(project_to_diagram(make_circle(), kDirections[1]).crossings.empty());

  const auto trefoil = project_to_diagram(make_torus_knot(2, 3, 2, 0.5), kDirections[0]);
  REQUIRE(trefoil.crossings.size() == 3);
  CHECK(std::abs(trefoil.writhe()) == 3);

  const auto eight = project_to_diagram(oracle::load_curve("figure_eight.json"), Vec3(0, 0, 1));
  CHECK(eight.crossings.size() == 4);
  CHECK(eight.writhe() == 0);
}

TEST_CASE("crossing sign convention") {
  // Two straight strands crossing at the origin, over strand along +x above
  // the under strand along +y, viewed from +z: a positive crossing.
  const auto k = KnotCurve::polyline({Vec3(-1, 0, 0.2), Vec3(1, 0, 0.2), Vec3(1, -1, 0.2), Vec3(0, -1, -0.2),
                                      Vec3(0, 1, -0.2), Vec3(-1, 1, 0.2)});
  const auto d = project_to_diagram(k, Vec3(0, 0, 1));
  REQUIRE(d.crossings.size() == 1);
  CHECK(d.crossings[0].sign == 1);
  CHECK(d.crossings[0].over < d.crossings[0].under);
  CHECK(project_to_diagram(k, Vec3(0, 0, -1)).crossings[0].sign == 1);
}

TEST_CASE("a2 of standard diagrams") {
  CHECK(a2_oracle({}) == 0);
  CHECK(a2_oracle(standard_trefoil()) == 1);
  CHECK(a2_oracle(standard_figure_eight()) == -1);
  CHECK(conway(standard_trefoil()) == std::vector<long>{1, 0, 1});
  CHECK(conway(standard_figure_eight()) == std::vector<long>{1, 0, -1});
  CHECK(conway({}) == std::vector<long>{1});
}

TEST_CASE("a2 is invariant under diagram moves") {
  for (const auto& d : {standard_trefoil(), standard_figure_eight()}) {
    const long a = a2_oracle(d);
    for (double t : {0.05, 0.4, 0.77}) CHECK(a2_oracle(rotated(d, t)) == a);
    CHECK(a2_oracle(mirrored(d)) == a);
    CHECK(a2_oracle(reversed(d)) == a);
    CHECK(a2_oracle(reversed(mirrored(d))) == a);
    for (int sign : {1, -1})
      for (bool over_first : {true, false}) {
        const auto kinked = with_kink(d, 0.3, sign, over_first);
        CHECK(kinked.writhe() == d.writhe() + sign);
        CHECK(a2_oracle(kinked) == a);
        CHECK(oracle::conway_coefficient(conway(kinked), 2) == a);
      }
  }
}

TEST_CASE("diagram validation") {
  CHECK(code_of([] { a2_oracle({{{0.2, 0.2, 1}}}); }) == ErrorCode::InconsistentDiagram);
  CHECK(code_of([] { a2_oracle({{{0.2, 1.2, 1}}}); }) == ErrorCode::InconsistentDiagram);
  CHECK(code_of([] { a2_oracle({{{0.2, 0.4, 2}}}); }) == ErrorCode::InconsistentDiagram);
}

TEST_CASE("projected a2 agrees across directions and with the skein oracle") {
  const std::vector<std::pair<std::string, long>> cases = {
      {"circle.json", 0}, {"trefoil.json", 1}, {"trefoil_isotope.json", 1}, {"figure_eight.json", -1}, {"torus_2_5.json", 3}};
  for (const auto& [file, expected] : cases) {
    const auto k = oracle::load_curve(file);
    for (const auto& dir : kDirections) {
      CAPTURE(file);
      const auto d = project_to_diagram(k, dir);
      CHECK(a2_oracle(d) == expected);
      const auto c = conway(d);
      CHECK(oracle::conway_coefficient(c, 0) == 1);
      CHECK(oracle::conway_coefficient(c, 2) == expected);
    }
  }
  const auto unknot = make_torus_knot(1, 1, 2, 0.5);
  for (const auto& dir : kDirections) CHECK(a2_oracle(project_to_diagram(unknot, dir)) == 0);
}

TEST_CASE("skein oracle on links") {
  // Hopf link: two components, two positive crossings; Conway polynomial z.
  oracle::LinkDiagram hopf;
  hopf.components = {{{0, true}, {1, false}}, {{0, false}, {1, true}}};
  hopf.signs = {1, 1};
  CHECK(oracle::conway(hopf) == std::vector<long>{0, 1});
  hopf.signs = {-1, -1};
  for (auto& w : hopf.components)
    for (auto& p : w) p.over = !p.over;
  CHECK(oracle::conway(hopf) == std::vector<long>{0, -1});
}
