#pragma once

namespace oracle {

struct TripodQuadrature {
  double min_offset = 3e-4;  // distance from the circle where the radial integral starts
  double max_offset = 60.0;
  int radial_panels = 14;
  int angular_panels = 3;
  double resolution = 8.0;  // curve samples per unit distance to the circle
};

// Configuration space integral of the tripod graph (three knot points joined
// to one free point) over the unit round circle. Deterministic: the three
// knot integrals are ordered cumulative sums, the free point is integrated
// over a half-plane cross-section in polar coordinates around the circle.
double tripod_on_circle(const TripodQuadrature& q = {});

}  // namespace oracle
