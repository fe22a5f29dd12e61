#pragma once

#include <cstddef>
#include <vector>

#include "graphflow/knot_curve.hpp"

namespace graphflow {

struct Crossing {
  double over = 0;   // parameter of the over strand
  double under = 0;  // parameter of the under strand
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Crossings of a knot diagram, based at parameter 0.
struct GaussDiagram {
  std::vector<Crossing> crossings;

  int writhe() const;
};

/// Throws Error(InconsistentDiagram) unless parameters lie in [0,1), are
/// pairwise distinct, and every sign is +1 or -1.
void validate(const GaussDiagram& d);

/// Moves the base point forward to parameter `t`.
GaussDiagram rotated(const GaussDiagram& d, double t);
/// Reflection through the projection plane: over and under swap, signs flip.
GaussDiagram mirrored(const GaussDiagram& d);
/// Opposite orientation of the knot; crossing signs are unchanged.
GaussDiagram reversed(const GaussDiagram& d);
/// Inserts a Reidemeister-I curl right after parameter `t`.
GaussDiagram with_kink(const GaussDiagram& d, double t, int sign, bool over_first = true);

struct ProjectionOptions {
  std::size_t min_segments = 2000;
  std::size_t max_segments = 256000;
  double min_sine = 1e-6;       // smallest |sin| of the angle between crossing strands
  double min_separation = 1e-7; // relative to the curve diameter
};

/// Projects along `direction` (viewer at +direction) and reads off the
/// crossings. Throws Error(DegenerateProjection) for tangencies, triple
/// points, or when the crossing set does not stabilize under refinement.
GaussDiagram project_to_diagram(const KnotCurve& k, const Vec3& direction, const ProjectionOptions& opt = {});

/// The Casson invariant: the coefficient of z^2 in the Conway polynomial,
/// as a signed count of based crossing pairs. The count is recomputed from
/// every base point and must agree.
long a2_oracle(const GaussDiagram& d);

}  // namespace graphflow
