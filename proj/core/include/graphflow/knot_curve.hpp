#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace graphflow {

using Vec3 = Eigen::Vector3d;

struct CurveTolerances {
  double regular = 1e-6;   // minimum |gamma'|
  double embedded = 1e-3;  // minimum distance between non-adjacent points
  std::size_t samples = 2000;
};

/// A closed curve gamma: [0,1) -> R^3.
///
/// Two representations: a truncated Fourier series per coordinate, or a
/// closed polyline evaluated piecewise-linearly against a parameter table.
/// A Fourier curve may carry a monotone warp of its parameter,
///   phi(t) = t + sum_k w_k sin(2 pi k t) / (2 pi k),
/// so that the same image can be traversed at a different speed.
class KnotCurve {
 public:
  struct Fourier {
    // coefficients[c][k] multiply cos(2 pi k t) / sin(2 pi k t) for coordinate c.
    std::array<std::vector<double>, 3> cos;
    std::array<std::vector<double>, 3> sin;
    std::vector<double> warp;
  };

  struct Polyline {
    std::vector<Vec3> points;
    std::vector<double> params;     // ascending in [0,1), params[0] == 0
    std::vector<double> arclength;  // optional: cumulative length at each point plus the total
  };

  static KnotCurve fourier(Fourier f);
  static KnotCurve polyline(std::vector<Vec3> points, std::vector<double> arclength = {});

  bool is_fourier() const { return kind_ == Kind::Fourier; }
  const Fourier& fourier_data() const { return fourier_; }
  const Polyline& polyline_data() const { return polyline_; }

  Vec3 point(double t) const;
  Vec3 tangent(double t) const;
  void evaluate(double t, Vec3& point, Vec3& tangent) const;

  /// Highest harmonic (Fourier) or number of points (polyline).
  std::size_t resolution() const;

  KnotCurve scaled(double factor) const;
  KnotCurve with_warp(std::vector<double> warp) const;

  /// Largest distance between two of `samples` evenly spaced points.
  double diameter(std::size_t samples = 512) const;
  /// Length: trapezoid rule on |gamma'| (Fourier) or the stored/chord length (polyline).
  double length() const;

 private:
  enum class Kind { Fourier, Polyline };

  Kind kind_ = Kind::Fourier;
  Fourier fourier_;
  Polyline polyline_;
};

/// Which invariant a curve failed, if any.
struct CurveReport {
  double min_speed = 0;
  double min_separation = 0;
  bool regular = false;
  bool embedded = false;
};

CurveReport inspect(const KnotCurve& k, const CurveTolerances& tol = {});

/// Throws Error(Validation) naming the violated invariant.
void validate(const KnotCurve& k, const CurveTolerances& tol = {});

/// (p, q) torus knot on a torus with radii R > r > 0; gcd(p, q) = 1, p, q >= 1.
KnotCurve make_torus_knot(int p, int q, double major_radius, double minor_radius);

/// Unit-speed-in-parameter round circle of the given radius in the xy-plane.
KnotCurve make_circle(double radius = 1.0, const Vec3& center = Vec3::Zero());

/// n points evenly spaced in arclength, carrying the arclength table of the
/// source curve so that resampling again reproduces the same points.
KnotCurve resample_arclength(const KnotCurve& k, std::size_t n);

}  // namespace graphflow
