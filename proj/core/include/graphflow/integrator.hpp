#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "graphflow/graph.hpp"
#include "graphflow/graph_sum.hpp"
#include "graphflow/knot_curve.hpp"

namespace graphflow {

inline constexpr int kMaxFormDimension = 12;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Antisymmetric coefficient matrix of a 2-form, sum_{p<q} a(p,q) dx_p ^ dx_q.
struct TwoForm {
  using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxFormDimension, kMaxFormDimension>;

  Matrix a;

  explicit TwoForm(int dim = 0) : a(Matrix::Zero(dim, dim)) {}
  int dim() const { return static_cast<int>(a.rows()); }
  void set(int p, int q, double value) {
    a(p, q) = value;
    a(q, p) = -value;
  }
  TwoForm operator-() const {
    TwoForm f;
    f.a = -a;
    return f;
  }
};

/// A point of a configuration space: vertices on the knot carry one
/// coordinate (the curve parameter), free vertices carry three.
class Configuration {
 public:
  struct Vertex {
    Vec3 position;
    Vec3 tangent;  // gamma'(t) for knot vertices; unused otherwise
    bool on_knot = false;
    int offset = 0;  // first coordinate index
  };

  void add_knot_point(const Vec3& position, const Vec3& tangent);
  void add_space_point(const Vec3& position);
  void clear() {
    vertices_.clear();
    dim_ = 0;
  }

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  /// 1-based, matching graph vertex labels.
  const Vertex& vertex(int label) const { return vertices_.at(static_cast<std::size_t>(label - 1)); }
  void set_position(int label, const Vec3& position) { vertices_.at(static_cast<std::size_t>(label - 1)).position = position; }

 private:
  std::vector<Vertex> vertices_;
  int dim_ = 0;
};

/// Pullback of the unit area form of S^2 along (x_j - x_i)/|x_j - x_i|.
/// Throws Error(CoincidentPoints) when |x_j - x_i| <= min_distance.
TwoForm gauss_two_form(const Configuration& conf, int i, int j, double min_distance = 0.0);

/// Coefficient of dx_1 ^ ... ^ dx_d in the wedge product of the forms.
/// Throws Error(DimensionMismatch) unless 2 * forms.size() == d <= 12 and
/// every form has dimension d.
double wedge_top(const std::vector<TwoForm>& forms, int d);

enum class Method { Quadrature, MonteCarlo };
std::string to_string(Method m);

struct IntegralEstimate {
  double value = 0;
  double std_error = 0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  Method method = Method::Quadrature;
};

/// Writhe integral of the Gauss form over pairs of points on the knot,
/// by trapezoid rules on grid, 2*grid and 4*grid points per axis with two
/// Richardson steps. The diagonal is left out: the integrand tends to 0 there.
IntegralEstimate sln_integral(const KnotCurve& k, std::size_t grid = 1024);

/// Gauss linking integral. Throws Error(CurvesIntersect) when the curves come
/// within `min_distance` of each other.
IntegralEstimate linking_integral(const KnotCurve& k1, const KnotCurve& k2, std::size_t grid = 1024,
                                  double min_distance = 1e-3);

struct McOptions {
  std::uint64_t n_samples = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  int batches = 64;
  int workers = 0;              // 0: GRAPHFLOW_WORKERS, else hardware concurrency
  double kernel_scale = 0.1;    // kernel radius as a fraction of the curve diameter
  double collision = 1e-9;      // rejection radius as a fraction of the curve diameter
};

/// Worker count from GRAPHFLOW_WORKERS, falling back to the hardware.
int default_workers();

/// Monte Carlo estimate of the configuration space integral attached to a
/// trivalent knot graph without internal loops and with at most 4 vertices.
/// Knot parameters are drawn on the cyclically ordered component; free
/// points come from a mixture of heavy-tailed kernels centred on the knot
/// points. Throws Error(UnsupportedGraph) for other graphs.
IntegralEstimate a_gamma_mc(const DecoratedGraph& g, const KnotCurve& k, const McOptions& opt = {});

struct V2Options {
  McOptions mc;
  /// Terms with internal loops have no flat-space integral here. When true
  /// they are dropped from the sum; when false they raise UnsupportedGraph.
  bool omit_internal_loops = true;
};

/// Normalized sum over a knot cocycle: -sum_G coeff(G) A_G. The global sign
/// makes the value increase by a2 across knot types.
IntegralEstimate v2_invariant(const KnotCurve& k, const GraphSum& cocycle, const V2Options& opt = {});

}  // namespace graphflow
