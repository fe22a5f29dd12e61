#include "graphflow/integrator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "graphflow/error.hpp"

namespace graphflow {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

// Compensated (Neumaier) running sum.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

// Uniform in [0,1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct FormEntry {
  int p, q;
  double value;
};

// Sum over assignments of coordinate pairs to forms, tracking the set of
// coordinates already used. Appending dx_p ^ dx_q (p < q) to a sorted
// product over S and sorting again costs (-1)^(#{s in S: s > p} + #{s in S: s > q}).
double wedge_sparse(const std::vector<std::vector<FormEntry>>& forms, int d) {
  thread_local std::array<double, 1 << kMaxFormDimension> slot{};
  thread_local std::array<bool, 1 << kMaxFormDimension> live{};
  thread_local std::vector<std::pair<unsigned, double>> level;
  thread_local std::vector<std::pair<unsigned, double>> next;
  thread_local std::vector<unsigned> touched;
  level.assign(1, {0u, 1.0});
  for (const auto& entries : forms) {
    touched.clear();
    for (const auto& [mask, coeff] : level) {
      for (const FormEntry& e : entries) {
        const unsigned bp = 1u << e.p;
        const unsigned bq = 1u << e.q;
        if ((mask & bp) || (mask & bq)) continue;
        const int above = std::popcount(mask >> (e.p + 1)) + std::popcount(mask >> (e.q + 1));
        const unsigned m = mask | bp | bq;
        if (!live[m]) {
          live[m] = true;
          slot[m] = 0.0;
          touched.push_back(m);
        }
        slot[m] += (above & 1 ? -coeff : coeff) * e.value;
      }
    }
    next.clear();
    for (unsigned m : touched) {
      live[m] = false;
      if (slot[m] != 0.0) next.emplace_back(m, slot[m]);
    }
    level.swap(next);
    if (level.empty()) return 0.0;
  }
  const unsigned full = d == 0 ? 0u : (1u << d) - 1u;
  for (const auto& [mask, coeff] : level)
    if (mask == full) return coeff;
  return 0.0;
}

void nonzero_entries(const TwoForm& f, std::vector<FormEntry>& out) {
  out.clear();
  for (int p = 0; p < f.dim(); ++p)
    for (int q = p + 1; q < f.dim(); ++q)
      if (f.a(p, q) != 0.0) out.push_back({p, q, f.a(p, q)});
}

// Gauss integrand between two curve points: the (s, t) coefficient of the
// pulled-back form for an edge from the first point to the second.
inline double gauss_density(const Vec3& xs, const Vec3& vs, const Vec3& xt, const Vec3& vt) {
  const Vec3 r = xt - xs;
  const double n2 = r.squaredNorm();
  return r.dot(vt.cross(vs)) / (kFourPi * n2 * std::sqrt(n2));
}

void sample_curve(const KnotCurve& k, std::size_t m, std::vector<Vec3>& x, std::vector<Vec3>& v) {
  x.resize(m);
  v.resize(m);
  for (std::size_t i = 0; i < m; ++i) k.evaluate(static_cast<double>(i) / static_cast<double>(m), x[i], v[i]);
}

// Distance between segments [p0,p1] and [q0,q1].
double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1) {
  const Vec3 d1 = p1 - p0;
  const Vec3 d2 = q1 - q0;
  const Vec3 r = p0 - q0;
  const double a = d1.squaredNorm();
  const double e = d2.squaredNorm();
  const double f = d2.dot(r);
  double s = 0;
  double t = 0;
  if (a <= 0 && e <= 0) return r.norm();
  if (a <= 0) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = d1.dot(r);
    if (e <= 0) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = d1.dot(d2);
      const double denom = a * e - b * b;
      s = denom > 0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0) {
        t = 0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1) {
        t = 1;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return (p0 + s * d1 - (q0 + t * d2)).norm();
}

// Smallest distance between the closed polygons through the samples; the
// sampled points alone can straddle a crossing point.
double polygon_distance(const std::vector<Vec3>& x1, const std::vector<Vec3>& x2) {
  const std::size_t m1 = x1.size();
  const std::size_t m2 = x2.size();
  double reach1 = 0;
  double reach2 = 0;
  for (std::size_t i = 0; i < m1; ++i) reach1 = std::max(reach1, (x1[(i + 1) % m1] - x1[i]).norm());
  for (std::size_t j = 0; j < m2; ++j) reach2 = std::max(reach2, (x2[(j + 1) % m2] - x2[j]).norm());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m1; ++i) {
    for (std::size_t j = 0; j < m2; ++j) {
      const double gap = (x2[j] - x1[i]).norm();
      best = std::min(best, gap);
      if (gap - reach1 - reach2 < best)
        best = std::min(best, segment_distance(x1[i], x1[(i + 1) % m1], x2[j], x2[(j + 1) % m2]));
    }
  }
  return best;
}

}  // namespace

void Configuration::add_knot_point(const Vec3& position, const Vec3& tangent) {
  vertices_.push_back({position, tangent, true, dim_});
  dim_ += 1;
}

void Configuration::add_space_point(const Vec3& position) {
  vertices_.push_back({position, Vec3::Zero(), false, dim_});
  dim_ += 3;
}

TwoForm gauss_two_form(const Configuration& conf, int i, int j, double min_distance) {
  if (i < 1 || j < 1 || i > conf.size() || j > conf.size() || i == j)
    throw Error(ErrorCode::InvalidParams, "gauss_two_form needs two distinct vertices of the configuration");
  if (conf.dim() > kMaxFormDimension)
    throw Error(ErrorCode::DimensionMismatch, "configuration has more than 12 coordinates");
  const auto& vi = conf.vertex(i);
  const auto& vj = conf.vertex(j);
  const Vec3 r = vj.position - vi.position;
  const double n = r.norm();
  if (!(n > min_distance)) throw Error(ErrorCode::CoincidentPoints, "configuration points coincide");
  const double scale = 1.0 / (kFourPi * n * n * n);

  // Derivatives of r = x_j - x_i with respect to each coordinate involved.
  std::array<int, 6> coord{};
  std::array<Vec3, 6> deriv;
  int count = 0;
  auto push = [&](const Configuration::Vertex& v, double s) {
    if (v.on_knot) {
      coord[count] = v.offset;
      deriv[count++] = s * v.tangent;
    } else {
      for (int a = 0; a < 3; ++a) {
        coord[count] = v.offset + a;
        deriv[count++] = s * Vec3::Unit(a);
      }
    }
  };
  push(vi, -1.0);
  push(vj, 1.0);

  TwoForm f(conf.dim());
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b) {
      const double value = scale * r.dot(deriv[a].cross(deriv[b]));
      const int p = coord[a];
      const int q = coord[b];
      f.a(p, q) += value;
      f.a(q, p) -= value;
    }
  return f;
}

double wedge_top(const std::vector<TwoForm>& forms, int d) {
  if (d < 0 || d > kMaxFormDimension || 2 * static_cast<int>(forms.size()) != d)
    throw Error(ErrorCode::DimensionMismatch,
                "wedge_top needs d = 2 * (number of forms) <= 12, got d = " + std::to_string(d));
  std::vector<std::vector<FormEntry>> entries(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].dim() != d) throw Error(ErrorCode::DimensionMismatch, "form dimension differs from d");
    nonzero_entries(forms[i], entries[i]);
  }
  return wedge_sparse(entries, d);
}

std::string to_string(Method m) { return m == Method::Quadrature ? "quadrature" : "monte_carlo"; }

IntegralEstimate sln_integral(const KnotCurve& k, std::size_t grid) {
  if (grid < 8) throw Error(ErrorCode::InvalidParams, "sln grid must be at least 8");
  validate(k);
  const std::size_t m = 4 * grid;
  std::vector<Vec3> x, v;
  sample_curve(k, m, x, v);

  // Off-diagonal sums at the three resolutions; the integrand is symmetric.
  std::array<Accumulator, 3> total;
  double magnitude = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::array<double, 3> row{};
    for (std::size_t j = i + 1; j < m; ++j) {
      const double w = gauss_density(x[i], v[i], x[j], v[j]);
      magnitude += std::abs(w);
      row[0] += w;
      if (i % 2 == 0 && j % 2 == 0) row[1] += w;
      if (i % 4 == 0 && j % 4 == 0) row[2] += w;
    }
    for (int l = 0; l < 3; ++l) total[l].add(row[l]);
  }
  const double fine = 2.0 * total[0].value() / static_cast<double>(m * m);
  const double mid = 2.0 * total[1].value() / static_cast<double>((m / 2) * (m / 2));
  const double coarse = 2.0 * total[2].value() / static_cast<double>(grid * grid);
  const double r1 = (4.0 * mid - coarse) / 3.0;
  const double r2 = (4.0 * fine - mid) / 3.0;
  const double roundoff = 2.0 * std::sqrt(static_cast<double>(m)) * kEpsilon * magnitude / static_cast<double>(m * m);
  return {r2, std::max(std::abs(r2 - r1), roundoff), static_cast<std::uint64_t>(m * m), 0, Method::Quadrature};
}

IntegralEstimate linking_integral(const KnotCurve& k1, const KnotCurve& k2, std::size_t grid, double min_distance) {
  if (grid < 8) throw Error(ErrorCode::InvalidParams, "linking grid must be at least 8");
  const std::size_t m = 2 * grid;
  std::vector<Vec3> x1, v1, x2, v2;
  sample_curve(k1, m, x1, v1);
  sample_curve(k2, m, x2, v2);

  std::array<Accumulator, 2> total;
  const double closest = polygon_distance(x1, x2);
  if (closest <= min_distance)
    throw Error(ErrorCode::CurvesIntersect, "curves come within " + std::to_string(closest) + " of each other");

  double magnitude = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::array<double, 2> row{};
    for (std::size_t j = 0; j < m; ++j) {
      const double w = gauss_density(x1[i], v1[i], x2[j], v2[j]);
      magnitude += std::abs(w);
      row[0] += w;
      if (i % 2 == 0 && j % 2 == 0) row[1] += w;
    }
    total[0].add(row[0]);
    total[1].add(row[1]);
  }
  const double fine = total[0].value() / static_cast<double>(m * m);
  const double coarse = total[1].value() / static_cast<double>(grid * grid);
  const double roundoff = std::sqrt(static_cast<double>(m)) * kEpsilon * magnitude / static_cast<double>(m * m);
  return {fine, std::max(std::abs(fine - coarse), roundoff), static_cast<std::uint64_t>(m * m), 0, Method::Quadrature};
}

int default_workers() {
  if (const char* env = std::getenv("GRAPHFLOW_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(std::min<long>(n, 256));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

IntegralEstimate a_gamma_mc(const DecoratedGraph& g, const KnotCurve& k, const McOptions& opt) {
  validate(g);
  if (g.flavor != Flavor::Knot) throw Error(ErrorCode::UnsupportedGraph, "only knot graphs have knot integrals");
  if (!is_trivalent(g)) throw Error(ErrorCode::UnsupportedGraph, "graph is not trivalent: " + describe(g));
  if (has_internal_loop(g)) throw Error(ErrorCode::UnsupportedGraph, "graph has an internal loop: " + describe(g));
  if (g.vertex_count() > 4) throw Error(ErrorCode::UnsupportedGraph, "graph has more than 4 vertices");
  if (opt.n_samples < 2 || opt.batches < 2)
    throw Error(ErrorCode::InvalidParams, "Monte Carlo needs at least 2 samples and 2 batches");
  validate(k);

  const int n = g.n_ext;
  const int t = g.n_int;
  const int d = n + 3 * t;
  const double diameter = k.diameter();
  const double r0 = opt.kernel_scale * diameter;
  const double guard = opt.collision * diameter;
  double volume = 1.0;  // measure of the cyclically ordered component: 1/(n-1)!
  for (int i = 2; i < n; ++i) volume /= i;

  const auto batches = static_cast<std::uint64_t>(std::min<std::uint64_t>(opt.batches, opt.n_samples));
  std::vector<double> batch_sum(batches, 0.0);
  std::vector<std::uint64_t> batch_count(batches, 0);

  auto run_batch = [&](std::uint64_t b) {
    std::mt19937_64 rng(derive_seed(opt.seed, b));
    const std::uint64_t count = opt.n_samples / batches + (b < opt.n_samples % batches ? 1 : 0);
    Accumulator acc;
    std::vector<double> offsets(static_cast<std::size_t>(n - 1));
    std::vector<Vec3> px(static_cast<std::size_t>(n)), pv(static_cast<std::size_t>(n));
    std::vector<Vec3> z(static_cast<std::size_t>(t));
    std::vector<std::vector<FormEntry>> entries(g.edges.size());
    Configuration conf;
    for (std::uint64_t s = 0; s < count;) {
      const double t1 = uniform01(rng);
      for (auto& o : offsets) o = uniform01(rng);
      std::sort(offsets.begin(), offsets.end());
      k.evaluate(t1, px[0], pv[0]);
      for (int i = 1; i < n; ++i) k.evaluate(t1 + offsets[static_cast<std::size_t>(i - 1)], px[i], pv[i]);

      double density = 1.0;
      for (int a = 0; a < t; ++a) {
        const auto center = static_cast<std::size_t>(std::min<double>(n - 1, std::floor(uniform01(rng) * n)));
        const double u = uniform01(rng);
        const double radius = r0 * u / (1.0 - u);
        const double cz = 2.0 * uniform01(rng) - 1.0;
        const double phi = 2.0 * std::numbers::pi * uniform01(rng);
        const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
        z[a] = px[center] + radius * Vec3(sz * std::cos(phi), sz * std::sin(phi), cz);
        double mix = 0.0;
        for (int i = 0; i < n; ++i) {
          const double rho = (z[a] - px[i]).norm();
          mix += r0 / (kFourPi * rho * rho * (r0 + rho) * (r0 + rho));
        }
        density *= mix / n;
      }

      conf.clear();
      for (int i = 0; i < n; ++i) conf.add_knot_point(px[i], pv[i]);
      for (int a = 0; a < t; ++a) conf.add_space_point(z[a]);

      bool collided = !(density > 0.0) || !std::isfinite(density);
      for (int i = 1; i <= n + t && !collided; ++i)
        for (int j = i + 1; j <= n + t && !collided; ++j)
          collided = (conf.vertex(i).position - conf.vertex(j).position).norm() <= guard;
      if (collided) continue;  // reject and redraw

      for (std::size_t e = 0; e < g.edges.size(); ++e)
        nonzero_entries(gauss_two_form(conf, g.edges[e].from, g.edges[e].to), entries[e]);
      acc.add(wedge_sparse(entries, d) * volume / density);
      ++s;
    }
    batch_sum[b] = acc.value();
    batch_count[b] = count;
  };

  const int workers = std::max(1, opt.workers > 0 ? opt.workers : default_workers());
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < batches; b = next++) run_batch(b);
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  // Reduction in batch order, so the result does not depend on scheduling.
  Accumulator total;
  for (double s : batch_sum) total.add(s);
  const double mean = total.value() / static_cast<double>(opt.n_samples);
  Accumulator spread;
  for (std::uint64_t b = 0; b < batches; ++b) {
    const double dev = batch_sum[b] / static_cast<double>(batch_count[b]) - mean;
    spread.add(dev * dev);
  }
  const double var_of_means = spread.value() / static_cast<double>(batches - 1);
  return {mean, std::sqrt(var_of_means / static_cast<double>(batches)), opt.n_samples, opt.seed,
          Method::MonteCarlo};
}

IntegralEstimate v2_invariant(const KnotCurve& k, const GraphSum& cocycle, const V2Options& opt) {
  IntegralEstimate out;
  out.seed = opt.mc.seed;
  out.method = Method::MonteCarlo;
  double variance = 0.0;
  std::uint64_t index = 0;
  for (const auto& [graph, coeff] : cocycle.terms()) {
    ++index;
    if (has_internal_loop(graph)) {
      if (opt.omit_internal_loops) continue;
      throw Error(ErrorCode::UnsupportedGraph, "graph has an internal loop: " + describe(graph));
    }
    McOptions mc = opt.mc;
    mc.seed = derive_seed(opt.mc.seed, 0x5eed0000ULL + index);
    const IntegralEstimate term = a_gamma_mc(graph, k, mc);
    const double c = static_cast<double>(coeff);
    out.value -= c * term.value;
    variance += c * c * term.std_error * term.std_error;
    out.n_samples += term.n_samples;
  }
  out.std_error = std::sqrt(variance);
  return out;
}

}  // namespace graphflow
