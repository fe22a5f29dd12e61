#include "graphflow/knot_curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>

#include "graphflow/error.hpp"

namespace graphflow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_unit(double t) {
  t -= std::floor(t);
  return t >= 1.0 ? 0.0 : t;
}

}  // namespace

KnotCurve KnotCurve::fourier(Fourier f) {
  std::size_t h = 0;
  for (int c = 0; c < 3; ++c) h = std::max({h, f.cos[c].size(), f.sin[c].size()});
  if (h == 0) throw Error(ErrorCode::InvalidParams, "Fourier curve has no coefficients");
  for (int c = 0; c < 3; ++c) {
    f.cos[c].resize(h, 0.0);
    f.sin[c].resize(h, 0.0);
  }
  KnotCurve k;
  k.kind_ = Kind::Fourier;
  k.fourier_ = std::move(f);
  return k;
}

KnotCurve KnotCurve::polyline(std::vector<Vec3> points, std::vector<double> arclength) {
  const std::size_t n = points.size();
  if (n < 3) throw Error(ErrorCode::InvalidParams, "polyline needs at least 3 points");
  if (!arclength.empty() && arclength.size() != n + 1)
    throw Error(ErrorCode::InvalidParams, "arclength table must have one entry per point plus the total");

  KnotCurve k;
  k.kind_ = Kind::Polyline;
  k.polyline_.points = std::move(points);
  k.polyline_.params.resize(n);
  if (arclength.empty()) {
    for (std::size_t i = 0; i < n; ++i) k.polyline_.params[i] = static_cast<double>(i) / static_cast<double>(n);
  } else {
    const double total = arclength.back();
    for (std::size_t i = 0; i < n; ++i) {
      k.polyline_.params[i] = (arclength[i] - arclength[0]) / total;
      if (i > 0 && k.polyline_.params[i] <= k.polyline_.params[i - 1])
        throw Error(ErrorCode::InvalidParams, "arclength table must be strictly increasing");
    }
    k.polyline_.arclength = std::move(arclength);
  }
  return k;
}

void KnotCurve::evaluate(double t, Vec3& point, Vec3& tangent) const {
  t = wrap_unit(t);
  if (kind_ == Kind::Fourier) {
    const auto& f = fourier_;
    double phase = t;
    double speed = 1.0;
    for (std::size_t k = 0; k < f.warp.size(); ++k) {
      const double w = kTwoPi * static_cast<double>(k + 1);
      phase += f.warp[k] * std::sin(w * t) / w;
      speed += f.warp[k] * std::cos(w * t);
    }
    const double theta = kTwoPi * phase;
    const double c1 = std::cos(theta);
    const double s1 = std::sin(theta);
    double ck = 1.0;
    double sk = 0.0;
    point.setZero();
    tangent.setZero();
    const std::size_t h = f.cos[0].size();
    for (std::size_t k = 0; k < h; ++k) {
      if (k > 0) {
        const double next_c = ck * c1 - sk * s1;
        sk = sk * c1 + ck * s1;
        ck = next_c;
      }
      const double dk = kTwoPi * static_cast<double>(k);
      for (int c = 0; c < 3; ++c) {
        point[c] += f.cos[c][k] * ck + f.sin[c][k] * sk;
        tangent[c] += dk * (f.sin[c][k] * ck - f.cos[c][k] * sk);
      }
    }
    tangent *= speed;
    return;
  }

  const auto& p = polyline_;
  const std::size_t n = p.points.size();
  const auto it = std::upper_bound(p.params.begin(), p.params.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - p.params.begin()) - 1;
  const std::size_t j = (i + 1) % n;
  const double t0 = p.params[i];
  const double t1 = j == 0 ? 1.0 : p.params[j];
  const double a = (t - t0) / (t1 - t0);
  tangent = (p.points[j] - p.points[i]) / (t1 - t0);
  point = p.points[i] + a * (p.points[j] - p.points[i]);
}

Vec3 KnotCurve::point(double t) const {
  Vec3 p, v;
  evaluate(t, p, v);
  return p;
}

Vec3 KnotCurve::tangent(double t) const {
  Vec3 p, v;
  evaluate(t, p, v);
  return v;
}

std::size_t KnotCurve::resolution() const {
  return kind_ == Kind::Fourier ? fourier_.cos[0].size() - 1 : polyline_.points.size();
}

KnotCurve KnotCurve::scaled(double factor) const {
  KnotCurve k = *this;
  if (kind_ == Kind::Fourier) {
    for (int c = 0; c < 3; ++c) {
      for (auto& x : k.fourier_.cos[c]) x *= factor;
      for (auto& x : k.fourier_.sin[c]) x *= factor;
    }
  } else {
    for (auto& p : k.polyline_.points) p *= factor;
    for (auto& s : k.polyline_.arclength) s *= factor;
  }
  return k;
}

KnotCurve KnotCurve::with_warp(std::vector<double> warp) const {
  if (kind_ != Kind::Fourier) throw Error(ErrorCode::InvalidParams, "only Fourier curves can be warped");
  double total = 0;
  for (double w : warp) total += std::abs(w);
  if (total >= 1.0) throw Error(ErrorCode::InvalidParams, "warp must satisfy sum |w_k| < 1");
  KnotCurve k = *this;
  k.fourier_.warp = std::move(warp);
  return k;
}

double KnotCurve::diameter(std::size_t samples) const {
  std::vector<Vec3> pts(samples);
  for (std::size_t i = 0; i < samples; ++i) pts[i] = point(static_cast<double>(i) / static_cast<double>(samples));
  double best = 0;
  for (std::size_t i = 0; i < samples; ++i)
    for (std::size_t j = i + 1; j < samples; ++j) best = std::max(best, (pts[i] - pts[j]).squaredNorm());
  return std::sqrt(best);
}

double KnotCurve::length() const {
  if (kind_ == Kind::Polyline) {
    if (!polyline_.arclength.empty()) return polyline_.arclength.back() - polyline_.arclength.front();
    const auto& pts = polyline_.points;
    double total = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) total += (pts[(i + 1) % pts.size()] - pts[i]).norm();
    return total;
  }
  // Periodic trapezoid rule converges spectrally for smooth curves.
  const std::size_t m = 1 << 16;
  double total = 0;
  for (std::size_t i = 0; i < m; ++i) total += tangent(static_cast<double>(i) / m).norm();
  return total / static_cast<double>(m);
}

CurveReport inspect(const KnotCurve& k, const CurveTolerances& tol) {
  std::vector<Vec3> pts;
  std::vector<double> speed;
  if (!k.is_fourier() && k.polyline_data().points.size() >= tol.samples) {
    pts = k.polyline_data().points;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
      const double dt = (i + 1 < n ? k.polyline_data().params[i + 1] : 1.0) - k.polyline_data().params[i];
      speed.push_back((pts[(i + 1) % n] - pts[i]).norm() / dt);
    }
  } else {
    const std::size_t n = tol.samples;
    for (std::size_t i = 0; i < n; ++i) {
      Vec3 p, v;
      k.evaluate(static_cast<double>(i) / static_cast<double>(n), p, v);
      pts.push_back(p);
      speed.push_back(v.norm());
    }
  }
  const std::size_t n = pts.size();

  CurveReport r;
  r.min_speed = *std::min_element(speed.begin(), speed.end());
  r.regular = r.min_speed > tol.regular;

  // Arclength along the samples decides which pairs count as non-adjacent.
  std::vector<double> arc(n + 1, 0.0);
  double h_max = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double h = (pts[(i + 1) % n] - pts[i]).norm();
    h_max = std::max(h_max, h);
    arc[i + 1] = arc[i] + h;
  }
  const double total = arc[n];
  const double gap = std::max(2.5 * h_max, 4.0 * tol.embedded);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double along = arc[j] - arc[i];
      if (std::min(along, total - along) < gap) continue;
      best = std::min(best, (pts[i] - pts[j]).squaredNorm());
    }
  }
  r.min_separation = std::sqrt(best);
  r.embedded = r.min_separation > tol.embedded;
  return r;
}

void validate(const KnotCurve& k, const CurveTolerances& tol) {
  const CurveReport r = inspect(k, tol);
  if (!r.regular)
    throw Error(ErrorCode::Validation,
                "regular: minimum speed " + std::to_string(r.min_speed) + " <= " + std::to_string(tol.regular));
  if (!r.embedded)
    throw Error(ErrorCode::Validation, "embedded: non-adjacent points " + std::to_string(r.min_separation) +
                                           " apart, need > " + std::to_string(tol.embedded));
}

KnotCurve make_torus_knot(int p, int q, double major_radius, double minor_radius) {
  if (p < 1 || q < 1) throw Error(ErrorCode::InvalidParams, "torus knot needs p, q >= 1");
  if (std::gcd(p, q) != 1) throw Error(ErrorCode::InvalidParams, "torus knot needs gcd(p, q) = 1");
  if (!(minor_radius > 0) || !(major_radius > minor_radius))
    throw Error(ErrorCode::InvalidParams, "torus knot needs R > r > 0");

  // (R + r cos qu) cos pu = R cos pu + r/2 [cos (p+q)u + cos (p-q)u], and
  // likewise for the sine; collect everything by harmonic.
  KnotCurve::Fourier f;
  const auto h = static_cast<std::size_t>(p + q);
  for (int c = 0; c < 3; ++c) {
    f.cos[c].assign(h + 1, 0.0);
    f.sin[c].assign(h + 1, 0.0);
  }
  auto add = [&](int c, int k, double cos_coeff, double sin_coeff) {
    // Fold negative harmonics: cos(-ku) = cos(ku), sin(-ku) = -sin(ku).
    if (k < 0) {
      k = -k;
      sin_coeff = -sin_coeff;
    }
    f.cos[c][static_cast<std::size_t>(k)] += cos_coeff;
    if (k > 0) f.sin[c][static_cast<std::size_t>(k)] += sin_coeff;
  };
  add(0, p, major_radius, 0);
  add(0, p + q, minor_radius / 2, 0);
  add(0, p - q, minor_radius / 2, 0);
  add(1, p, 0, major_radius);
  add(1, p + q, 0, minor_radius / 2);
  add(1, p - q, 0, minor_radius / 2);
  add(2, q, 0, minor_radius);

  KnotCurve k = KnotCurve::fourier(std::move(f));
  validate(k);
  return k;
}

KnotCurve make_circle(double radius, const Vec3& center) {
  KnotCurve::Fourier f;
  for (int c = 0; c < 3; ++c) {
    f.cos[c] = {center[c], 0.0};
    f.sin[c] = {0.0, 0.0};
  }
  f.cos[0][1] = radius;
  f.sin[1][1] = radius;
  return KnotCurve::fourier(std::move(f));
}

KnotCurve resample_arclength(const KnotCurve& k, std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidParams, "resampling needs at least 3 points");

  // Cumulative length table on a parameter grid.
  std::vector<double> grid_t;
  std::vector<double> grid_s;
  if (k.is_fourier()) {
    const std::size_t m = std::max<std::size_t>(1 << 16, 16 * n);
    grid_t.resize(m + 1);
    grid_s.assign(m + 1, 0.0);
    double prev = k.tangent(0.0).norm();
    for (std::size_t i = 1; i <= m; ++i) {
      grid_t[i] = static_cast<double>(i) / static_cast<double>(m);
      const double cur = k.tangent(grid_t[i]).norm();
      grid_s[i] = grid_s[i - 1] + 0.5 * (prev + cur) / static_cast<double>(m);
      prev = cur;
    }
  } else {
    const auto& p = k.polyline_data();
    const std::size_t m = p.points.size();
    grid_t = p.params;
    grid_t.push_back(1.0);
    grid_s.assign(m + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const double seg = p.arclength.empty() ? (p.points[(i + 1) % m] - p.points[i]).norm()
                                             : p.arclength[i + 1] - p.arclength[i];
      grid_s[i + 1] = grid_s[i] + seg;
    }
  }

  const double total = grid_s.back();
  std::vector<Vec3> pts(n);
  std::vector<double> table(n + 1);
  std::size_t seg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double target = total * static_cast<double>(i) / static_cast<double>(n);
    while (seg + 1 < grid_s.size() - 1 && grid_s[seg + 1] <= target) ++seg;
    const double ds = grid_s[seg + 1] - grid_s[seg];
    const double a = ds > 0 ? (target - grid_s[seg]) / ds : 0.0;
    pts[i] = k.point(grid_t[seg] + a * (grid_t[seg + 1] - grid_t[seg]));
    table[i] = target;
  }
  table[n] = total;
  return KnotCurve::polyline(std::move(pts), std::move(table));
}

}  // namespace graphflow
