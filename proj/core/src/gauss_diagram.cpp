#include "graphflow/gauss_diagram.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>


#include "graphflow/error.hpp"

namespace graphflow {

namespace {

double wrap_unit(double t) {
  t -= std::floor(t);
  return t >= 1.0 ? 0.0 : t;
}

struct Event {
  double param;
  std::size_t crossing;
  bool over;
};

std::vector<Event> events_in_order(const GaussDiagram& d) {
  std::vector<Event> ev;
  ev.reserve(2 * d.crossings.size());
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    ev.push_back({d.crossings[i].over, i, true});
    ev.push_back({d.crossings[i].under, i, false});
  }
  std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.param < b.param; });
  return ev;
}

// Signed count of pairs (c1, c2) met in the order under(c1), over(c2), over(c1), under(c2).
long based_count(const std::vector<Event>& ev, std::size_t n_crossings, const std::vector<int>& signs,
                 std::size_t start) {
  std::vector<std::size_t> pos_over(n_crossings), pos_under(n_crossings);
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const Event& e = ev[(start + i) % ev.size()];
    (e.over ? pos_over : pos_under)[e.crossing] = i;
  }
  long total = 0;
  for (std::size_t a = 0; a < n_crossings; ++a) {
    for (std::size_t b = 0; b < n_crossings; ++b) {
      if (a == b) continue;
      if (pos_under[a] < pos_over[b] && pos_over[b] < pos_over[a] && pos_over[a] < pos_under[b])
        total += signs[a] * signs[b];
    }
  }
  return total;
}

struct Segment2 {
  Eigen::Vector2d a, b;
  double depth_a, depth_b;
  double t_a, t_b;
};

std::vector<Crossing> find_crossings(const KnotCurve& k, const Vec3& e1, const Vec3& e2, const Vec3& dir,
                                     std::size_t n, double scale, const ProjectionOptions& opt) {
  std::vector<Vec3> pts;
  std::vector<double> params;
  if (k.is_fourier()) {
    pts.resize(n);
    params.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      params[i] = static_cast<double>(i) / static_cast<double>(n);
      pts[i] = k.point(params[i]);
    }
  } else {
    pts = k.polyline_data().points;
    params = k.polyline_data().params;
  }
  const std::size_t m = pts.size();

  std::vector<Segment2> seg(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    seg[i] = {{pts[i].dot(e1), pts[i].dot(e2)},
              {pts[j].dot(e1), pts[j].dot(e2)},
              pts[i].dot(dir),
              pts[j].dot(dir),
              params[i],
              j == 0 ? 1.0 : params[j]};
    if ((seg[i].b - seg[i].a).norm() < 1e-14 * scale)
      throw Error(ErrorCode::DegenerateProjection, "curve tangent is parallel to the projection direction");
  }

  // Sweep over x: segments sorted by their left end.
  std::vector<std::size_t> order(m);
  std::vector<double> left(m), right(m);
  for (std::size_t i = 0; i < m; ++i) {
    order[i] = i;
    left[i] = std::min(seg[i].a.x(), seg[i].b.x());
    right[i] = std::max(seg[i].a.x(), seg[i].b.x());
  }
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return left[x] < left[y]; });

  std::vector<Crossing> out;
  std::vector<Eigen::Vector2d> where;
  for (std::size_t oi = 0; oi < m; ++oi) {
    const std::size_t i = order[oi];
    for (std::size_t oj = oi + 1; oj < m && left[order[oj]] <= right[i]; ++oj) {
      const std::size_t j = order[oj];
      if ((i + 1) % m == j || (j + 1) % m == i) continue;
      const Segment2& s = seg[i];
      const Segment2& u = seg[j];
      const Eigen::Vector2d p = s.b - s.a;
      const Eigen::Vector2d q = u.b - u.a;
      const double den = p.x() * q.y() - p.y() * q.x();
      const Eigen::Vector2d w = u.a - s.a;
      if (den == 0.0) {
        if (std::abs(w.x() * p.y() - w.y() * p.x()) < 1e-14 * scale * p.norm())
          throw Error(ErrorCode::DegenerateProjection, "collinear projected segments");
        continue;
      }
      const double alpha = (w.x() * q.y() - w.y() * q.x()) / den;
      const double beta = (w.x() * p.y() - w.y() * p.x()) / den;
      // Half-open segments so a crossing through a vertex is counted once.
      if (alpha < 0 || alpha >= 1 || beta < 0 || beta >= 1) continue;

      if (std::abs(den) < opt.min_sine * p.norm() * q.norm())
        throw Error(ErrorCode::DegenerateProjection, "near-tangent crossing");
      const double depth_s = s.depth_a + alpha * (s.depth_b - s.depth_a);
      const double depth_u = u.depth_a + beta * (u.depth_b - u.depth_a);
      if (std::abs(depth_s - depth_u) < opt.min_separation * scale)
        throw Error(ErrorCode::DegenerateProjection, "strands meet in space at a crossing");

      const double ts = wrap_unit(s.t_a + alpha * (s.t_b - s.t_a));
      const double tu = wrap_unit(u.t_a + beta * (u.t_b - u.t_a));
      const bool s_over = depth_s > depth_u;
      const Eigen::Vector2d& o = s_over ? p : q;
      const Eigen::Vector2d& un = s_over ? q : p;
      const double c = o.x() * un.y() - o.y() * un.x();
      const Eigen::Vector2d at = s.a + alpha * p;
      for (const auto& prev : where)
        if ((prev - at).norm() < opt.min_separation * scale)
          throw Error(ErrorCode::DegenerateProjection, "two crossings project to the same point");
      where.push_back(at);
      out.push_back({s_over ? ts : tu, s_over ? tu : ts, c > 0 ? 1 : -1});
    }
  }
  std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) { return x.over < y.over; });
  return out;
}

bool same_crossings(const std::vector<Crossing>& a, const std::vector<Crossing>& b, double tol) {
  if (a.size() != b.size()) return false;
  auto close = [tol](double x, double y) {
    const double d = std::abs(x - y);
    return std::min(d, 1.0 - d) < tol;
  };
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].sign != b[i].sign || !close(a[i].over, b[i].over) || !close(a[i].under, b[i].under)) return false;
  return true;
}

}  // namespace

int GaussDiagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings) w += c.sign;
  return w;
}

void validate(const GaussDiagram& d) {
  std::vector<double> params;
  for (const auto& c : d.crossings) {
    if (c.sign != 1 && c.sign != -1) throw Error(ErrorCode::InconsistentDiagram, "crossing sign must be +1 or -1");
    for (double t : {c.over, c.under})
      if (!(t >= 0.0 && t < 1.0)) throw Error(ErrorCode::InconsistentDiagram, "crossing parameter outside [0,1)");
    params.push_back(c.over);
    params.push_back(c.under);
  }
  std::sort(params.begin(), params.end());
  if (std::adjacent_find(params.begin(), params.end()) != params.end())
    throw Error(ErrorCode::InconsistentDiagram, "crossing parameters must be distinct");
}

GaussDiagram rotated(const GaussDiagram& d, double t) {
  GaussDiagram r = d;
  for (auto& c : r.crossings) {
    c.over = wrap_unit(c.over - t);
    c.under = wrap_unit(c.under - t);
  }
  return r;
}

GaussDiagram mirrored(const GaussDiagram& d) {
  GaussDiagram r = d;
  for (auto& c : r.crossings) {
    std::swap(c.over, c.under);
    c.sign = -c.sign;
  }
  return r;
}

GaussDiagram reversed(const GaussDiagram& d) {
  GaussDiagram r = d;
  for (auto& c : r.crossings) {
    c.over = wrap_unit(1.0 - c.over);
    c.under = wrap_unit(1.0 - c.under);
  }
  return r;
}

GaussDiagram with_kink(const GaussDiagram& d, double t, int sign, bool over_first) {
  validate(d);
  t = wrap_unit(t);
  double next = 1.0;
  for (const auto& c : d.crossings)
    for (double s : {c.over, c.under})
      if (s > t) next = std::min(next, s);
  const double a = t + (next - t) / 3.0;
  const double b = t + 2.0 * (next - t) / 3.0;
  GaussDiagram r = d;
  r.crossings.push_back(over_first ? Crossing{a, b, sign} : Crossing{b, a, sign});
  validate(r);
  return r;
}

GaussDiagram project_to_diagram(const KnotCurve& k, const Vec3& direction, const ProjectionOptions& opt) {
  if (!(direction.norm() > 0)) throw Error(ErrorCode::InvalidParams, "projection direction must be nonzero");
  const Vec3 dir = direction.normalized();
  const Vec3 helper = std::abs(dir.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = (helper - helper.dot(dir) * dir).normalized();
  const Vec3 e2 = dir.cross(e1);
  const double scale = k.diameter(256);

  if (!k.is_fourier()) {
    GaussDiagram d{find_crossings(k, e1, e2, dir, 0, scale, opt)};
    validate(d);
    return d;
  }

  std::size_t n = opt.min_segments;
  std::vector<Crossing> prev = find_crossings(k, e1, e2, dir, n, scale, opt);
  int agreements = 0;
  while (n * 2 <= opt.max_segments) {
    n *= 2;
    std::vector<Crossing> cur = find_crossings(k, e1, e2, dir, n, scale, opt);
    agreements = same_crossings(prev, cur, 4.0 / static_cast<double>(n)) ? agreements + 1 : 0;
    prev = std::move(cur);
    if (agreements == 2) {
      GaussDiagram d{std::move(prev)};
      validate(d);
      return d;
    }
  }
  throw Error(ErrorCode::DegenerateProjection,
              "crossings did not stabilize below " + std::to_string(opt.max_segments) + " segments");
}

long a2_oracle(const GaussDiagram& d) {
  validate(d);
  const std::size_t n = d.crossings.size();
  if (n == 0) return 0;
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) signs[i] = d.crossings[i].sign;
  const std::vector<Event> ev = events_in_order(d);
  const long value = based_count(ev, n, signs, 0);
  for (std::size_t start = 1; start < ev.size(); ++start) {
    if (based_count(ev, n, signs, start) != value)
      throw Error(ErrorCode::InconsistentDiagram,
                  "based count depends on the base point; the diagram is not a knot diagram");
  }
  return value;
}

}  // namespace graphflow
