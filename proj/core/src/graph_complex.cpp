#include "graphflow/graph_complex.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>

#include "graphflow/error.hpp"

namespace graphflow {

namespace {

// Vertex labels stay below 16, so an ascending pair packs into one byte.
constexpr int kMaxLabels = 15;

using Encoding = std::vector<std::uint8_t>;

int parity_of(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions & 1;
}

// Relabels edges through `new_label` (indexed by old label), normalizes every
// edge to an ascending pair and sorts. Returns the number of reversals.
int encode(const DecoratedGraph& g, const std::vector<int>& new_label, Encoding& out) {
  out.resize(g.edges.size());
  int flips = 0;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    int a = new_label[static_cast<std::size_t>(g.edges[k].from)];
    int b = new_label[static_cast<std::size_t>(g.edges[k].to)];
    if (a > b) {
      std::swap(a, b);
      ++flips;
    }
    out[k] = static_cast<std::uint8_t>(a * 16 + b);
  }
  // Short lists: insertion sort beats std::sort here.
  for (std::size_t k = 1; k < out.size(); ++k) {
    const auto key = out[k];
    std::size_t m = k;
    while (m > 0 && out[m - 1] > key) {
      out[m] = out[m - 1];
      --m;
    }
    out[m] = key;
  }
  return flips;
}

class OrbitScan {
 public:
  void offer(const Encoding& enc, int sign) {
    if (!found_ || enc < best_) {
      best_ = enc;
      sign_ = sign;
      zero_ = false;
      found_ = true;
    } else if (enc == best_ && sign != sign_) {
      zero_ = true;
    }
  }

  CanonicalResult result(const DecoratedGraph& g) const {
    if (zero_) return {};
    DecoratedGraph c{g.flavor, g.n_ext, g.n_int, {}};
    c.edges.reserve(best_.size());
    for (auto key : best_) c.edges.push_back({key / 16, key % 16});
    return {std::move(c), sign_};
  }

 private:
  Encoding best_;
  int sign_ = 1;
  bool zero_ = false;
  bool found_ = false;
};

}  // namespace

CanonicalResult canonicalize(const DecoratedGraph& g) {
  validate(g);
  const int v = g.vertex_count();
  if (v > kMaxLabels)
    throw Error(ErrorCode::ResourceLimit, "canonicalize supports at most 15 vertices");

  OrbitScan scan;
  Encoding enc;
  std::vector<int> new_label(static_cast<std::size_t>(v) + 1, 0);

  if (g.flavor == Flavor::Manifold) {
    std::vector<int> perm(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    do {
      for (int i = 0; i < v; ++i) new_label[static_cast<std::size_t>(i) + 1] = perm[static_cast<std::size_t>(i)];
      const int flips = encode(g, new_label, enc);
      scan.offer(enc, ((parity_of(perm) + flips) & 1) ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return scan.result(g);
  }

  const int n = g.n_ext;
  std::vector<int> internal(static_cast<std::size_t>(g.n_int));
  for (int r = 0; r < n; ++r) {
    // A rotation of n labels is a product of r n-cycles.
    const int rotation_parity = ((n - 1) * r) & 1;
    for (int i = 1; i <= n; ++i) new_label[static_cast<std::size_t>(i)] = (i - 1 + r) % n + 1;
    for (int i = 0; i < g.n_int; ++i) internal[static_cast<std::size_t>(i)] = n + 1 + i;
    do {
      for (int i = 0; i < g.n_int; ++i)
        new_label[static_cast<std::size_t>(n + 1 + i)] = internal[static_cast<std::size_t>(i)];
      const int flips = encode(g, new_label, enc);
      const int parity = rotation_parity + parity_of(internal) + flips;
      scan.offer(enc, (parity & 1) ? -1 : 1);
    } while (std::next_permutation(internal.begin(), internal.end()));
  }
  return scan.result(g);
}

int connection_count(const DecoratedGraph& g, int a, int b) {
  int count = 0;
  for (const Edge& e : g.edges)
    if ((e.from == a && e.to == b) || (e.from == b && e.to == a)) ++count;
  if (g.flavor == Flavor::Knot && g.is_external(a) && g.is_external(b)) {
    for (int k = 1; k <= g.n_ext; ++k) {
      const int next = k % g.n_ext + 1;
      if ((k == a && next == b) || (k == b && next == a)) ++count;
    }
  }
  return count;
}

std::vector<ContractionSite> contraction_sites(const DecoratedGraph& g) {
  std::vector<ContractionSite> sites;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    if (g.flavor == Flavor::Knot && g.is_external(e.from) && g.is_external(e.to)) continue;
    if (connection_count(g, e.from, e.to) == 1)
      sites.push_back({ContractionSite::Kind::Edge, static_cast<int>(k)});
  }
  if (g.flavor == Flavor::Knot) {
    for (int k = 1; k <= g.n_ext; ++k)
      if (connection_count(g, k, k % g.n_ext + 1) == 1)
        sites.push_back({ContractionSite::Kind::KnotArc, k});
  }
  return sites;
}

Contraction contract_edge(const DecoratedGraph& g, const ContractionSite& site) {
  int i = 0;
  int j = 0;
  if (site.kind == ContractionSite::Kind::Edge) {
    if (site.index < 0 || site.index >= g.edge_count())
      throw Error(ErrorCode::InvalidParams, "edge index out of range");
    i = g.edges[static_cast<std::size_t>(site.index)].from;
    j = g.edges[static_cast<std::size_t>(site.index)].to;
    if (g.flavor == Flavor::Knot && g.is_external(i) && g.is_external(j))
      throw Error(ErrorCode::NotContractible, "internal edges between knot vertices are not contracted");
  } else {
    if (g.flavor != Flavor::Knot || site.index < 1 || site.index > g.n_ext)
      throw Error(ErrorCode::InvalidParams, "knot arc out of range");
    i = site.index;
    j = site.index % g.n_ext + 1;
  }
  if (connection_count(g, i, j) != 1)
    throw Error(ErrorCode::NotRegular, "vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                           " are joined by more than one edge");

  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  auto relabel = [&](int v) { return v == hi ? lo : (v > hi ? v - 1 : v); };

  DecoratedGraph out{g.flavor, g.n_ext, g.n_int, {}};
  out.edges.reserve(g.edges.size());
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (site.kind == ContractionSite::Kind::Edge && static_cast<int>(k) == site.index) continue;
    out.edges.push_back({relabel(g.edges[k].from), relabel(g.edges[k].to)});
  }
  if (g.flavor == Flavor::Knot && g.is_external(hi))
    --out.n_ext;  // two knot vertices merged
  else
    --out.n_int;

  const int sign = j > i ? ((j & 1) ? -1 : 1) : (((i + 1) & 1) ? -1 : 1);
  return {std::move(out), sign};
}

GraphSum delta(const DecoratedGraph& g) {
  GraphSum out;
  for (const auto& site : contraction_sites(g)) {
    auto c = contract_edge(g, site);
    out.add(c.graph, c.sign);
  }
  return out;
}

GraphSum delta(const GraphSum& s) {
  GraphSum out;
  for (const auto& [g, coeff] : s.terms()) {
    GraphSum d = delta(g);
    d *= coeff;
    out += d;
  }
  return out;
}

namespace {

struct Shape {
  int n_ext;
  int n_int;
  int edges;
};

std::vector<Shape> shapes_for(Flavor flavor, int order, int degree) {
  std::vector<Shape> out;
  if (flavor == Flavor::Manifold) {
    const int v = 2 * order - degree;
    const int e = 3 * order - degree;
    if (v >= 1 && e >= 0) out.push_back({0, v, e});
    return out;
  }
  // E = ord + t, n = 2 ord - t - deg.
  for (int t = 0;; ++t) {
    const int n = 2 * order - t - degree;
    if (n < 2) break;
    const int e = order + t;
    if (e >= 0) out.push_back({n, t, e});
  }
  return out;
}

class MultigraphWalker {
 public:
  MultigraphWalker(Flavor flavor, const Shape& shape, bool connected, std::set<DecoratedGraph>& sink)
      : flavor_(flavor), shape_(shape), connected_(connected), sink_(sink) {
    const int v = shape.n_ext + shape.n_int;
    for (int a = 1; a <= v; ++a)
      for (int b = a + 1; b <= v; ++b) pairs_.push_back({a, b});
    degree_.assign(static_cast<std::size_t>(v) + 1, 0);
  }

  void run() { walk(0, shape_.edges); }

 private:
  void walk(std::size_t pair, int remaining) {
    if (remaining == 0) {
      leaf();
      return;
    }
    if (pair == pairs_.size()) return;
    const Edge p = pairs_[pair];
    // Multiplicity m of this pair, largest first.
    for (int m = remaining; m >= 0; --m) {
      for (int k = 0; k < m; ++k) current_.push_back(p);
      degree_[static_cast<std::size_t>(p.from)] += m;
      degree_[static_cast<std::size_t>(p.to)] += m;
      walk(pair + 1, remaining - m);
      degree_[static_cast<std::size_t>(p.from)] -= m;
      degree_[static_cast<std::size_t>(p.to)] -= m;
      current_.resize(current_.size() - static_cast<std::size_t>(m));
    }
  }

  void leaf() {
    // Freely permutable vertices can be assumed sorted by non-increasing
    // valence; canonicalize() then searches the whole orbit anyway.
    const int first = shape_.n_ext + 1;
    const int last = shape_.n_ext + shape_.n_int;
    for (int v = first; v < last; ++v)
      if (degree_[static_cast<std::size_t>(v)] < degree_[static_cast<std::size_t>(v) + 1]) return;

    DecoratedGraph g{flavor_, shape_.n_ext, shape_.n_int, current_};
    if (connected_ && !is_connected(g)) return;
    auto c = canonicalize(g);
    if (!c.is_zero()) sink_.insert(std::move(*c.graph));
  }

  Flavor flavor_;
  Shape shape_;
  bool connected_;
  std::set<DecoratedGraph>& sink_;
  std::vector<Edge> pairs_;
  std::vector<Edge> current_;
  std::vector<int> degree_;
};

}  // namespace

std::vector<DecoratedGraph> enumerate(Flavor flavor, int order, int degree, bool connected,
                                      const EnumerationLimits& limits) {
  if (order > limits.max_order)
    throw Error(ErrorCode::ResourceLimit, "order " + std::to_string(order) + " exceeds limit " +
                                              std::to_string(limits.max_order));
  std::set<DecoratedGraph> found;
  for (const Shape& s : shapes_for(flavor, order, degree)) {
    const int v = s.n_ext + s.n_int;
    if (v > limits.max_vertices || v > kMaxLabels)
      throw Error(ErrorCode::ResourceLimit, std::to_string(v) + " vertices exceed the configured bound");
    if (s.edges > limits.max_edges)
      throw Error(ErrorCode::ResourceLimit, std::to_string(s.edges) + " edges exceed the configured bound");
    MultigraphWalker(flavor, s, connected, found).run();
  }
  return {found.begin(), found.end()};
}

namespace reference {

DecoratedGraph theta() { return manifold_graph(2, {{1, 2}, {1, 2}, {1, 2}}); }

DecoratedGraph manifold_gamma1() {
  return manifold_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}, {2, 4}});
}

DecoratedGraph manifold_gamma2() {
  return manifold_graph(4, {{1, 4}, {4, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 4}});
}

DecoratedGraph manifold_gamma_prime() {
  return manifold_graph(3, {{1, 2}, {2, 3}, {3, 1}, {1, 3}, {1, 2}});
}

DecoratedGraph knot_theta() { return knot_graph(2, 0, {{1, 2}}); }

DecoratedGraph knot_gamma1() { return knot_graph(4, 0, {{1, 3}, {2, 4}}); }

DecoratedGraph knot_gamma2() { return knot_graph(3, 1, {{1, 4}, {2, 4}, {3, 4}}); }

// Drawn with knot vertices 1, 4 and internal 2, 3; relabeled by the even
// permutation 1->1, 4->2, 2->3, 3->4.
DecoratedGraph knot_gamma3() { return knot_graph(2, 2, {{1, 3}, {3, 4}, {3, 4}, {4, 2}}); }

DecoratedGraph knot_gamma1_prime() { return knot_graph(3, 0, {{1, 2}, {1, 3}}); }

DecoratedGraph knot_gamma2_prime() { return knot_graph(2, 1, {{1, 3}, {1, 3}, {3, 2}}); }

GraphSum manifold_order2_cocycle() {
  GraphSum s;
  s.add(manifold_gamma1(), Rational(-1, 12));
  s.add(manifold_gamma2(), Rational(1, 4));
  return s;
}

GraphSum knot_order2_cocycle() {
  GraphSum s;
  s.add(knot_gamma1(), Rational(1, 4));
  s.add(knot_gamma2(), Rational(-1, 3));
  s.add(knot_gamma3(), Rational(1, 2));
  return s;
}

}  // namespace reference

}  // namespace graphflow
