#include "graphflow/graph.hpp"

#include <numeric>
#include <sstream>

#include "graphflow/error.hpp"

namespace graphflow {

std::string to_string(Flavor f) { return f == Flavor::Manifold ? "manifold" : "knot"; }

Flavor flavor_from_string(const std::string& s) {
  if (s == "manifold") return Flavor::Manifold;
  if (s == "knot") return Flavor::Knot;
  throw Error(ErrorCode::Parse, "unknown flavor '" + s + "'");
}

DecoratedGraph manifold_graph(int vertices, std::vector<Edge> edges) {
  DecoratedGraph g{Flavor::Manifold, 0, vertices, std::move(edges)};
  validate(g);
  return g;
}

DecoratedGraph knot_graph(int n_ext, int n_int, std::vector<Edge> edges) {
  DecoratedGraph g{Flavor::Knot, n_ext, n_int, std::move(edges)};
  validate(g);
  return g;
}

void validate(const DecoratedGraph& g) {
  if (g.n_ext < 0 || g.n_int < 0) throw Error(ErrorCode::InvalidParams, "negative vertex count");
  if (g.flavor == Flavor::Manifold && g.n_ext != 0)
    throw Error(ErrorCode::InvalidParams, "manifold graphs have no external vertices");
  if (g.flavor == Flavor::Knot && g.n_ext < 2)
    throw Error(ErrorCode::InvalidParams, "knot graphs need at least two external vertices");
  const int v = g.vertex_count();
  for (const Edge& e : g.edges) {
    if (e.from < 1 || e.from > v || e.to < 1 || e.to > v)
      throw Error(ErrorCode::InvalidParams,
                  "edge " + std::to_string(e.from) + "->" + std::to_string(e.to) + " out of range");
    if (e.from == e.to)
      throw Error(ErrorCode::InvalidParams, "self-loop at vertex " + std::to_string(e.from));
  }
}

Grade grade(const DecoratedGraph& g) {
  const int e = g.edge_count();
  if (g.flavor == Flavor::Manifold) {
    const int v = g.vertex_count();
    return {e - v, 2 * e - 3 * v};
  }
  return {e - g.n_int, 2 * e - 3 * g.n_int - g.n_ext};
}

std::vector<int> valences(const DecoratedGraph& g) {
  std::vector<int> val(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (const Edge& e : g.edges) {
    ++val[static_cast<std::size_t>(e.from)];
    ++val[static_cast<std::size_t>(e.to)];
  }
  return val;
}

bool is_trivalent(const DecoratedGraph& g) {
  const auto val = valences(g);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const int want = (g.flavor == Flavor::Knot && g.is_external(v)) ? 1 : 3;
    if (val[static_cast<std::size_t>(v)] != want) return false;
  }
  return true;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::vector<int> parent;
};

// Connectivity of all vertices using internal edges plus the knot arcs whose
// starting vertex is not in `skip_a`/`skip_b` (0 = keep all arcs).
bool connected_without_arcs(const DecoratedGraph& g, int skip_a, int skip_b) {
  const int v = g.vertex_count();
  if (v <= 1) return true;
  DisjointSets ds(v);
  int components = v;
  for (const Edge& e : g.edges)
    if (ds.unite(e.from, e.to)) --components;
  if (g.flavor == Flavor::Knot) {
    for (int k = 1; k <= g.n_ext; ++k) {
      if (k == skip_a || k == skip_b) continue;
      if (ds.unite(k, k % g.n_ext + 1)) --components;
    }
  }
  return components == 1;
}

}  // namespace

bool is_connected(const DecoratedGraph& g) {
  if (g.flavor == Flavor::Manifold) return connected_without_arcs(g, 0, 0);
  for (int a = 1; a <= g.n_ext; ++a)
    for (int b = a + 1; b <= g.n_ext; ++b)
      if (!connected_without_arcs(g, a, b)) return false;
  return true;
}

bool has_internal_loop(const DecoratedGraph& g) {
  DisjointSets ds(g.vertex_count());
  for (const Edge& e : g.edges) {
    if (g.flavor == Flavor::Knot && (g.is_external(e.from) || g.is_external(e.to))) continue;
    if (!ds.unite(e.from, e.to)) return true;
  }
  return false;
}

std::string describe(const DecoratedGraph& g) {
  std::ostringstream out;
  out << to_string(g.flavor) << "(ext=" << g.n_ext << ", int=" << g.n_int << "; ";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) out << ' ';
    out << g.edges[i].from << "->" << g.edges[i].to;
  }
  out << ')';
  return out.str();
}

}  // namespace graphflow
