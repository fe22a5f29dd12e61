#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace graphflow {

enum class Flavor { Manifold, Knot };

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

/// Directed edge between 1-based vertex labels.
struct Edge {
  int from = 0;
  int to = 0;

  auto operator<=>(const Edge&) const = default;
};

/// A decorated graph with oriented edges and numbered vertices.
///
/// Knot flavor: vertices 1..n_ext lie on the knot in the order of its
/// orientation, internal vertices follow. `edges` lists internal edges only;
/// the knot arcs k -> k+1 (and n_ext -> 1) are implicit.
///
/// Manifold flavor: n_ext is 0 and every vertex counts as internal.
struct DecoratedGraph {
  Flavor flavor = Flavor::Manifold;
  int n_ext = 0;
  int n_int = 0;
  std::vector<Edge> edges;

  int vertex_count() const { return n_ext + n_int; }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_external(int v) const { return v <= n_ext; }

  /// Ordering used for canonical forms: flavor, n_ext, n_int, then edges.
  auto operator<=>(const DecoratedGraph&) const = default;
};

DecoratedGraph manifold_graph(int vertices, std::vector<Edge> edges);
DecoratedGraph knot_graph(int n_ext, int n_int, std::vector<Edge> edges);

/// Throws Error(InvalidParams) when a structural invariant is violated.
void validate(const DecoratedGraph& g);

struct Grade {
  int order = 0;
  int degree = 0;

  auto operator<=>(const Grade&) const = default;
};

Grade grade(const DecoratedGraph& g);

/// Number of internal edges incident to each vertex, indexed by label (slot 0 unused).
std::vector<int> valences(const DecoratedGraph& g);

bool is_trivalent(const DecoratedGraph& g);

/// Manifold: ordinary connectivity. Knot: connected after removing any pair
/// of knot arcs.
bool is_connected(const DecoratedGraph& g);

/// True when some cycle runs entirely through internal vertices.
bool has_internal_loop(const DecoratedGraph& g);

std::string describe(const DecoratedGraph& g);

}  // namespace graphflow
