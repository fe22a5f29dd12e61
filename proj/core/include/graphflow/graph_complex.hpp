#pragma once

#include <optional>
#include <vector>

#include "graphflow/graph.hpp"
#include "graphflow/graph_sum.hpp"

namespace graphflow {

/// Outcome of reducing a graph modulo relabelings and edge reversals.
/// `graph` is empty when the class vanishes (an odd symmetry exists).
struct CanonicalResult {
  std::optional<DecoratedGraph> graph;
  int sign = 0;

  bool is_zero() const { return !graph.has_value(); }
};

/// Lexicographic minimum of the encoding over every admissible relabeling
/// (all vertex permutations for manifold graphs; cyclic rotations of the
/// knot vertices times permutations of the internal ones for knot graphs),
/// with edges normalized to ascending pairs. The returned sign s satisfies
/// g = s * graph.
CanonicalResult canonicalize(const DecoratedGraph& g);

/// An edge or knot arc that may be contracted.
struct ContractionSite {
  enum class Kind { Edge, KnotArc };
  Kind kind = Kind::Edge;
  /// Index into g.edges for Kind::Edge; for Kind::KnotArc the 1-based
  /// external vertex k whose outgoing arc k -> k+1 (n_ext -> 1) is meant.
  int index = 0;

  auto operator<=>(const ContractionSite&) const = default;
};

/// Number of connections between two vertices, counting knot arcs.
int connection_count(const DecoratedGraph& g, int a, int b);

/// Regular sites that the coboundary contracts, in deterministic order:
/// internal edges by index, then knot arcs by starting vertex.
std::vector<ContractionSite> contraction_sites(const DecoratedGraph& g);

struct Contraction {
  DecoratedGraph graph;
  int sign = 1;
};

/// Contract one site. The merged vertex takes the smaller label, labels
/// above the larger one shift down by one, and the sign is
///   (-1)^j      when the site is oriented i -> j with j > i,
///   (-1)^(i+1)  when j < i.
/// Throws Error(NotRegular) or Error(NotContractible).
Contraction contract_edge(const DecoratedGraph& g, const ContractionSite& site);

GraphSum delta(const DecoratedGraph& g);
GraphSum delta(const GraphSum& s);

struct EnumerationLimits {
  int max_order = 3;
  int max_vertices = 10;
  int max_edges = 15;
};

/// Every canonical, nonzero graph of the given grade, sorted ascending.
/// Throws Error(ResourceLimit) when the grade needs more than the limits allow.
std::vector<DecoratedGraph> enumerate(Flavor flavor, int order, int degree, bool connected,
                                      const EnumerationLimits& limits = {});

/// Graphs drawn in the reference figures, in the labeling convention used here.
namespace reference {
DecoratedGraph theta();                // manifold, triple edge
DecoratedGraph manifold_gamma1();      // complete graph on 4 vertices
DecoratedGraph manifold_gamma2();
DecoratedGraph manifold_gamma_prime();
DecoratedGraph knot_theta();           // 2 knot vertices joined by one chord
DecoratedGraph knot_gamma1();          // chords 1->3, 2->4
DecoratedGraph knot_gamma2();          // tripod
DecoratedGraph knot_gamma3();          // 2 knot vertices, internal bubble
DecoratedGraph knot_gamma1_prime();
DecoratedGraph knot_gamma2_prime();

/// -1/12 G1 + 1/4 G2 (manifold).
GraphSum manifold_order2_cocycle();
/// 1/4 G1 - 1/3 G2 + 1/2 G3 (knot).
GraphSum knot_order2_cocycle();
}  // namespace reference

}  // namespace graphflow
