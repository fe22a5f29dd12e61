#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <graphflow/graph.hpp>
#include <graphflow/integrator.hpp>

namespace oracle {

using Encoding = std::vector<std::pair<int, int>>;

struct BruteCanonical {
  Encoding edges;  // ascending pairs, sorted
  int sign;
};

// Minimum over every admissible relabeling and orientation, found by
// trying all of them. Empty when the minimum occurs with both signs.
std::optional<BruteCanonical> canonical(const graphflow::DecoratedGraph& g);

bool connected(const graphflow::DecoratedGraph& g);

int parity(const std::vector<int>& perm);

// Every relabeling the equivalence relation allows, as 0-based maps old -> new.
std::vector<std::vector<int>> admissible_relabelings(const graphflow::DecoratedGraph& g);

// Relabels vertices by `perm` and reverses the edges marked in `flip`.
graphflow::DecoratedGraph relabel(const graphflow::DecoratedGraph& g, const std::vector<int>& perm,
                                  const std::vector<bool>& flip);

// All connected canonical graphs of a grade, found by listing every
// multiset of edges on every admissible vertex split.
std::set<graphflow::DecoratedGraph> enumerate(graphflow::Flavor flavor, int order, int degree);

// Top coefficient of a wedge of 2-forms as
//   2^-m sum over permutations s of sign(s) prod_k a_k(s(2k), s(2k+1)).
double wedge_top(const std::vector<graphflow::TwoForm>& forms, int d);

}  // namespace oracle
