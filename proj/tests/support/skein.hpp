#pragma once

#include <vector>

#include <graphflow/gauss_diagram.hpp>

namespace oracle {

// A link diagram as Gauss words: one cyclic word per component, each letter
// a passage through a crossing.
struct Passage {
  int crossing;
  bool over;
};

struct LinkDiagram {
  std::vector<std::vector<Passage>> components;
  std::vector<int> signs;  // indexed by crossing id
};

LinkDiagram from_knot_diagram(const graphflow::GaussDiagram& d);

// Conway polynomial coefficients, index = power of z, computed by the skein
// relation  C(L+) - C(L-) = z C(L0)  down to descending diagrams.
std::vector<long> conway(const LinkDiagram& d);

inline long conway_coefficient(const std::vector<long>& c, std::size_t power) {
  return power < c.size() ? c[power] : 0;
}

}  // namespace oracle
