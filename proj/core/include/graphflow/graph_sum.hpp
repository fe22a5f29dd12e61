#pragma once

#include <map>

#include "graphflow/graph.hpp"
#include "graphflow/rational.hpp"

namespace graphflow {

/// Formal Q-linear combination of canonical graphs. Inserting a graph
/// canonicalizes it first; zero coefficients are never stored.
class GraphSum {
 public:
  using Terms = std::map<DecoratedGraph, Rational>;

  GraphSum() = default;
  explicit GraphSum(const DecoratedGraph& g, const Rational& coeff = 1);

  void add(const DecoratedGraph& g, const Rational& coeff);
  GraphSum& operator+=(const GraphSum& other);
  GraphSum& operator*=(const Rational& scale);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the canonical class of `g` expressed in terms of `g`
  /// itself (so a graph equal to -C reads back with the opposite sign).
  Rational coefficient(const DecoratedGraph& g) const;

  friend bool operator==(const GraphSum&, const GraphSum&) = default;

 private:
  // Assumes g already canonical.
  void add_canonical(const DecoratedGraph& g, const Rational& coeff);

  Terms terms_;
};

GraphSum operator+(GraphSum a, const GraphSum& b);
GraphSum operator*(const Rational& s, GraphSum a);

}  // namespace graphflow
