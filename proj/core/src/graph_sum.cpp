#include "graphflow/graph_sum.hpp"

#include "graphflow/graph_complex.hpp"

namespace graphflow {

GraphSum::GraphSum(const DecoratedGraph& g, const Rational& coeff) { add(g, coeff); }

void GraphSum::add(const DecoratedGraph& g, const Rational& coeff) {
  if (coeff == 0) return;
  auto c = canonicalize(g);
  if (c.is_zero()) return;
  add_canonical(*c.graph, c.sign == 1 ? coeff : Rational(-coeff));
}

void GraphSum::add_canonical(const DecoratedGraph& g, const Rational& coeff) {
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GraphSum& GraphSum::operator+=(const GraphSum& other) {
  for (const auto& [g, coeff] : other.terms_) add_canonical(g, coeff);
  return *this;
}

GraphSum& GraphSum::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, coeff] : terms_) coeff *= scale;
  return *this;
}

Rational GraphSum::coefficient(const DecoratedGraph& g) const {
  auto c = canonicalize(g);
  if (c.is_zero()) return 0;
  auto it = terms_.find(*c.graph);
  if (it == terms_.end()) return 0;
  return c.sign == 1 ? it->second : Rational(-it->second);
}

GraphSum operator+(GraphSum a, const GraphSum& b) {
  a += b;
  return a;
}

GraphSum operator*(const Rational& s, GraphSum a) {
  a *= s;
  return a;
}

}  // namespace graphflow
