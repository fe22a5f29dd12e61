#pragma once

#include <cstddef>
#include <vector>

#include "graphflow/graph_complex.hpp"
#include "graphflow/rational.hpp"

namespace graphflow {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using RationalVector = std::vector<Rational>;

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalVector operator*(const RationalMatrix& a, const RationalVector& v);

/// Fraction-free (Bareiss) elimination on an integer copy of the rows.
std::size_t rank(const RationalMatrix& m);

/// Reduced row-echelon form over Q.
RationalMatrix rref(const RationalMatrix& m);

/// Null space basis, one vector per free column in column order; the first
/// nonzero entry of each vector is 1.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

struct DeltaMatrix {
  std::vector<DecoratedGraph> domain;    // connected graphs of (ord, deg)
  std::vector<DecoratedGraph> codomain;  // connected graphs of (ord, deg + 1)
  RationalMatrix matrix;                 // column k = delta(domain[k]) in codomain
};

DeltaMatrix delta_matrix(Flavor flavor, int order, int degree = 0,
                         const EnumerationLimits& limits = {});

/// Combination sum_k v[k] * basis[k].
GraphSum combine(const std::vector<DecoratedGraph>& basis, const RationalVector& v);

/// Coordinates of `s` in `basis` (terms outside the basis are an error).
RationalVector coordinates(const std::vector<DecoratedGraph>& basis, const GraphSum& s);

/// True iff delta(s) vanishes. Throws Error(GradeMismatch) if the terms of
/// `s` do not share one (order, degree).
bool verify_cocycle(const GraphSum& s);

}  // namespace graphflow
