#include "graphflow/cocycle_solver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "graphflow/error.hpp"

namespace graphflow {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && v[k] != 0) out[i] += a(i, k) * v[k];
  return out;
}

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Scale each row by the lcm of its denominators.
IntMatrix to_integer_rows(const RationalMatrix& m) {
  IntMatrix rows(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigInt& d = denominator(m(i, j));
      scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
    for (std::size_t j = 0; j < m.cols(); ++j)
      rows[i][j] = numerator(m(i, j)) * (scale / denominator(m(i, j)));
  }
  return rows;
}

struct Echelon {
  IntMatrix rows;                   // first `pivots.size()` rows are the echelon rows
  std::vector<std::size_t> pivots;  // pivot column of each echelon row
};

// Bareiss fraction-free elimination: every division is exact.
Echelon bareiss(IntMatrix a, std::size_t cols) {
  Echelon out;
  const std::size_t n_rows = a.size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n_rows; ++c) {
    std::size_t p = r;
    while (p < n_rows && a[p][c] == 0) ++p;
    if (p == n_rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return bareiss(to_integer_rows(m), m.cols()).pivots.size(); }

RationalMatrix rref(const RationalMatrix& m) {
  Echelon e = bareiss(to_integer_rows(m), m.cols());
  RationalMatrix out(m.rows(), m.cols());
  const std::size_t r = e.pivots.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(e.rows[i][j]);
  // Back substitution over Q on the (already triangular) echelon rows.
  for (std::size_t i = r; i-- > 0;) {
    const Rational lead = out(i, e.pivots[i]);
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) /= lead;
    for (std::size_t k = 0; k < i; ++k) {
      const Rational f = out(k, e.pivots[i]);
      if (f == 0) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) out(k, j) -= f * out(i, j);
    }
  }
  return out;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const RationalMatrix reduced = rref(m);
  std::vector<std::optional<std::size_t>> pivot_row(m.cols());
  std::size_t r = 0;
  for (std::size_t i = 0; i < reduced.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (reduced(i, j) != 0) {
        pivot_row[j] = i;
        ++r;
        break;
      }
    }
  }
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivot_row[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (pivot_row[j]) v[j] = -reduced(*pivot_row[j], f);
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    const Rational scale = *lead;
    for (auto& x : v) x /= scale;
    basis.push_back(std::move(v));
  }
  return basis;
}

DeltaMatrix delta_matrix(Flavor flavor, int order, int degree, const EnumerationLimits& limits) {
  DeltaMatrix out;
  out.domain = enumerate(flavor, order, degree, true, limits);
  out.codomain = enumerate(flavor, order, degree + 1, true, limits);
  std::map<DecoratedGraph, std::size_t> row_of;
  for (std::size_t i = 0; i < out.codomain.size(); ++i) row_of.emplace(out.codomain[i], i);

  out.matrix = RationalMatrix(out.codomain.size(), out.domain.size());
  for (std::size_t k = 0; k < out.domain.size(); ++k) {
    const GraphSum image = delta(out.domain[k]);
    for (const auto& [g, coeff] : image.terms()) {
      auto it = row_of.find(g);
      if (it == row_of.end())
        throw std::logic_error("delta left the connected subcomplex: " + describe(g));
      out.matrix(it->second, k) = coeff;
    }
  }
  return out;
}

GraphSum combine(const std::vector<DecoratedGraph>& basis, const RationalVector& v) {
  if (basis.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "basis/vector size mismatch");
  GraphSum s;
  for (std::size_t k = 0; k < v.size(); ++k) s.add(basis[k], v[k]);
  return s;
}

RationalVector coordinates(const std::vector<DecoratedGraph>& basis, const GraphSum& s) {
  RationalVector v(basis.size());
  std::size_t matched = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    v[k] = s.coefficient(basis[k]);
    if (v[k] != 0) ++matched;
  }
  if (matched != s.size()) throw Error(ErrorCode::InvalidParams, "graph sum has terms outside the basis");
  return v;
}

bool verify_cocycle(const GraphSum& s) {
  std::optional<Grade> common;
  for (const auto& [g, coeff] : s.terms()) {
    const Grade gr = grade(g);
    if (common && (*common != gr || g.flavor != s.terms().begin()->first.flavor))
      throw Error(ErrorCode::GradeMismatch, "cocycle terms have different grades");
    common = gr;
  }
  return delta(s).empty();
}

}  // namespace graphflow
