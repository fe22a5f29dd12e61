#include <doctest.h>

#include <graphflow/cocycle_solver.hpp>
#include <graphflow/error.hpp>

using namespace graphflow;
namespace ref = graphflow::reference;

namespace {

Rational q(const char* text) { return parse_rational(text); }

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// The span of `basis` contains v iff appending v keeps the rank.
bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v) {
  RationalMatrix m(v.size(), basis.size() + 1);
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = basis[c][r];
  for (std::size_t r = 0; r < v.size(); ++r) m(r, basis.size()) = v[r];
  return rank(m) == basis.size();
}

std::size_t index_of(const std::vector<DecoratedGraph>& basis, const DecoratedGraph& g) {
  const auto c = *canonicalize(g).graph;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == c) return i;
  FAIL("graph missing from basis");
  return 0;
}

}  // namespace

TEST_CASE("kernel of trivial matrices") {
  const RationalMatrix zero(2, 2);
  const auto k = kernel_basis(zero);
  REQUIRE(k.size() == 2);
  CHECK(k[0] == RationalVector{1, 0});
  CHECK(k[1] == RationalVector{0, 1});
  CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
}

TEST_CASE("rank, rref and kernel on a small example") {
  RationalMatrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  CHECK(rank(m) == 1);
  const auto r = rref(m);
  CHECK(r(0, 0) == 1);
  CHECK(r(0, 2) == 3);
  CHECK(r.rows() == 2);
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(is_zero(m * v));
  CHECK(k[0] == RationalVector{1, q("-1/2"), 0});
}

TEST_CASE("exact arithmetic survives large denominators") {
  RationalMatrix m(2, 2);
  m(0, 0) = q("1/3");
  m(0, 1) = q("1/7");
  m(1, 0) = q("7/3");
  m(1, 1) = 1;
  CHECK(rank(m) == 1);
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == RationalVector{1, q("-7/3")});
}

TEST_CASE("order-1 matrices") {
  const auto dm = delta_matrix(Flavor::Manifold, 1);
  REQUIRE(dm.domain == std::vector<DecoratedGraph>{ref::theta()});
  CHECK(dm.matrix.is_zero());
}

TEST_CASE("manifold order-2 delta matrix") {
  const auto dm = delta_matrix(Flavor::Manifold, 2);
  CHECK(dm.domain.size() == 17);
  CHECK(dm.codomain.size() == 4);
  const auto g1 = index_of(dm.domain, ref::manifold_gamma1());
  const auto g2 = index_of(dm.domain, ref::manifold_gamma2());
  const auto gp = index_of(dm.codomain, ref::manifold_gamma_prime());
  for (std::size_t r = 0; r < dm.codomain.size(); ++r) {
    if (r == gp) continue;
    CHECK(dm.matrix(r, g1) == 0);
    CHECK(dm.matrix(r, g2) == 0);
  }
  CHECK(abs(dm.matrix(gp, g1)) == 6);
  CHECK(abs(dm.matrix(gp, g2)) == 2);

  const auto v = coordinates(dm.domain, ref::manifold_order2_cocycle());
  CHECK(is_zero(dm.matrix * v));
  CHECK(in_span(kernel_basis(dm.matrix), v));
  CHECK(abs(v[g1]) * 3 == abs(v[g2]));
}

TEST_CASE("knot order-2 delta matrix") {
  const auto dm = delta_matrix(Flavor::Knot, 2);
  CHECK(dm.domain.size() == 24);
  CHECK(dm.codomain.size() == 5);
  const auto v = coordinates(dm.domain, ref::knot_order2_cocycle());
  CHECK(is_zero(dm.matrix * v));
  CHECK(in_span(kernel_basis(dm.matrix), v));

  const auto c1 = index_of(dm.codomain, ref::knot_gamma1_prime());
  const auto c2 = index_of(dm.codomain, ref::knot_gamma2_prime());
  const auto col = [&](const DecoratedGraph& g) { return index_of(dm.domain, g); };
  CHECK(abs(dm.matrix(c1, col(ref::knot_gamma1()))) == 4);
  CHECK(dm.matrix(c2, col(ref::knot_gamma1())) == 0);
  CHECK(abs(dm.matrix(c1, col(ref::knot_gamma2()))) == 3);
  CHECK(abs(dm.matrix(c2, col(ref::knot_gamma2()))) == 3);
  CHECK(dm.matrix(c1, col(ref::knot_gamma3())) == 0);
  CHECK(abs(dm.matrix(c2, col(ref::knot_gamma3()))) == 2);
}

TEST_CASE("rank-nullity and composed matrices vanish") {
  for (auto flavor : {Flavor::Manifold, Flavor::Knot}) {
    for (int ord = 1; ord <= 2; ++ord) {
      const auto d0 = delta_matrix(flavor, ord, 0);
      const auto d1 = delta_matrix(flavor, ord, 1);
      CHECK(rank(d0.matrix) + kernel_basis(d0.matrix).size() == d0.domain.size());
      for (const auto& v : kernel_basis(d0.matrix)) CHECK(is_zero(d0.matrix * v));
      REQUIRE(d1.domain == d0.codomain);
      if (d1.codomain.empty() || d0.domain.empty()) continue;
      CHECK((d1.matrix * d0.matrix).is_zero());
    }
  }
}

TEST_CASE("combine inverts coordinates") {
  const auto dm = delta_matrix(Flavor::Knot, 2);
  const auto s = ref::knot_order2_cocycle();
  CHECK(combine(dm.domain, coordinates(dm.domain, s)) == s);
}

TEST_CASE("verify_cocycle") {
  CHECK(verify_cocycle(GraphSum(ref::theta())));
  CHECK(verify_cocycle(ref::manifold_order2_cocycle()));
  CHECK(verify_cocycle(ref::knot_order2_cocycle()));
  CHECK_FALSE(verify_cocycle(GraphSum(ref::manifold_gamma1())));
  GraphSum mixed(ref::theta());
  mixed.add(ref::manifold_gamma1(), 1);
  try {
    verify_cocycle(mixed);
    FAIL("expected GradeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GradeMismatch);
  }
}
