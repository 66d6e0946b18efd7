#include <doctest.h>

#include "gaussmap/error.hpp"
#include "gaussmap/gaussian_maps.hpp"

using namespace gaussmap;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

RatVector a_vec(int g, std::initializer_list<std::tuple<int, int, long>> entries) {
  RatVector v(quadric_dimension(g));
  for (const auto& [i, j, x] : entries) v[pair_index(g, i, j)] = q(x);
  return v;
}

}  // namespace

TEST_CASE("quadric pair indexing") {
  const auto& p = quadric_pairs(5);
  REQUIRE(p.size() == 6);
  CHECK(p[0] == IndexPair{1, 2});
  CHECK(p[5] == IndexPair{3, 4});
  for (std::size_t n = 0; n < p.size(); ++n) CHECK(pair_index(5, p[n].first, p[n].second) == n);
  CHECK_THROWS_AS(pair_index(5, 2, 2), Error);
  CHECK_THROWS_AS(pair_index(5, 0, 2), Error);
  CHECK_THROWS_AS(pair_index(5, 1, 5), Error);
}

TEST_CASE("basis quadrics lie in I_2") {
  const QuadricI2 q12 = basis_quadric(3, 1, 2);
  CHECK(q12.tensor().at(1, 1) == q(1));
  CHECK(q12.tensor().at(0, 2) == q(-1, 2));
  CHECK(q12.tensor().at(2, 0) == q(-1, 2));
  for (int g = 3; g <= 10; ++g) {
    std::vector<RatVector> flat;
    for (const auto& [i, j] : quadric_pairs(g)) {
      const QuadricI2 b = basis_quadric(g, i, j);
      CHECK(b.mu0_polynomial().is_zero());
      RatVector t;
      for (int a = 0; a < g; ++a) {
        for (int c = a; c < g; ++c) t.push_back(b.tensor().at(a, c));
      }
      flat.push_back(t);
    }
    CHECK(canonical_basis(flat, flat.front().size()).size() == quadric_dimension(g));
  }
  CHECK_THROWS_AS(basis_quadric(4, 2, 1), Error);
}

TEST_CASE("b-coordinates round trip") {
  for (int g = 3; g <= 8; ++g) {
    RatVector a(quadric_dimension(g));
    for (std::size_t n = 0; n < a.size(); ++n) a[n] = q(static_cast<long>(n * n) - 3, static_cast<long>(n + 1));
    const QuadricI2 x(g, a);
    const BCoords b = BCoords::from_quadric(x);
    CHECK(b.to_quadric() == x);
    for (const auto& [k, h] : quadric_pairs(g)) CHECK(b.b(k, h) == -x.a(g - h, g - k));
  }
  const BCoords one = BCoords::from_quadric(b_basis_quadric(6, 2, 5));
  CHECK(one.b(2, 5) == q(1));
}

TEST_CASE("kernel equations: small cases") {
  CHECK(kernel_via_equations(4, 1).basis.empty());
  const KernelLevel g5 = kernel_via_equations(5, 1);
  REQUIRE(g5.basis.size() == 1);
  CHECK(g5.basis[0] == a_vec(5, {{1, 4, 1}, {2, 3, -3}}));
  for (int g = 3; g <= 11; g += 2) CHECK(kernel_via_equations(g, (g - 1) / 2).dimension == 0);
  CHECK(kernel_via_equations(6, 1).dimension == 3);
  CHECK(kernel_via_equations(7, 2).dimension == 1);
  CHECK(kernel_via_equations(5, 2).dimension == 0);
  CHECK(kernel_via_equations(8, 0).dimension == 21);

  const EquationSystem sys = build_kernel_equations(7, 2);
  CHECK(sys.n_l.at(3) == 1);
  CHECK(sys.n_l.at(7) == 3);
  REQUIRE(sys.s.size() == 2);
  CHECK(sys.s[0] == 2 * 7 - 5);
  CHECK(sys.s[1] == 2 * 7 - 9);
}

TEST_CASE("rank law and chain") {
  for (int g = 3; g <= 12; ++g) {
    const int top = (g - 1) / 2;
    const KernelChain c = kernel_chain_via_equations(g, top);
    REQUIRE(c.levels.size() == static_cast<std::size_t>(top + 1));
    for (int k = 0; k <= top; ++k) {
      const auto& lvl = c.levels[static_cast<std::size_t>(k)];
      CHECK(static_cast<long>(lvl.rank) == expected_rank(g, k));
      CHECK(static_cast<long>(lvl.dimension) == expected_kernel_dim(g, k));
      if (k > 0) CHECK(lvl.dimension < c.levels[static_cast<std::size_t>(k - 1)].dimension);
    }
    CHECK(c.levels.back().dimension == 0);
  }
  const auto rows = rank_table(3, 3);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].rank == 5);
  CHECK(rank_table(5, 5)[2].rank == 1);
  const auto r10 = rank_table(10, 10);
  CHECK(r10[4].rank == 3);
  CHECK(r10[3].dim_ker == 3);
  CHECK(r10[0].dim_ker == 36);
}

TEST_CASE("oracle kernel equals equation kernel") {
  for (int g = 3; g <= 10; ++g) {
    const int top = (g - 1) / 2;
    const KernelChain a = kernel_chain_via_equations(g, top);
    const KernelChain b = kernel_chain_via_polynomial_oracle(g, top);
    for (int k = 0; k <= top; ++k) {
      CHECK(a.levels[static_cast<std::size_t>(k)].basis == b.levels[static_cast<std::size_t>(k)].basis);
      CHECK(a.levels[static_cast<std::size_t>(k)].rank == b.levels[static_cast<std::size_t>(k)].rank);
    }
  }
  CHECK(kernel_via_polynomial_oracle(3, 1).basis.empty());
  CHECK(kernel_via_polynomial_oracle(6, 0).dimension == 10);
}

TEST_CASE("mu_eval_polynomial") {
  const QuadricI2 q12 = basis_quadric(3, 1, 2);
  const Poly p = mu_eval_polynomial(q12, 1);
  CHECK(!p.is_zero());
  CHECK(p == Poly({q(-1)}));
  const QuadricI2 k5(5, kernel_via_equations(5, 1).basis[0]);
  CHECK(mu_eval_polynomial(k5, 1).is_zero());
  CHECK(!mu_eval_polynomial(k5, 2).is_zero());
  CHECK_THROWS_AS(mu_eval_polynomial(basis_quadric(5, 1, 2), 2), Error);
  try {
    mu_eval_polynomial(basis_quadric(5, 1, 2), 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInPreviousKernel);
  }
  CHECK(mu_eval_polynomial(QuadricI2::zero(6), 2).is_zero());
}

TEST_CASE("odd maps") {
  for (int g = 3; g <= 10; ++g) {
    const OddRank r = odd_kernel_and_rank(g, 0);
    CHECK(r.domain_dim == static_cast<std::size_t>(g * (g - 1) / 2));
    CHECK(r.rank == static_cast<std::size_t>(2 * g - 3));
  }
  CHECK(odd_kernel_and_rank(5, 0).rank == 7);
  CHECK(odd_kernel_and_rank(8, 0).rank == 13);
  const OddRank r1 = odd_kernel_and_rank(6, 1);
  CHECK(r1.domain_dim == odd_kernel_and_rank(6, 0).kernel_dim);
}

TEST_CASE("factorization identity") {
  for (const auto& [i, j] : quadric_pairs(5)) {
    const FactorizationResult r = factorization_check(basis_quadric(5, i, j), 0);
    CHECK(r.holds);
    REQUIRE(r.constant.has_value());
    CHECK(*r.constant == q(1));
  }
  for (const auto& qq : kernel_via_equations(7, 1).quadrics()) {
    CHECK(factorization_check(qq, 1).holds);
    CHECK(factorization_check_local(qq, 1, default_curve(7)).holds);
    CHECK(factorization_check_local(qq, 1, random_curve(7, 3)).holds);
  }
  CHECK(factorization_check(QuadricI2::zero(6), 1).holds);
  CHECK_THROWS_AS(factorization_check(basis_quadric(6, 1, 2), 1), Error);
}

TEST_CASE("b-support of kernels") {
  const QuadricI2 k5(5, kernel_via_equations(5, 1).basis[0]);
  const BCoords b = BCoords::from_quadric(k5);
  CHECK(b.b(1, 4) == q(-1));
  CHECK(b.b(2, 3) == q(3));
  CHECK(b_support_check(k5, 1));
  for (int g = 3; g <= 10; ++g) {
    for (int k = 0; k <= (g - 1) / 2; ++k) {
      for (const auto& qq : kernel_via_equations(g, k).quadrics()) CHECK(b_support_check(qq, k));
    }
  }
  CHECK_THROWS_AS(b_support_check(basis_quadric(5, 1, 2), 1), Error);
}
