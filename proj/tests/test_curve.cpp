#include <doctest.h>

#include "gaussmap/curve.hpp"
#include "gaussmap/error.hpp"

using namespace gaussmap;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.push_back(q(x));
  return out;
}

ErrorCode code_of(const std::vector<Rational>& pts) {
  try {
    new_curve(pts);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

// Plain-vector series product truncated below n.
std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t n) {
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// x(z) by the fixed point x = z^2 / G(x), one new coefficient per sweep,
// sharing nothing with the library's Newton solver.
std::vector<Rational> oracle_x(const Curve& c, std::size_t n) {
  const Poly& g = c.cofactor();
  std::vector<Rational> x(n);
  for (std::size_t sweep = 0; sweep < n; ++sweep) {
    std::vector<Rational> gx(n);
    std::vector<Rational> pw(n);
    pw[0] = q(1);
    for (int d = 0; d <= g.degree(); ++d) {
      for (std::size_t i = 0; i < n; ++i) gx[i] += g.coeff(d) * pw[i];
      pw = mul(pw, x, n);
    }
    // 1 / G(x) by the recurrence for a power series inverse.
    std::vector<Rational> inv(n);
    inv[0] = q(1) / gx[0];
    for (std::size_t k = 1; k < n; ++k) {
      Rational s;
      for (std::size_t i = 1; i <= k; ++i) s += gx[i] * inv[k - i];
      inv[k] = -s * inv[0];
    }
    std::vector<Rational> next(n);
    for (std::size_t i = 2; i < n; ++i) next[i] = inv[i - 2];
    x = next;
  }
  return x;
}

}  // namespace

TEST_CASE("new_curve validation") {
  CHECK(new_curve(ints({0, 1, 2, 3, 4, 5, 6, 7})).genus() == 3);
  CHECK(code_of(ints({0, 1, 1, 3, 4, 5, 6, 7})) == ErrorCode::DuplicateBranchPoint);
  CHECK(code_of(ints({1, 2, 3, 4, 5, 6, 7, 8})) == ErrorCode::FirstBranchPointNotZero);
  CHECK(code_of(ints({0, 1, 2, 3, 4, 5})) == ErrorCode::TooFewBranchPoints);
  CHECK(code_of(ints({0, 1, 2, 3, 4, 5, 6, 7, 8})) == ErrorCode::OddBranchPointCount);
  CHECK(default_curve(5).genus() == 5);
  CHECK(default_curve(4).branch_points().back() == q(9));
}

TEST_CASE("x_of_z on the default genus 3 curve") {
  const Curve c = default_curve(3);
  const TruncatedSeries x = c.x_of_z(12);
  CHECK(x.order() == 12);
  CHECK(x.coeff(0) == q(0));
  CHECK(x.coeff(1) == q(0));
  CHECK(x.coeff(2) == q(-1, 5040));
  CHECK(x.is_even());
}

TEST_CASE("x_of_z matches a fixed-point oracle and its defining equation") {
  for (int g = 3; g <= 6; ++g) {
    const Curve c = random_curve(g, 100 + static_cast<std::uint64_t>(g));
    const std::size_t n = 16;
    const auto ref = oracle_x(c, n);
    const TruncatedSeries x = c.x_of_z(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) CHECK(x.coeff(static_cast<int>(i)) == ref[i]);
  }
}

TEST_CASE("x_of_z residual vanishes to the truncation order on random curves") {
  for (int g = 3; g <= 8; ++g) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Curve c = random_curve(g, s * 31 + static_cast<std::uint64_t>(g));
      const int n = 20;
      const TruncatedSeries x = c.x_of_z(n);
      const Poly f = Poly::monomial(q(1), 1) * c.cofactor();
      const TruncatedSeries residual = x.compose_into(f) - TruncatedSeries({q(0), q(0), q(1)}, n);
      CHECK(residual.known_zero());
    }
  }
}

TEST_CASE("doubling the order keeps earlier coefficients") {
  const Curve a = random_curve(5, 9);
  const Curve b = random_curve(5, 9);  // fresh cache
  const TruncatedSeries small = a.x_of_z(14);
  const TruncatedSeries big = b.x_of_z(28);
  CHECK(big.truncated(14) == small);
  CHECK(a.x_of_z(28) == big);
  CHECK(a.expand_canonical(2, 10).series == b.expand_canonical(2, 30).series.truncated(10));
}

TEST_CASE("canonical expansions: valuation 2i, parity, leading term") {
  for (int g = 3; g <= 7; ++g) {
    const Curve c = (g % 2) ? default_curve(g) : random_curve(g, 77);
    const Rational lead_x = c.x_of_z(4).coeff(2);
    for (int i = 0; i < g; ++i) {
      const auto e = c.expand_canonical(i, 2 * g + 6);
      CHECK(e.frame == Frame::K);
      CHECK(e.series.valuation() == 2 * i);
      CHECK(e.series.is_even());
    }
    CHECK(c.expand_canonical(0, 4).series.coeff(0) == q(2) * lead_x);
  }
  CHECK(default_curve(3).expand_canonical(0, 2).series.coeff(0) == q(2) / q(-5040));
  CHECK_THROWS_AS(default_curve(3).expand_canonical(3, 4), Error);
  CHECK_THROWS_AS(default_curve(3).expand_canonical(-1, 4), Error);
}

TEST_CASE("omega expansions: order table and vanishing derivatives") {
  for (int g = 3; g <= 8; ++g) {
    const Curve c = default_curve(g);
    for (int k = 1; k <= g - 1; ++k) {
      const auto e = c.expand_omega(k, 2 * g + 4);
      CHECK(e.frame == Frame::M);
      CHECK(e.series.valuation() == 2 * g - 2 * k - 2);
      CHECK(e.series.is_even());
      for (int h = 0; h <= 2 * g - 2 * k - 3; ++h) CHECK(c.omega_derivative(k, h).is_zero());
      CHECK(!c.omega_derivative(k, 2 * g - 2 * k - 2).is_zero());
    }
    CHECK(c.expand_omega(g - 1, 4).series.valuation() == 0);
    CHECK(c.expand_omega(1, 2 * g).series.valuation() == 2 * g - 4);
  }
  CHECK_THROWS_AS(default_curve(4).expand_omega(0, 4), Error);
  CHECK_THROWS_AS(default_curve(4).expand_omega(4, 4), Error);
}

TEST_CASE("pencil frame realizes the Weierstrass vanishing") {
  const Curve c = default_curve(4);
  const auto s = c.expand_pencil(true, 8).series;
  const auto t = c.expand_pencil(false, 8).series;
  const TruncatedSeries w = s.derivative() * t - t.derivative() * s;
  CHECK(w.coeff(0) == q(0));
  const TruncatedSeries w2 = s.derivative().derivative() * t - t.derivative().derivative() * s;
  CHECK(!w2.coeff(0).is_zero());
}

TEST_CASE("random curves are reproducible and normalized") {
  const Curve a = random_curve(6, 42);
  const Curve b = random_curve(6, 42);
  CHECK(a == b);
  CHECK(a.branch_points().size() == 14);
  CHECK(a.branch_points().front() == q(0));
  for (const auto& t : a.branch_points()) {
    CHECK(t.den() <= 50);
    CHECK(abs(t.num()) <= 50);
  }
  CHECK(!(random_curve(6, 43) == a));
}
