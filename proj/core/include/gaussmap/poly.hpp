#pragma once

#include <span>
#include <string>
#include <vector>

#include "gaussmap/rational.hpp"

namespace gaussmap {

/// Dense univariate polynomial over the rationals. Canonical form has no
/// trailing zero coefficient; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);

  static Poly monomial(const Rational& coefficient, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Zero for indices beyond the degree.
  Rational coeff(int i) const;
  std::span<const Rational> coefficients() const { return c_; }

  Rational eval(const Rational& x) const;
  Poly derivative(int n = 1) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly poly_derivative(const Poly& p, int n);

}  // namespace gaussmap
