#pragma once

#include <span>
#include <string>
#include <vector>

#include "gaussmap/poly.hpp"
#include "gaussmap/rational.hpp"

namespace gaussmap {

/// Power series in z known exactly below `order()`; everything at or above
/// the truncation order is unknown. Reading an unknown coefficient throws
/// SeriesTruncated, it never reads back as zero.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// `known` holds the coefficients of z^0 .. z^{order-1}; missing trailing
  /// entries are exact zeros.
  TruncatedSeries(std::vector<Rational> known, int order);

  static TruncatedSeries from_poly(const Poly& p, int order);
  static TruncatedSeries one(int order) { return from_poly(Poly({Rational(1)}), order); }

  int order() const { return order_; }
  const Rational& coeff(int i) const;
  std::span<const Rational> known() const { return c_; }

  /// Index of the first nonzero coefficient. Throws UndeterminedValuation
  /// when every known coefficient vanishes.
  int valuation() const;
  /// Lower bound for the valuation that never throws (order() if all known
  /// coefficients vanish).
  int valuation_bound() const;
  bool known_zero() const { return valuation_bound() == order_; }

  /// h-th derivative at z = 0, i.e. h! [z^h].
  Rational derivative_at_zero(int h) const;

  TruncatedSeries derivative() const;
  /// Division by z^k; the first k coefficients must be known zeros.
  TruncatedSeries shift_down(int k) const;
  TruncatedSeries shift_up(int k) const;
  TruncatedSeries truncated(int order) const;
  /// Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries inverse() const;
  TruncatedSeries pow(int n) const;
  /// p(this), by Horner; requires zero constant term.
  TruncatedSeries compose_into(const Poly& p) const;
  /// Substitutes z -> z^2.
  TruncatedSeries spread_even() const;
  bool is_even() const;

  TruncatedSeries& operator*=(const Rational& s);
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

  std::string str(char var = 'z') const;

 private:
  std::vector<Rational> c_;
  int order_ = 0;
};

}  // namespace gaussmap
