#include "gaussmap/series.hpp"

#include <algorithm>

#include "gaussmap/error.hpp"

namespace gaussmap {

TruncatedSeries::TruncatedSeries(std::vector<Rational> known, int order)
    : c_(std::move(known)), order_(std::max(order, 0)) {
  c_.resize(static_cast<std::size_t>(order_));
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(order, 0)));
  for (int i = 0; i < order && i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p.coeff(i);
  return TruncatedSeries(std::move(c), order);
}

const Rational& TruncatedSeries::coeff(int i) const {
  if (i < 0 || i >= order_) {
    throw Error(ErrorCode::SeriesTruncated, "coefficient z^" + std::to_string(i) +
                                                " requested from a series known below z^" +
                                                std::to_string(order_));
  }
  return c_[static_cast<std::size_t>(i)];
}

int TruncatedSeries::valuation_bound() const {
  for (int i = 0; i < order_; ++i) {
    if (!c_[static_cast<std::size_t>(i)].is_zero()) return i;
  }
  return order_;
}

int TruncatedSeries::valuation() const {
  const int v = valuation_bound();
  if (v == order_) {
    throw Error(ErrorCode::UndeterminedValuation,
                "all coefficients below z^" + std::to_string(order_) + " vanish");
  }
  return v;
}

Rational TruncatedSeries::derivative_at_zero(int h) const { return factorial(h) * coeff(h); }

TruncatedSeries TruncatedSeries::derivative() const {
  if (order_ == 0) return {};
  std::vector<Rational> d(static_cast<std::size_t>(order_ - 1));
  for (int i = 0; i + 1 < order_; ++i) {
    d[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i + 1)] * Rational(i + 1);
  }
  return TruncatedSeries(std::move(d), order_ - 1);
}

TruncatedSeries TruncatedSeries::shift_down(int k) const {
  if (k > order_ || valuation_bound() < k) {
    throw Error(ErrorCode::SeriesTruncated,
                "cannot divide by z^" + std::to_string(k) + ": low coefficients not known zero");
  }
  return TruncatedSeries(std::vector<Rational>(c_.begin() + k, c_.end()), order_ - k);
}

TruncatedSeries TruncatedSeries::shift_up(int k) const {
  std::vector<Rational> c(static_cast<std::size_t>(k));
  c.insert(c.end(), c_.begin(), c_.end());
  return TruncatedSeries(std::move(c), order_ + k);
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > order_) {
    throw Error(ErrorCode::SeriesTruncated, "cannot extend a series beyond its known order");
  }
  return TruncatedSeries(std::vector<Rational>(c_.begin(), c_.begin() + order), order);
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (order_ == 0) return {};
  const Rational& a0 = c_[0];
  if (a0.is_zero()) throw Error(ErrorCode::DivisionByZero, "series inverse needs a unit");
  const Rational inv0 = Rational(1) / a0;
  std::vector<Rational> b(static_cast<std::size_t>(order_));
  b[0] = inv0;
  for (int n = 1; n < order_; ++n) {
    Rational acc;
    for (int i = 1; i <= n; ++i) {
      const Rational& ai = c_[static_cast<std::size_t>(i)];
      if (!ai.is_zero()) acc += ai * b[static_cast<std::size_t>(n - i)];
    }
    b[static_cast<std::size_t>(n)] = -acc * inv0;
  }
  return TruncatedSeries(std::move(b), order_);
}

TruncatedSeries TruncatedSeries::pow(int n) const {
  TruncatedSeries result = one(order_ + n * valuation_bound());
  TruncatedSeries base = *this;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::compose_into(const Poly& p) const {
  if (order_ > 0 && !c_[0].is_zero()) {
    throw Error(ErrorCode::InternalInconsistency, "composition needs zero constant term");
  }
  // Horner; the inner series has valuation >= 1 so each step stays determined.
  const int target = order_;
  if (p.is_zero()) return TruncatedSeries({}, target);
  TruncatedSeries acc = from_poly(Poly({p.coeff(p.degree())}), target);
  for (int d = p.degree() - 1; d >= 0; --d) {
    acc = acc * (*this);
    acc = acc.truncated(std::min(acc.order(), target)) + from_poly(Poly({p.coeff(d)}), target);
  }
  return acc;
}

TruncatedSeries TruncatedSeries::spread_even() const {
  if (order_ == 0) return {};
  std::vector<Rational> c(static_cast<std::size_t>(2 * order_));
  for (int i = 0; i < order_; ++i) c[static_cast<std::size_t>(2 * i)] = c_[static_cast<std::size_t>(i)];
  return TruncatedSeries(std::move(c), 2 * order_);
}

bool TruncatedSeries::is_even() const {
  for (int i = 1; i < order_; i += 2) {
    if (!c_[static_cast<std::size_t>(i)].is_zero()) return false;
  }
  return true;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  std::vector<Rational> c(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    c[static_cast<std::size_t>(i)] = a.c_[static_cast<std::size_t>(i)] + b.c_[static_cast<std::size_t>(i)];
  }
  return TruncatedSeries(std::move(c), order);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  std::vector<Rational> c(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    c[static_cast<std::size_t>(i)] = a.c_[static_cast<std::size_t>(i)] - b.c_[static_cast<std::size_t>(i)];
  }
  return TruncatedSeries(std::move(c), order);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int va = a.valuation_bound();
  const int vb = b.valuation_bound();
  const int order = std::min(a.order_ + vb, b.order_ + va);
  std::vector<Rational> c(static_cast<std::size_t>(order));
  for (int i = va; i < a.order_ && i < order; ++i) {
    const Rational& ai = a.c_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = vb; j < b.order_ && i + j < order; ++j) {
      const Rational& bj = b.c_[static_cast<std::size_t>(j)];
      if (!bj.is_zero()) c[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return TruncatedSeries(std::move(c), order);
}

std::string TruncatedSeries::str(char var) const {
  std::string out;
  for (int i = 0; i < order_; ++i) {
    const Rational& v = c_[static_cast<std::size_t>(i)];
    if (v.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + v.str() + ")";
    if (i >= 1) out += std::string("*") + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  return out + " + O(" + var + "^" + std::to_string(order_) + ")";
}

}  // namespace gaussmap
