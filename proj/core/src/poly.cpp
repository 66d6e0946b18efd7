#include "gaussmap/poly.hpp"

#include <algorithm>

namespace gaussmap {

Poly::Poly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Poly Poly::monomial(const Rational& coefficient, int degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coefficient;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative(int n) const {
  if (n <= 0) return *this;
  if (n > degree()) return Poly();
  std::vector<Rational> d(c_.size() - static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = c_[i + n] * falling_factorial(static_cast<int>(i) + n, n);
  }
  return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

std::string Poly::str(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& v = c_[static_cast<std::size_t>(i)];
    if (v.is_zero()) continue;
    std::string term = v.str();
    if (!out.empty()) {
      if (term.front() == '-') {
        out += " - ";
        term.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    out += term;
    if (i >= 1) out += std::string("*") + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Poly poly_derivative(const Poly& p, int n) { return p.derivative(n); }

}  // namespace gaussmap
