#include "gaussmap/curve.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>

#include "gaussmap/error.hpp"
#include "gaussmap/random.hpp"

namespace gaussmap {

std::string frame_name(Frame f) {
  switch (f) {
    case Frame::K: return "K";
    case Frame::M: return "M";
    case Frame::L: return "L";
  }
  return "?";
}

// Longest series computed so far; shorter requests are served by
// truncation, which is exact because coefficients never change once known.
struct Curve::Cache {
  std::shared_mutex mu;
  TruncatedSeries x;
  std::map<int, TruncatedSeries> canonical;
};

namespace {

// Solves X(w) G(X(w)) = w for X to the given order in w, by Newton
// iteration with doubling precision.
TruncatedSeries solve_x_of_w(const Poly& cofactor, int order) {
  const Poly f = Poly::monomial(Rational(1), 1) * cofactor;
  const Poly df = f.derivative();
  const Rational inv_g0 = Rational(1) / cofactor.coeff(0);
  TruncatedSeries x({Rational(0), inv_g0}, std::min(order, 2));
  const TruncatedSeries w({Rational(0), Rational(1)}, order);
  int prec = x.order();
  while (prec < order) {
    prec = std::min(2 * prec, order);
    const TruncatedSeries xe(std::vector<Rational>(x.known().begin(), x.known().end()), prec);
    const TruncatedSeries residual = xe.compose_into(f) - w.truncated(prec);
    const TruncatedSeries slope = xe.compose_into(df);
    x = xe - (residual * slope.inverse()).truncated(prec);
  }
  return x;
}

}  // namespace

TruncatedSeries Curve::x_of_z(int order) const {
  order = std::max(order, 2);
  {
    std::shared_lock lock(cache_->mu);
    if (cache_->x.order() >= order) return cache_->x.truncated(order);
  }
  const int w_order = (order + 1) / 2;
  TruncatedSeries xz = solve_x_of_w(cofactor_, w_order).spread_even();
  std::unique_lock lock(cache_->mu);
  if (cache_->x.order() < xz.order()) cache_->x = xz;
  return cache_->x.truncated(order);
}

LocalFrameExpansion Curve::expand_canonical(int i, int order) const {
  if (i < 0 || i >= genus_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "alpha_" + std::to_string(i) + " needs 0 <= i <= " + std::to_string(genus_ - 1));
  }
  order = std::max(order, 1);
  {
    std::shared_lock lock(cache_->mu);
    auto it = cache_->canonical.find(i);
    if (it != cache_->canonical.end() && it->second.order() >= order) {
      return {"alpha_" + std::to_string(i), i, Frame::K, it->second.truncated(order)};
    }
  }
  const TruncatedSeries x = x_of_z(order + 2);
  const TruncatedSeries dx_over_z = x.derivative().shift_down(1);
  TruncatedSeries g = dx_over_z;
  if (i > 0) g = x.pow(i) * dx_over_z;
  g = g.truncated(order);
  std::unique_lock lock(cache_->mu);
  auto& slot = cache_->canonical[i];
  if (slot.order() < g.order()) slot = g;
  return {"alpha_" + std::to_string(i), i, Frame::K, g};
}

LocalFrameExpansion Curve::expand_omega(int k, int order) const {
  if (k < 1 || k > genus_ - 1) {
    throw Error(ErrorCode::IndexOutOfRange,
                "omega_" + std::to_string(k) + " needs 1 <= k <= " + std::to_string(genus_ - 1));
  }
  const TruncatedSeries kf = expand_canonical(genus_ - k, order + 2).series;
  return {"omega_" + std::to_string(k), k, Frame::M, kf.shift_down(2)};
}

Rational Curve::omega_derivative(int k, int h) const {
  return expand_omega(k, h + 1).series.derivative_at_zero(h);
}

LocalFrameExpansion Curve::expand_pencil(bool s, int order) const {
  if (s) return {"s", 0, Frame::L, x_of_z(order)};
  return {"t", 1, Frame::L, TruncatedSeries::one(order)};
}

std::vector<std::string> Curve::branch_point_strings() const {
  std::vector<std::string> out;
  out.reserve(t_.size());
  for (const auto& t : t_) out.push_back(t.str());
  return out;
}

Curve new_curve(const std::vector<Rational>& branch_points) {
  const std::size_t n = branch_points.size();
  if (n < 8) {
    throw Error(ErrorCode::TooFewBranchPoints,
                std::to_string(n) + " branch points given; genus >= 3 needs at least 8");
  }
  if (n % 2 != 0) {
    throw Error(ErrorCode::OddBranchPointCount,
                std::to_string(n) + " branch points given; the model needs an even count");
  }
  if (!branch_points.front().is_zero()) {
    throw Error(ErrorCode::FirstBranchPointNotZero,
                "first branch point is " + branch_points.front().str() + ", expected 0");
  }
  std::set<Rational> seen;
  for (const auto& t : branch_points) {
    if (!seen.insert(t).second) {
      throw Error(ErrorCode::DuplicateBranchPoint, "branch point " + t.str() + " repeated");
    }
  }
  Curve c;
  c.genus_ = static_cast<int>(n / 2) - 1;
  c.t_ = branch_points;
  Poly g({Rational(1)});
  for (std::size_t i = 1; i < n; ++i) g = g * Poly({-branch_points[i], Rational(1)});
  c.cofactor_ = std::move(g);
  c.cache_ = std::make_shared<Curve::Cache>();
  return c;
}

Curve default_curve(int genus) {
  std::vector<Rational> t;
  for (int i = 0; i < 2 * genus + 2; ++i) t.emplace_back(i);
  return new_curve(t);
}

Curve random_curve(int genus, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Rational> t{Rational(0)};
  std::set<Rational> seen{Rational(0)};
  while (static_cast<int>(t.size()) < 2 * genus + 2) {
    Rational r = rng.rational(50, 50);
    if (seen.insert(r).second) t.push_back(std::move(r));
  }
  return new_curve(t);
}

TruncatedSeries x_of_z(const Curve& c, int order) { return c.x_of_z(order); }
LocalFrameExpansion expand_canonical(const Curve& c, int i, int order) {
  return c.expand_canonical(i, order);
}
LocalFrameExpansion expand_omega(const Curve& c, int k, int order) {
  return c.expand_omega(k, order);
}

}  // namespace gaussmap
