#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gaussmap/poly.hpp"
#include "gaussmap/rational.hpp"
#include "gaussmap/series.hpp"

namespace gaussmap {

enum class Frame { K, M, L };

std::string frame_name(Frame f);

struct LocalFrameExpansion {
  std::string section;  // "alpha_i", "omega_k", "s" or "t"
  int index = 0;
  Frame frame = Frame::K;
  TruncatedSeries series;
};

/// y^2 = prod (x - t_i) with t_1 = 0; p = (0,0) and the local coordinate at
/// p is z = y. Copies share one expansion cache, filled on demand.
class Curve {
 public:
  int genus() const { return genus_; }
  const std::vector<Rational>& branch_points() const { return t_; }
  /// prod_{i>=2} (x - t_i), so that y^2 = x G(x).
  const Poly& cofactor() const { return cofactor_; }

  /// x as a series in z, known below z^order.
  TruncatedSeries x_of_z(int order) const;
  /// K-frame expansion x^i x'/z of alpha_i = x^i dx/y.
  LocalFrameExpansion expand_canonical(int i, int order) const;
  /// M-frame expansion of omega_k = alpha_{g-k}: the K-frame series / z^2.
  LocalFrameExpansion expand_omega(int k, int order) const;
  /// omega_k^{(h)}(p) in the M-frame.
  Rational omega_derivative(int k, int h) const;
  /// L-frame functions: s -> x(z), t -> 1.
  LocalFrameExpansion expand_pencil(bool s, int order) const;

  std::vector<std::string> branch_point_strings() const;

  friend bool operator==(const Curve& a, const Curve& b) { return a.t_ == b.t_; }

 private:
  friend Curve new_curve(const std::vector<Rational>& branch_points);
  struct Cache;

  int genus_ = 0;
  std::vector<Rational> t_;
  Poly cofactor_;
  std::shared_ptr<Cache> cache_;
};

Curve new_curve(const std::vector<Rational>& branch_points);
/// Branch points 0, 1, ..., 2g+1.
Curve default_curve(int genus);
/// t_1 = 0 followed by distinct nonzero rationals a/b, |a| <= 50, 1 <= b <= 50.
Curve random_curve(int genus, std::uint64_t seed);

/// Free-function forms of the curve queries.
TruncatedSeries x_of_z(const Curve& c, int order);
LocalFrameExpansion expand_canonical(const Curve& c, int i, int order);
LocalFrameExpansion expand_omega(const Curve& c, int k, int order);

}  // namespace gaussmap
