#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gaussmap/matrix.hpp"
#include "gaussmap/poly.hpp"
#include "gaussmap/rational.hpp"

namespace gaussmap {

using IndexPair = std::pair<int, int>;

/// Pairs (i, j) with 1 <= i < j <= g-1 in lexicographic order; this is the
/// coordinate order of every a-vector.
const std::vector<IndexPair>& quadric_pairs(int genus);
std::size_t quadric_dimension(int genus);
/// Position of (i, j) in quadric_pairs; throws IndexOutOfRange.
std::size_t pair_index(int genus, int i, int j);

struct TensorTerm {
  int alpha;
  int beta;
  Rational c;
};

/// Element of I_2 on the basis Q_ij = alpha_i.alpha_{j-1} - alpha_j.alpha_{i-1},
/// mirrored as a symmetric tensor c over alpha_0 .. alpha_{g-1}. Symmetric
/// products use c_ab = c_ba = 1/2 for a != b, so sum_{a,b} c_ab X_a X_b is the
/// product itself.
class QuadricI2 {
 public:
  QuadricI2() = default;
  QuadricI2(int genus, RatVector a_coords);

  static QuadricI2 zero(int genus);

  int genus() const { return genus_; }
  const RatVector& a() const { return a_; }
  Rational a(int i, int j) const { return a_[pair_index(genus_, i, j)]; }
  const RatMatrix& tensor() const { return c_; }
  /// Nonzero entries of the tensor over all ordered pairs (alpha, beta).
  const std::vector<TensorTerm>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty() && is_zero_vector(a_); }
  /// sum c_ab x^{a+b}; identically zero on I_2.
  Poly mu0_polynomial() const;
  /// a-coordinates keyed "i,j", nonzero entries only.
  std::map<std::string, std::string> sparse_a() const;

  friend QuadricI2 operator+(const QuadricI2& p, const QuadricI2& q);
  friend QuadricI2 operator*(const Rational& s, const QuadricI2& q);
  friend bool operator==(const QuadricI2& p, const QuadricI2& q) { return p.a_ == q.a_; }

 private:
  int genus_ = 0;
  RatVector a_;
  RatMatrix c_;
  std::vector<TensorTerm> terms_;
};

QuadricI2 basis_quadric(int genus, int i, int j);

/// b_{k,h} = -a_{g-h,g-k}, for 1 <= k < h <= g-1.
class BCoords {
 public:
  static BCoords from_quadric(const QuadricI2& q);
  QuadricI2 to_quadric() const;

  int genus() const { return genus_; }
  Rational b(int k, int h) const;
  /// b-vector in quadric_pairs order.
  const RatVector& values() const { return b_; }

 private:
  int genus_ = 0;
  RatVector b_;
};

/// Quadric whose only nonzero b-coordinate is b_{k,h} = 1.
QuadricI2 b_basis_quadric(int genus, int k, int h);

}  // namespace gaussmap
