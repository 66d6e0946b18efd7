#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gaussmap/rational.hpp"

namespace gaussmap {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  /// All rows must have length `cols`.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  void append_row(const RatVector& row);

  RatVector apply(const RatVector& v) const;
  RatMatrix operator*(const RatMatrix& o) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> e_;
};

struct Echelon {
  RatMatrix reduced;               // rank x cols, reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row-echelon form. Forward elimination is fraction-free
/// (Bareiss) on integer-scaled rows; the pivot in each column is the first
/// nonzero entry in row order. Back-substitution then normalizes pivots.
Echelon rref(const RatMatrix& m);

std::size_t matrix_rank(const RatMatrix& m);

/// Right null space as the rows of a reduced row-echelon matrix, so two
/// kernels are equal as subspaces iff their bases compare equal.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Canonical basis of span(vectors): nonzero rows of their RREF.
std::vector<RatVector> canonical_basis(const std::vector<RatVector>& vectors, std::size_t dim);

bool is_zero_vector(const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);

}  // namespace gaussmap
