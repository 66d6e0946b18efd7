#include "gaussmap/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "gaussmap/error.hpp"

namespace gaussmap {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(e_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   e_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void RatMatrix::append_row(const RatVector& row) {
  if (row.size() != cols_) {
    throw Error(ErrorCode::InternalInconsistency, "row length does not match column count");
  }
  e_.insert(e_.end(), row.begin(), row.end());
  ++rows_;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InternalInconsistency, "dimension mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = at(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::InternalInconsistency, "dimension mismatch");
  RatMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        if (!o.at(k, c).is_zero()) out.at(r, c) += a * o.at(k, c);
      }
    }
  }
  return out;
}

namespace {

// Clears denominators row by row so elimination can run over the integers.
std::vector<std::vector<Integer>> integer_rows(const RatMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer d = m.at(r, c).den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& v = m.at(r, c);
      out[r][c] = v.num() * (l / v.den());
    }
  }
  return out;
}

}  // namespace

Echelon rref(const RatMatrix& m) {
  auto a = integer_rows(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  const std::size_t rank = pivots.size();
  RatMatrix red(rank, cols);
  for (std::size_t i = 0; i < rank; ++i) {
    const Rational lead(a[i][pivots[i]]);
    for (std::size_t j = pivots[i]; j < cols; ++j) {
      if (a[i][j] != 0) red.at(i, j) = Rational(a[i][j]) / lead;
    }
  }
  for (std::size_t i = rank; i-- > 0;) {
    for (std::size_t above = 0; above < i; ++above) {
      const Rational f = red.at(above, pivots[i]);
      if (f.is_zero()) continue;
      for (std::size_t j = pivots[i]; j < cols; ++j) {
        if (!red.at(i, j).is_zero()) red.at(above, j) -= f * red.at(i, j);
      }
    }
  }
  return {std::move(red), std::move(pivots)};
}

std::size_t matrix_rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const Echelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> raw;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced.at(i, f);
    raw.push_back(std::move(v));
  }
  return canonical_basis(raw, cols);
}

std::vector<RatVector> canonical_basis(const std::vector<RatVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  const Echelon e = rref(RatMatrix::from_rows(vectors, dim));
  std::vector<RatVector> out;
  out.reserve(e.pivots.size());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

bool is_zero_vector(const RatVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InternalInconsistency, "dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

}  // namespace gaussmap
