#include "gaussmap/quadric.hpp"

#include <mutex>

#include "gaussmap/error.hpp"

namespace gaussmap {

const std::vector<IndexPair>& quadric_pairs(int genus) {
  static std::mutex mu;
  static std::map<int, std::vector<IndexPair>> memo;
  std::lock_guard lock(mu);
  auto [it, fresh] = memo.try_emplace(genus);
  if (fresh) {
    for (int i = 1; i <= genus - 1; ++i) {
      for (int j = i + 1; j <= genus - 1; ++j) it->second.emplace_back(i, j);
    }
  }
  return it->second;
}

std::size_t quadric_dimension(int genus) {
  return genus < 3 ? 0 : static_cast<std::size_t>((genus - 1) * (genus - 2) / 2);
}

std::size_t pair_index(int genus, int i, int j) {
  if (i < 1 || j <= i || j > genus - 1) {
    throw Error(ErrorCode::IndexOutOfRange, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") outside 1 <= i < j <= " +
                                                std::to_string(genus - 1));
  }
  // Row i starts after sum_{r<i} (g-1-r) entries.
  const int before = (i - 1) * (genus - 1) - (i - 1) * i / 2;
  return static_cast<std::size_t>(before + (j - i - 1));
}

QuadricI2::QuadricI2(int genus, RatVector a_coords)
    : genus_(genus), a_(std::move(a_coords)), c_(genus, genus) {
  if (a_.size() != quadric_dimension(genus)) {
    throw Error(ErrorCode::InternalInconsistency, "a-vector has wrong length");
  }
  const Rational half(Integer(1), Integer(2));
  auto add = [&](int p, int q, const Rational& v) {
    if (p == q) {
      c_.at(p, p) += v;
    } else {
      c_.at(p, q) += v * half;
      c_.at(q, p) += v * half;
    }
  };
  const auto& pairs = quadric_pairs(genus);
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    if (a_[n].is_zero()) continue;
    const auto [i, j] = pairs[n];
    add(i, j - 1, a_[n]);
    add(j, i - 1, -a_[n]);
  }
  for (int p = 0; p < genus; ++p) {
    for (int q = 0; q < genus; ++q) {
      if (!c_.at(p, q).is_zero()) terms_.push_back({p, q, c_.at(p, q)});
    }
  }
}

QuadricI2 QuadricI2::zero(int genus) { return QuadricI2(genus, RatVector(quadric_dimension(genus))); }

Poly QuadricI2::mu0_polynomial() const {
  Poly p;
  for (const auto& t : terms_) p += Poly::monomial(t.c, t.alpha + t.beta);
  return p;
}

std::map<std::string, std::string> QuadricI2::sparse_a() const {
  std::map<std::string, std::string> out;
  const auto& pairs = quadric_pairs(genus_);
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    if (a_[n].is_zero()) continue;
    out[std::to_string(pairs[n].first) + "," + std::to_string(pairs[n].second)] = a_[n].str();
  }
  return out;
}

QuadricI2 operator+(const QuadricI2& p, const QuadricI2& q) {
  RatVector a = p.a_;
  for (std::size_t n = 0; n < a.size(); ++n) a[n] += q.a_[n];
  return QuadricI2(p.genus_, std::move(a));
}

QuadricI2 operator*(const Rational& s, const QuadricI2& q) {
  RatVector a = q.a_;
  for (auto& v : a) v *= s;
  return QuadricI2(q.genus_, std::move(a));
}

QuadricI2 basis_quadric(int genus, int i, int j) {
  RatVector a(quadric_dimension(genus));
  a[pair_index(genus, i, j)] = Rational(1);
  return QuadricI2(genus, std::move(a));
}

BCoords BCoords::from_quadric(const QuadricI2& q) {
  BCoords b;
  b.genus_ = q.genus();
  const int g = q.genus();
  const auto& pairs = quadric_pairs(g);
  b.b_.resize(pairs.size());
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    const auto [k, h] = pairs[n];
    b.b_[n] = -q.a(g - h, g - k);
  }
  return b;
}

QuadricI2 BCoords::to_quadric() const {
  const int g = genus_;
  RatVector a(quadric_dimension(g));
  const auto& pairs = quadric_pairs(g);
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    const auto [k, h] = pairs[n];
    a[pair_index(g, g - h, g - k)] = -b_[n];
  }
  return QuadricI2(g, std::move(a));
}

Rational BCoords::b(int k, int h) const { return b_[pair_index(genus_, k, h)]; }

QuadricI2 b_basis_quadric(int genus, int k, int h) {
  RatVector a(quadric_dimension(genus));
  a[pair_index(genus, genus - h, genus - k)] = Rational(-1);
  return QuadricI2(genus, std::move(a));
}

}  // namespace gaussmap
