#include "gaussmap/gaussian_maps.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "gaussmap/error.hpp"

namespace gaussmap {

namespace {

// Basis of {v in span(prev) : rows v = 0}, canonicalized.
std::vector<RatVector> restrict_kernel(const std::vector<RatVector>& prev,
                                       const std::vector<RatVector>& images, std::size_t dim) {
  // images[b] is the image of prev[b] under the new constraints.
  if (prev.empty()) return {};
  const std::size_t nrows = images.front().size();
  RatMatrix m(nrows, prev.size());
  for (std::size_t b = 0; b < prev.size(); ++b) {
    for (std::size_t r = 0; r < nrows; ++r) m.at(r, b) = images[b][r];
  }
  std::vector<RatVector> out;
  for (const auto& coeffs : kernel_basis(m)) {
    RatVector v(dim);
    for (std::size_t b = 0; b < prev.size(); ++b) {
      if (coeffs[b].is_zero()) continue;
      for (std::size_t n = 0; n < dim; ++n) {
        if (!prev[b][n].is_zero()) v[n] += coeffs[b] * prev[b][n];
      }
    }
    out.push_back(std::move(v));
  }
  return canonical_basis(out, dim);
}

std::vector<RatVector> standard_basis(std::size_t dim) {
  std::vector<RatVector> out(dim, RatVector(dim));
  for (std::size_t i = 0; i < dim; ++i) out[i][i] = Rational(1);
  return out;
}

// Coordinates (a, b) with a <= b on S^2 H^0(K).
std::vector<IndexPair> sym_pairs(int g) {
  std::vector<IndexPair> out;
  for (int a = 0; a < g; ++a) {
    for (int b = a; b < g; ++b) out.emplace_back(a, b);
  }
  return out;
}

RatMatrix mu0_matrix(int g) {
  const auto pairs = sym_pairs(g);
  RatMatrix m(static_cast<std::size_t>(2 * g - 1), pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    m.at(static_cast<std::size_t>(pairs[c].first + pairs[c].second), c) = Rational(1);
  }
  return m;
}

// Flattens a family of polynomials into one coefficient vector.
RatVector stack_coefficients(const std::vector<Poly>& polys, int max_degree) {
  RatVector out;
  out.reserve(polys.size() * static_cast<std::size_t>(max_degree + 1));
  for (const auto& p : polys) {
    for (int d = 0; d <= max_degree; ++d) out.push_back(p.coeff(d));
  }
  return out;
}

std::vector<Poly> identities_up_to(const QuadricI2& q, int total) {
  std::vector<Poly> out;
  for (int s = 0; s <= total; ++s) {
    for (int h = 0; h <= s; ++h) out.push_back(derivative_pair_polynomial(q, h, s - h));
  }
  return out;
}

// Odd domain: pairs 0 <= i < j <= g-1 with f_i = x^i.
std::vector<IndexPair> wedge_pairs(int g) {
  std::vector<IndexPair> out;
  for (int i = 0; i < g; ++i) {
    for (int j = i + 1; j < g; ++j) out.emplace_back(i, j);
  }
  return out;
}

Poly wedge_identity(int g, const RatVector& a, int h, int n) {
  const auto pairs = wedge_pairs(g);
  Poly p;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if (a[e].is_zero()) continue;
    const auto [i, j] = pairs[e];
    const int deg = i + j - h - n;
    if (deg < 0) continue;
    const Rational c = falling_factorial(i, h) * falling_factorial(j, n) -
                       falling_factorial(j, h) * falling_factorial(i, n);
    if (!c.is_zero()) p += Poly::monomial(a[e] * c, deg);
  }
  return p;
}

}  // namespace

std::vector<QuadricI2> KernelLevel::quadrics() const {
  std::vector<QuadricI2> out;
  out.reserve(basis.size());
  for (const auto& v : basis) out.emplace_back(genus, v);
  return out;
}

long expected_rank(int genus, int k) { return 2L * genus - (4L * k + 1); }

long expected_kernel_dim(int genus, int k) {
  return static_cast<long>(genus - 1) * (genus - 2) / 2 - static_cast<long>(k) * (2 * genus - 2 * k - 3);
}

EquationSystem build_kernel_equations(int genus, int k) {
  EquationSystem sys;
  sys.genus = genus;
  sys.level = k;
  const auto& pairs = quadric_pairs(genus);
  const std::size_t dim = pairs.size();
  sys.rows = RatMatrix(0, dim);
  for (const auto& [i, j] : pairs) ++sys.n_l[i + j];

  std::vector<RatVector> kernel = standard_basis(dim);
  for (int m = 1; m <= k; ++m) {
    RatMatrix level(0, dim);
    for (int l = std::max(3, 2 * m - 1); l <= 2 * genus - 3; ++l) {
      RatVector row(dim);
      for (std::size_t n = 0; n < dim; ++n) {
        const auto [i, j] = pairs[n];
        if (i + j != l) continue;
        Rational v(j - i);
        for (int t = 0; t <= m - 2; ++t) v *= Rational((i - t) * (j - t));
        row[n] = v;
      }
      if (!is_zero_vector(row)) {
        level.append_row(row);
        sys.rows.append_row(row);
      }
    }
    std::vector<RatVector> images;
    for (const auto& v : kernel) images.push_back(level.rows() ? level.apply(v) : RatVector{Rational(0)});
    const auto next = restrict_kernel(kernel, images, dim);
    sys.s.push_back(static_cast<int>(kernel.size() - next.size()));
    kernel = next;
    sys.rows_by_m.push_back(std::move(level));
  }
  return sys;
}

KernelChain kernel_chain_via_equations(int genus, int k) {
  const EquationSystem sys = build_kernel_equations(genus, k);
  const std::size_t dim = quadric_dimension(genus);
  KernelChain chain;
  chain.genus = genus;
  std::vector<RatVector> kernel = standard_basis(dim);
  chain.levels.push_back({genus, 0, kernel, kernel.size(), matrix_rank(mu0_matrix(genus))});
  for (int m = 1; m <= k; ++m) {
    const RatMatrix& level = sys.rows_by_m[static_cast<std::size_t>(m - 1)];
    std::vector<RatVector> images;
    for (const auto& v : kernel) images.push_back(level.rows() ? level.apply(v) : RatVector{Rational(0)});
    auto next = restrict_kernel(kernel, images, dim);
    const std::size_t rank = kernel.size() - next.size();
    kernel = std::move(next);
    chain.levels.push_back({genus, m, kernel, kernel.size(), rank});
  }
  return chain;
}

KernelLevel kernel_via_equations(int genus, int k) {
  return kernel_chain_via_equations(genus, k).levels.back();
}

KernelChain kernel_chain_via_polynomial_oracle(int genus, int k) {
  const std::size_t dim = quadric_dimension(genus);
  KernelChain chain;
  chain.genus = genus;

  // Level 0: Ker mu_0 on S^2, pulled back to a-coordinates through the
  // linear map a -> symmetric tensor.
  const RatMatrix mu0 = mu0_matrix(genus);
  const auto sym = sym_pairs(genus);
  const auto ker0 = kernel_basis(mu0);
  RatMatrix embed(sym.size(), dim);
  for (std::size_t n = 0; n < dim; ++n) {
    RatVector e(dim);
    e[n] = Rational(1);
    const QuadricI2 q(genus, e);
    for (std::size_t s = 0; s < sym.size(); ++s) {
      const auto [a, b] = sym[s];
      embed.at(s, n) = a == b ? q.tensor().at(a, a) : q.tensor().at(a, b) + q.tensor().at(b, a);
    }
  }
  std::vector<RatVector> image_cols;
  for (std::size_t n = 0; n < dim; ++n) {
    RatVector col(sym.size());
    for (std::size_t s = 0; s < sym.size(); ++s) col[s] = embed.at(s, n);
    image_cols.push_back(std::move(col));
  }
  if (matrix_rank(embed) != dim || canonical_basis(image_cols, sym.size()) != ker0) {
    throw Error(ErrorCode::InternalInconsistency, "quadric basis does not span Ker mu_0");
  }
  // Preimage of each kernel vector: solve embed * a = v.
  std::vector<RatVector> kernel;
  for (const auto& v : ker0) {
    RatMatrix aug(sym.size(), dim + 1);
    for (std::size_t s = 0; s < sym.size(); ++s) {
      for (std::size_t n = 0; n < dim; ++n) aug.at(s, n) = embed.at(s, n);
      aug.at(s, dim) = -v[s];
    }
    const auto sol = kernel_basis(aug);
    if (sol.size() != 1 || sol[0][dim].is_zero()) {
      throw Error(ErrorCode::InternalInconsistency, "Ker mu_0 vector has no unique preimage");
    }
    RatVector a(sol[0].begin(), sol[0].begin() + static_cast<std::ptrdiff_t>(dim));
    const Rational scale = Rational(1) / sol[0][dim];
    for (auto& x : a) x *= scale;
    kernel.push_back(std::move(a));
  }
  kernel = canonical_basis(kernel, dim);
  chain.levels.push_back({genus, 0, kernel, kernel.size(), matrix_rank(mu0)});

  const int max_degree = 2 * genus - 2;
  for (int j = 1; j <= k; ++j) {
    std::vector<RatVector> images;
    for (const auto& v : kernel) {
      images.push_back(stack_coefficients(identities_up_to(QuadricI2(genus, v), 2 * j + 1), max_degree));
    }
    auto next = restrict_kernel(kernel, images, dim);
    const std::size_t rank = kernel.size() - next.size();
    kernel = std::move(next);
    chain.levels.push_back({genus, j, kernel, kernel.size(), rank});
  }
  return chain;
}

KernelLevel kernel_via_polynomial_oracle(int genus, int k) {
  return kernel_chain_via_polynomial_oracle(genus, k).levels.back();
}

std::vector<RankRow> rank_table(int g_min, int g_max) {
  std::vector<RankRow> rows;
  for (int g = g_min; g <= g_max; ++g) {
    const int top = (g - 1) / 2;
    const KernelChain chain = kernel_chain_via_equations(g, top);
    for (const auto& lvl : chain.levels) {
      const long rank = static_cast<long>(lvl.rank);
      const long dim = static_cast<long>(lvl.dimension);
      rows.push_back({g, lvl.k, rank, dim,
                      rank == expected_rank(g, lvl.k) && dim == expected_kernel_dim(g, lvl.k)});
    }
  }
  return rows;
}

Poly derivative_pair_polynomial(const QuadricI2& q, int h, int n) {
  Poly p;
  for (const auto& t : q.terms()) {
    const int deg = t.alpha + t.beta - h - n;
    if (deg < 0 || t.alpha < h || t.beta < n) continue;
    p += Poly::monomial(t.c * falling_factorial(t.alpha, h) * falling_factorial(t.beta, n), deg);
  }
  return p;
}

bool in_even_kernel(const QuadricI2& q, int k) {
  for (const auto& p : identities_up_to(q, 2 * k + 1)) {
    if (!p.is_zero()) return false;
  }
  return true;
}

Poly mu_eval_polynomial(const QuadricI2& q, int k) {
  if (k >= 1 && !in_even_kernel(q, k - 1)) {
    throw Error(ErrorCode::NotInPreviousKernel,
                "quadric is not in Ker mu_" + std::to_string(2 * k - 2));
  }
  auto at = [&](int n) {
    Poly p = derivative_pair_polynomial(q, 2 * k - n, n);
    return n % 2 == 0 ? p : -p;
  };
  const Poly p0 = at(0);
  if (at(k) != p0 || at(2 * k) != p0) {
    throw Error(ErrorCode::InternalInconsistency, "mu_" + std::to_string(2 * k) +
                                                      " depends on the splitting index");
  }
  return p0;
}

OddRank odd_kernel_and_rank(int genus, int k) {
  const auto pairs = wedge_pairs(genus);
  const std::size_t dim = pairs.size();
  const int max_degree = 2 * genus - 3;
  std::vector<RatVector> kernel = standard_basis(dim);
  std::size_t prev_dim = dim;
  for (int m = 0; m <= k; ++m) {
    std::vector<RatVector> images;
    for (const auto& v : kernel) {
      std::vector<Poly> polys;
      for (int s = 0; s <= 2 * m + 2; ++s) {
        for (int h = 0; h <= s; ++h) polys.push_back(wedge_identity(genus, v, h, s - h));
      }
      images.push_back(stack_coefficients(polys, max_degree));
    }
    prev_dim = kernel.size();
    kernel = restrict_kernel(kernel, images, dim);
  }
  return {prev_dim, kernel.size(), prev_dim - kernel.size()};
}

namespace {

Poly factorization_lhs(const QuadricI2& q, int k) {
  return derivative_pair_polynomial(q, 2 * k + 2, 0);
}

// (k+1) mu_{1,L}(s^t) mu_{2k+1,M}(...) with f_s = x, f_t = 1, F_i = x^{i-1}.
Poly factorization_rhs(const QuadricI2& q, int k) {
  const int g = q.genus();
  const int d = 2 * k + 1;
  Poly sum;
  for (const auto& [i, j] : quadric_pairs(g)) {
    const Rational a = q.a(i, j);
    if (a.is_zero()) continue;
    const int deg = i + j - 2 - d;
    if (deg < 0) continue;
    const Rational c = falling_factorial(i - 1, d) - falling_factorial(j - 1, d);
    if (!c.is_zero()) sum += Poly::monomial(a * c, deg);
  }
  const Poly mu1_l({Rational(1)});  // x' * 1 - 0 * x
  return Rational(k + 1) * (mu1_l * sum);
}

std::optional<Rational> ratio(const Poly& lhs, const Poly& rhs) {
  if (rhs.is_zero()) return std::nullopt;
  const int d = rhs.degree();
  return lhs.coeff(d) / rhs.coeff(d);
}

void require_kernel(const QuadricI2& q, int k) {
  if (!in_even_kernel(q, k)) {
    throw Error(ErrorCode::NotInKernel, "quadric is not in Ker mu_" + std::to_string(2 * k));
  }
}

}  // namespace

std::optional<Rational> factorization_constant(int genus, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::optional<Rational>> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find({genus, k});
    if (it != memo.end()) return it->second;
  }
  std::optional<Rational> found;
  for (const auto& q : kernel_via_equations(genus, k).quadrics()) {
    found = ratio(factorization_lhs(q, k), factorization_rhs(q, k));
    if (found) break;
  }
  std::lock_guard lock(mu);
  memo[{genus, k}] = found;
  return found;
}

FactorizationResult factorization_check(const QuadricI2& q, int k) {
  require_kernel(q, k);
  FactorizationResult r;
  r.lhs = factorization_lhs(q, k);
  r.rhs = factorization_rhs(q, k);
  r.constant = factorization_constant(q.genus(), k);
  if (r.constant) {
    r.holds = r.lhs == *r.constant * r.rhs;
  } else {
    r.holds = r.lhs.is_zero() && r.rhs.is_zero();
  }
  return r;
}

FactorizationResult factorization_check_local(const QuadricI2& q, int k, const Curve& curve) {
  require_kernel(q, k);
  const int g = q.genus();
  const int order = 2 * g + 4 * k + 12;
  std::vector<TruncatedSeries> kf;
  for (int a = 0; a < g; ++a) kf.push_back(curve.expand_canonical(a, order).series);

  auto nth = [](TruncatedSeries s, int n) {
    for (int i = 0; i < n; ++i) s = s.derivative();
    return s;
  };

  TruncatedSeries lhs = TruncatedSeries({}, order - (2 * k + 2));
  for (const auto& t : q.terms()) {
    lhs = lhs + nth(kf[static_cast<std::size_t>(t.alpha)], 2 * k + 2) *
                    kf[static_cast<std::size_t>(t.beta)] * t.c;
  }

  // alpha_i = s F_i and alpha_{i-1} = t F_i with F_i = (K-frame of alpha_i) / z^2.
  const TruncatedSeries x = curve.x_of_z(order);
  const TruncatedSeries z2 = TruncatedSeries({Rational(0), Rational(0), Rational(1)}, order);
  const TruncatedSeries& fs = z2;
  const TruncatedSeries ft = x.shift_down(2).inverse();
  const TruncatedSeries mu1 = fs.derivative() * ft - ft.derivative() * fs;

  std::vector<TruncatedSeries> frame_m;  // frame_m[i] = F_i, i = 1..g-1
  frame_m.emplace_back();
  for (int i = 1; i < g; ++i) frame_m.push_back(kf[static_cast<std::size_t>(i)].shift_down(2));
  TruncatedSeries sum = TruncatedSeries({}, order);
  for (const auto& [i, j] : quadric_pairs(g)) {
    const Rational a = q.a(i, j);
    if (a.is_zero()) continue;
    const auto& fi = frame_m[static_cast<std::size_t>(i)];
    const auto& fj = frame_m[static_cast<std::size_t>(j)];
    sum = sum + (nth(fi, 2 * k + 1) * fj - nth(fj, 2 * k + 1) * fi) * a;
  }
  const TruncatedSeries rhs = mu1 * sum * Rational(k + 1);

  FactorizationResult r;
  r.constant = factorization_constant(g, k);
  const int common = std::min(lhs.order(), rhs.order());
  const TruncatedSeries l = lhs.truncated(common);
  const TruncatedSeries rr = rhs.truncated(common);
  r.holds = r.constant ? (l == rr * *r.constant) : (l.known_zero() && rr.known_zero());
  r.lhs = Poly(std::vector<Rational>(l.known().begin(), l.known().end()));
  r.rhs = Poly(std::vector<Rational>(rr.known().begin(), rr.known().end()));
  return r;
}

bool b_support_check(const QuadricI2& q, int k) {
  require_kernel(q, k);
  const int g = q.genus();
  const BCoords b = BCoords::from_quadric(q);
  for (const auto& [r, m] : quadric_pairs(g)) {
    if (r + m >= 2 * g - (2 * k + 2) && !b.b(r, m).is_zero()) return false;
  }
  return true;
}

}  // namespace gaussmap
