#include "gaussmap/schiffer.hpp"

#include <algorithm>

#include "gaussmap/error.hpp"

namespace gaussmap {

namespace {

// Coefficients [z^h] g_a for h < order, per canonical section.
std::vector<TruncatedSeries> k_frame(const Curve& curve, int order) {
  std::vector<TruncatedSeries> out;
  for (int a = 0; a < curve.genus(); ++a) out.push_back(curve.expand_canonical(a, order).series);
  return out;
}

// sum c_ab [z^h] g_a [z^l] g_b
Rational raw_pairing(const QuadricI2& q, const std::vector<TruncatedSeries>& g, int h, int l) {
  if (h % 2 != 0 || l % 2 != 0) return Rational(0);  // even series
  Rational s;
  for (const auto& t : q.terms()) {
    const Rational& x = g[static_cast<std::size_t>(t.alpha)].coeff(h);
    if (x.is_zero()) continue;
    const Rational& y = g[static_cast<std::size_t>(t.beta)].coeff(l);
    if (!y.is_zero()) s += t.c * x * y;
  }
  return s;
}

bool all_zero(const RatVector& v) { return is_zero_vector(v); }

std::optional<Rational> proportionality(const std::vector<Rational>& actual,
                                        const std::vector<Rational>& model) {
  std::optional<Rational> c;
  for (std::size_t u = 0; u < actual.size(); ++u) {
    if (model[u].is_zero()) {
      if (!actual[u].is_zero()) return std::nullopt;
      continue;
    }
    const Rational ratio = actual[u] / model[u];
    if (!c) {
      c = ratio;
    } else if (*c != ratio) {
      return std::nullopt;
    }
  }
  return c;
}

// Functional on the coordinate subspace of b-indices with r + m <= max_sum:
// coefficient of b_{r,m} is the pair-sum formula on the b-basis quadric.
std::map<IndexPair, Rational> coordinate_form(int g, int max_sum, int n, int r, const Curve& curve) {
  std::map<IndexPair, Rational> out;
  for (const auto& [br, bm] : quadric_pairs(g)) {
    if (br + bm > max_sum) continue;
    const Rational v = schiffer_formula(b_basis_quadric(g, br, bm), curve, n, r);
    if (!v.is_zero()) out[{br, bm}] = v;
  }
  return out;
}

Functional build_functional(int g, int k, int n, int r, int max_sum,
                            std::vector<RatVector> domain, std::vector<IndexPair> expected,
                            const Curve& curve) {
  Functional f;
  f.genus = g;
  f.k = k;
  f.n = n;
  f.r = r;
  f.domain_basis = std::move(domain);
  f.expected_support = std::move(expected);
  for (const auto& v : f.domain_basis) {
    f.values.push_back(rho_pair(QuadricI2(g, v), curve, SchifferIndex(n), SchifferIndex(r)).value);
  }
  f.coefficients = coordinate_form(g, max_sum, n, r, curve);
  f.nonzero = !all_zero(f.values);
  f.support_ok = std::all_of(f.coefficients.begin(), f.coefficients.end(), [&](const auto& kv) {
    return std::find(f.expected_support.begin(), f.expected_support.end(), kv.first) !=
           f.expected_support.end();
  });
  f.support_coefficients_nonzero =
      std::all_of(f.expected_support.begin(), f.expected_support.end(),
                  [&](const IndexPair& p) { return f.coefficients.count(p) > 0; });
  f.matches_licensed = true;
  for (std::size_t i = 0; i < f.domain_basis.size(); ++i) {
    if (f.apply(QuadricI2(g, f.domain_basis[i])) != f.values[i]) f.matches_licensed = false;
  }
  return f;
}

std::vector<RatVector> functional_kernel(const std::vector<RatVector>& basis, const RatVector& values,
                                         std::size_t dim) {
  if (basis.empty()) return {};
  RatMatrix m(1, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) m.at(0, i) = values[i];
  std::vector<RatVector> out;
  for (const auto& coeffs : kernel_basis(m)) {
    RatVector v(dim);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      for (std::size_t n = 0; n < dim; ++n) v[n] += coeffs[i] * basis[i][n];
    }
    out.push_back(std::move(v));
  }
  return canonical_basis(out, dim);
}

}  // namespace

SchifferIndex::SchifferIndex(int n) : n_(n) {
  if (n < 1 || n % 2 == 0) {
    throw Error(ErrorCode::InvalidIndex,
                "Schiffer index " + std::to_string(n) + " must be odd and positive");
  }
}

DerivativePairing::DerivativePairing(const QuadricI2& q, const Curve& curve, int bound)
    : bound_(bound), threshold_(bound) {
  const auto g = k_frame(curve, bound + 1);
  d_.assign(static_cast<std::size_t>(bound + 1), {});
  for (int h = 0; h <= bound; ++h) {
    d_[static_cast<std::size_t>(h)].resize(static_cast<std::size_t>(bound - h + 1));
    for (int l = 0; h + l <= bound; ++l) {
      Rational v = raw_pairing(q, g, h, l);
      if (!v.is_zero()) v *= factorial(h) * factorial(l);
      d_[static_cast<std::size_t>(h)][static_cast<std::size_t>(l)] = std::move(v);
    }
  }
  for (int s = 0; s <= bound; ++s) {
    for (int h = 0; h <= s; ++h) {
      if (!at(h, s - h).is_zero()) {
        threshold_ = s - 1;
        return;
      }
    }
  }
}

const Rational& DerivativePairing::at(int h, int l) const {
  if (h < 0 || l < 0 || h + l > bound_) {
    throw Error(ErrorCode::SeriesTruncated, "pairing D(" + std::to_string(h) + "," +
                                                std::to_string(l) + ") beyond computed bound " +
                                                std::to_string(bound_));
  }
  return d_[static_cast<std::size_t>(h)][static_cast<std::size_t>(l)];
}

Rational derivative_sum(const QuadricI2& q, const Curve& curve, int h, int l) {
  const auto g = k_frame(curve, std::max(h, l) + 1);
  return raw_pairing(q, g, h, l) * factorial(h) * factorial(l);
}

Threshold vanishing_threshold(const QuadricI2& q, const Curve& curve, int cap) {
  const DerivativePairing d(q, curve, cap);
  return {d.threshold(), d.at_cap()};
}

Threshold vanishing_threshold_auto(const QuadricI2& q, const Curve& curve, int k) {
  const int base = 4 * k + 8;
  Threshold t = vanishing_threshold(q, curve, base);
  if (t.at_cap) t = vanishing_threshold(q, curve, 2 * base);
  return t;
}

Rational schiffer_formula(const QuadricI2& q, const Curve& curve, int n, int r) {
  const int total = n + r;
  const auto g = k_frame(curve, total + 1);
  // D(N-u,u) / (u! (N-u)!) is the raw coefficient pairing.
  Rational s;
  for (int u = 0; u < n; ++u) {
    const Rational v = raw_pairing(q, g, total - u, u);
    if (!v.is_zero()) s += v * Rational(n - u);
  }
  return s;
}

RhoValue rho_pair(const QuadricI2& q, const Curve& curve, SchifferIndex n, SchifferIndex r) {
  const int total = n.n() + r.n();
  const DerivativePairing d(q, curve, total);
  if (d.threshold() < total - 1) {
    throw Error(ErrorCode::BeyondThreshold,
                "pair (" + std::to_string(n.n()) + "," + std::to_string(r.n()) + ") has sum " +
                    std::to_string(total) + " but the vanishing threshold is " +
                    std::to_string(d.threshold()));
  }
  RhoValue out;
  out.n = n.n();
  out.r = r.n();
  out.licensing_threshold = d.threshold();
  for (int u = 0; u < n.n(); ++u) {
    const Rational& v = d.at(total - u, u);
    if (v.is_zero()) continue;
    out.value += v * Rational(n.n() - u) / (factorial(u) * factorial(total - u));
  }
  return out;
}

IsotropyReport isotropy_suite(int genus, int k, const Curve& curve) {
  IsotropyReport rep;
  rep.genus = genus;
  rep.k = k;
  const KernelLevel lvl = kernel_via_equations(genus, k);
  rep.kernel_dim = lvl.dimension;
  for (std::size_t qi = 0; qi < lvl.basis.size(); ++qi) {
    const QuadricI2 q(genus, lvl.basis[qi]);
    for (int n = 1; 2 * n <= 4 * k + 3; n += 2) {
      for (int r = n; n + r <= 4 * k + 3; r += 2) {
        RhoCheck c;
        c.quadric = qi;
        c.n = n;
        c.r = r;
        try {
          c.rho = rho_pair(q, curve, SchifferIndex(n), SchifferIndex(r));
          c.ok = c.rho.value.is_zero();
        } catch (const Error& e) {
          if (e.code() != ErrorCode::BeyondThreshold) throw;
          c.ok = false;
        }
        rep.ok = rep.ok && c.ok;
        rep.checks.push_back(std::move(c));
      }
    }
  }
  return rep;
}

Rational Functional::apply(const QuadricI2& q) const {
  const BCoords b = BCoords::from_quadric(q);
  Rational s;
  for (const auto& [idx, c] : coefficients) s += c * b.b(idx.first, idx.second);
  return s;
}

Functional witness_functional(int genus, int k, const Curve& curve) {
  std::vector<IndexPair> expected;
  for (int u = 1; u <= k + 1; ++u) expected.emplace_back(genus - 2 * k - 3 + u, genus - u);
  // Ker mu_{2k} lies in the span of b_{r,m} with r + m <= 2g - 2k - 3.
  return build_functional(genus, k, 2 * k + 3, 2 * k + 1, 2 * genus - 2 * k - 3,
                          kernel_via_equations(genus, k).basis, std::move(expected), curve);
}

LambdaComparison compare_lambda(const Functional& f, const Curve& curve) {
  LambdaComparison cmp;
  const int g = f.genus;
  const int k = f.k;
  for (int u = 1; u <= k + 1; ++u) {
    const IndexPair idx{g - 2 * k - 3 + u, g - u};
    auto it = f.coefficients.find(idx);
    cmp.actual.push_back(it == f.coefficients.end() ? Rational(0) : it->second);
    const Rational p = curve.omega_derivative(g - 3 - 2 * k + u, 4 * k + 4 - 2 * u) *
                       curve.omega_derivative(g - u, 2 * u - 2);
    if (u <= k) {
      const long odd = -8L * u * u * u + 8L * u * u * (k + 1) - 4L * k * u - 2L * k - 3;
      cmp.odd_factor.push_back(odd);
      cmp.printed.push_back(p * Rational(odd) / (Rational(2) * factorial(4 * k + 4 - 2 * u)));
      cmp.corrected.push_back(-p / (factorial(2 * u - 2) * factorial(4 * k + 4 - 2 * u)));
    } else {
      cmp.printed.push_back(-p / (Rational(2) * factorial(2 * k + 2)));
      cmp.corrected.push_back(-p / (Rational(2) * factorial(2 * k) * factorial(2 * k + 2)));
    }
  }
  cmp.odd_factor_odd = std::all_of(cmp.odd_factor.begin(), cmp.odd_factor.end(),
                                   [](long v) { return v % 2 != 0; });
  cmp.printed_constant = proportionality(cmp.actual, cmp.printed);
  cmp.corrected_constant = proportionality(cmp.actual, cmp.corrected);
  cmp.printed_proportional = cmp.printed_constant.has_value() && !cmp.printed_constant->is_zero();
  cmp.corrected_proportional =
      cmp.corrected_constant.has_value() && !cmp.corrected_constant->is_zero();
  return cmp;
}

Hyperplane hyperplane_Ak0(int genus, int k, const Curve& curve) {
  const Functional f = witness_functional(genus, k, curve);
  Hyperplane h;
  h.genus = genus;
  h.k = k;
  h.ambient_dim = f.domain_basis.size();
  h.basis = functional_kernel(f.domain_basis, f.values, quadric_dimension(genus));
  h.support_vanishes = true;
  for (const auto& v : h.basis) {
    const BCoords b = BCoords::from_quadric(QuadricI2(genus, v));
    for (const auto& [r, m] : f.expected_support) {
      if (!b.b(r, m).is_zero()) h.support_vanishes = false;
    }
  }
  return h;
}

DiagonalFunctional diag_functional_on_Ak0(int genus, int k, const Curve& curve) {
  const Hyperplane h = hyperplane_Ak0(genus, k, curve);
  for (std::size_t i = 0; i < h.basis.size(); ++i) {
    const DerivativePairing d(QuadricI2(genus, h.basis[i]), curve, 4 * k + 5);
    if (d.threshold() < 4 * k + 5) {
      throw Error(ErrorCode::ThresholdNotExtended,
                  "A_{" + std::to_string(k) + ",0} basis vector " + std::to_string(i) +
                      " has threshold " + std::to_string(d.threshold()) + " < " +
                      std::to_string(4 * k + 5));
    }
  }
  std::vector<IndexPair> expected;
  for (int u = 1; u <= k + 1; ++u) {
    const int r = genus - 4 - 2 * k + u;
    const int m = genus - u;
    if (r >= 1 && r < m) expected.emplace_back(r, m);
  }
  DiagonalFunctional out;
  // A_{k,0} lies in the span of b_{r,m} with r + m <= 2g - 2k - 4.
  out.functional = build_functional(genus, k, 2 * k + 3, 2 * k + 3, 2 * genus - 2 * k - 4, h.basis,
                                    std::move(expected), curve);
  out.a_k00 = functional_kernel(out.functional.domain_basis, out.functional.values,
                                quadric_dimension(genus));
  return out;
}

int direction_count(int genus) { return (genus - 2) / 2 + 1; }

AsymptoticClassifier::AsymptoticClassifier(const Curve& curve) : curve_(curve) {}

const AsymptoticClassifier::Witness& AsymptoticClassifier::witness_for(int k) {
  auto it = witnesses_.find(k);
  if (it != witnesses_.end()) return it->second;
  const int g = curve_.genus();
  const DiagonalFunctional diag = diag_functional_on_Ak0(g, k - 1, curve_);
  const Functional& f = diag.functional;
  std::optional<QuadricI2> chosen;
  for (std::size_t i = 0; i < f.domain_basis.size(); ++i) {
    if (!f.values[i].is_zero()) {
      chosen = QuadricI2(g, f.domain_basis[i]);
      break;
    }
  }
  if (!chosen) {
    throw Error(ErrorCode::NoWitnessFound,
                "A_{" + std::to_string(k - 1) + ",0} has no vector outside A_{" +
                    std::to_string(k - 1) + ",0,0}");
  }
  Witness w{*chosen, {}};
  const int top = 2 * k + 1;
  for (int i = 1; i <= top; i += 2) {
    std::vector<RhoValue> row;
    for (int j = 1; j <= top; j += 2) {
      row.push_back(rho_pair(w.q, curve_, SchifferIndex(i), SchifferIndex(j)));
    }
    w.pairs.push_back(std::move(row));
  }
  return witnesses_.emplace(k, std::move(w)).first->second;
}

AsymptoticCertificate AsymptoticClassifier::classify(const std::vector<Rational>& lambdas) {
  const int g = curve_.genus();
  if (static_cast<int>(lambdas.size()) != direction_count(g)) {
    throw Error(ErrorCode::InvalidIndex, "expected " + std::to_string(direction_count(g)) +
                                             " coefficients for xi^1, xi^3, ... in genus " +
                                             std::to_string(g));
  }
  int top = -1;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!lambdas[i].is_zero()) top = static_cast<int>(i);
  }
  if (top < 0) throw Error(ErrorCode::ZeroDirection, "all direction coefficients vanish");

  AsymptoticCertificate cert;
  cert.lambdas = lambdas;
  cert.top_index = 2 * top + 1;
  if (top == 0) {
    if (!asymptotic_checked_) {
      std::size_t n = 0;
      for (const auto& [i, j] : quadric_pairs(g)) {
        const RhoValue v = rho_pair(basis_quadric(g, i, j), curve_, SchifferIndex(1), SchifferIndex(1));
        if (!v.value.is_zero()) {
          throw Error(ErrorCode::InternalInconsistency,
                      "rho(Q_" + std::to_string(i) + std::to_string(j) + ")(xi^1 . xi^1) != 0");
        }
        ++n;
      }
      asymptotic_checked_ = n;
    }
    cert.verdict = Verdict::Asymptotic;
    cert.quadrics_checked = *asymptotic_checked_;
    return cert;
  }

  const int k = top;  // top odd index 2k+1
  const Witness& w = witness_for(k);
  cert.verdict = Verdict::NotAsymptotic;
  cert.witness_level = k - 1;
  cert.witness = w.q;
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b <= k; ++b) {
      const Rational& v = w.pairs[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].value;
      if (a == k && b == k) continue;
      ++cert.cross_terms;
      if (!v.is_zero()) cert.cross_terms_zero = false;
      if (!lambdas[static_cast<std::size_t>(a)].is_zero() && !lambdas[static_cast<std::size_t>(b)].is_zero()) {
        cert.value += lambdas[static_cast<std::size_t>(a)] * lambdas[static_cast<std::size_t>(b)] * v;
      }
    }
  }
  const Rational& lk = lambdas[static_cast<std::size_t>(k)];
  cert.value += lk * lk * w.pairs[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].value;
  return cert;
}

AsymptoticCertificate asymptotic_classify(const Curve& curve, const std::vector<Rational>& lambdas) {
  AsymptoticClassifier c(curve);
  return c.classify(lambdas);
}

std::vector<Rational> random_direction(int genus, SeededRng& rng) {
  const int count = direction_count(genus);
  for (;;) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) v.push_back(rng.rational(20, 10));
    bool higher = false;
    for (int i = 1; i < count; ++i) higher = higher || !v[static_cast<std::size_t>(i)].is_zero();
    if (higher) return v;
  }
}

CupRank cup_rank(const Curve& curve, int n) {
  const int g = curve.genus();
  if (n < 1 || n > g) {
    throw Error(ErrorCode::InvalidIndex,
                "cup product index " + std::to_string(n) + " outside 1.." + std::to_string(g));
  }
  const auto series = k_frame(curve, n);
  RatMatrix p(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      Rational s;
      for (int h = 0; h <= n - 1; ++h) {
        s += series[static_cast<std::size_t>(i)].coeff(h) *
             series[static_cast<std::size_t>(j)].coeff(n - 1 - h);
      }
      p.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s;
    }
  }
  CupRank out;
  out.n = n;
  out.rank = matrix_rank(p);
  out.kernel = kernel_basis(p);
  out.rank_bound_ok = out.rank <= static_cast<std::size_t>(n);
  out.kernel_contains_vanishing = true;
  for (int i = 0; i < g; ++i) {
    if (2 * i < n) continue;
    RatVector e(static_cast<std::size_t>(g));
    e[static_cast<std::size_t>(i)] = Rational(1);
    if (!is_zero_vector(p.apply(e))) out.kernel_contains_vanishing = false;
  }
  return out;
}

WeierstrassCrossCheck mu2_at_weierstrass(const QuadricI2& q, const Curve& curve) {
  WeierstrassCrossCheck out;
  const int g = q.genus();
  const int order = 2 * g + 8;
  out.x_chart = mu_eval_polynomial(q, 1);

  // (dx/y)^2 dx^2 = x'(z)^4 / z^2 dz^4 with y = z.
  const TruncatedSeries x = curve.x_of_z(order + 4);
  const TruncatedSeries dx = x.derivative();
  const TruncatedSeries frame = dx.pow(4).shift_down(2);
  const TruncatedSeries px = x.truncated(frame.order()).compose_into(out.x_chart);
  out.transformed = px * frame;

  const auto kf = k_frame(curve, order);
  TruncatedSeries z = TruncatedSeries({}, order - 2);
  for (const auto& t : q.terms()) {
    z = z + kf[static_cast<std::size_t>(t.alpha)].derivative().derivative() *
                kf[static_cast<std::size_t>(t.beta)] * t.c;
  }
  out.z_chart = z;
  const int common = std::min(out.transformed.order(), out.z_chart.order());
  out.series_agree = out.transformed.truncated(common) == out.z_chart.truncated(common);
  out.mu2_at_p = out.transformed.coeff(0);
  out.rho11 = rho_pair(q, curve, SchifferIndex(1), SchifferIndex(1));
  out.ok = out.series_agree && out.mu2_at_p.is_zero() && out.rho11.value.is_zero();
  return out;
}

}  // namespace gaussmap
