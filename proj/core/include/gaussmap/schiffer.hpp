#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaussmap/curve.hpp"
#include "gaussmap/gaussian_maps.hpp"
#include "gaussmap/matrix.hpp"
#include "gaussmap/quadric.hpp"
#include "gaussmap/random.hpp"

namespace gaussmap {

/// Odd positive n, standing for the invariant Schiffer variation xi_p^n.
class SchifferIndex {
 public:
  explicit SchifferIndex(int n);
  int n() const { return n_; }

 private:
  int n_;
};

/// D(h,l) = sum c_ab g_a^(h)(p) g_b^(l)(p) over the K-frame expansions, for
/// all h + l <= bound.
class DerivativePairing {
 public:
  DerivativePairing(const QuadricI2& q, const Curve& curve, int bound);

  int bound() const { return bound_; }
  /// Throws SeriesTruncated for h + l beyond the bound.
  const Rational& at(int h, int l) const;
  /// Largest m <= bound with D(h,l) = 0 for all h + l <= m (-1 if D(0,0) != 0).
  int threshold() const { return threshold_; }
  bool at_cap() const { return threshold_ == bound_; }

 private:
  int bound_;
  std::vector<std::vector<Rational>> d_;  // d_[h][l]
  int threshold_;
};

Rational derivative_sum(const QuadricI2& q, const Curve& curve, int h, int l);

struct Threshold {
  int value = 0;
  bool at_cap = false;
};

Threshold vanishing_threshold(const QuadricI2& q, const Curve& curve, int cap);
/// Cap 4k+8, raised up to 2(4k+8) while the pairing still vanishes.
Threshold vanishing_threshold_auto(const QuadricI2& q, const Curve& curve, int k);

/// Exact value r, meaning rho = r * 2 pi i in the fixed coordinate z = y.
struct RhoValue {
  Rational value;
  int n = 0;
  int r = 0;
  /// Threshold that licensed the evaluation (capped at n + r when the
  /// pairing vanishes that far).
  int licensing_threshold = 0;
};

/// The pair-sum formula sum_{u<n} D(N-u,u) (n-u) / (u! (N-u)!), N = n + r,
/// with no licensing check. Linear in Q.
Rational schiffer_formula(const QuadricI2& q, const Curve& curve, int n, int r);

/// rho(Q)(xi^n . xi^r). Throws BeyondThreshold unless D vanishes for all
/// h + l <= n + r - 1.
RhoValue rho_pair(const QuadricI2& q, const Curve& curve, SchifferIndex n, SchifferIndex r);

struct RhoCheck {
  std::size_t quadric = 0;  // index into the kernel basis
  int n = 0;
  int r = 0;
  RhoValue rho;
  bool ok = false;
};

struct IsotropyReport {
  int genus = 0;
  int k = 0;
  std::size_t kernel_dim = 0;
  std::vector<RhoCheck> checks;
  bool ok = true;
};

/// Every kernel basis element of Ker mu_{2k} against every odd pair with
/// sum <= 4k+3; all must vanish.
IsotropyReport isotropy_suite(int genus, int k, const Curve& curve);

/// A linear functional on a subspace of I_2, written on the coordinate
/// subspace of b-coordinates where the subspace lives.
struct Functional {
  int genus = 0;
  int k = 0;
  int n = 0;
  int r = 0;
  std::vector<RatVector> domain_basis;  // a-coordinates
  RatVector values;                     // licensed rho on each domain vector
  /// Nonzero coefficients, keyed by b-index (r, m).
  std::map<IndexPair, Rational> coefficients;
  std::vector<IndexPair> expected_support;
  bool nonzero = false;
  bool support_ok = false;
  bool support_coefficients_nonzero = false;
  /// The coordinate form reproduces the licensed values on the domain.
  bool matches_licensed = false;

  Rational apply(const QuadricI2& q) const;
};

struct LambdaComparison {
  std::vector<Rational> actual;     // coefficient at b_{g-2k-3+u, g-u}
  std::vector<Rational> printed;    // odd-factor closed form
  std::vector<Rational> corrected;  // closed form with both factorial weights
  std::vector<long> odd_factor;     // -8u^3 + 8u^2(k+1) - 4ku - 2k - 3, u <= k
  bool odd_factor_odd = false;
  bool printed_proportional = false;
  bool corrected_proportional = false;
  std::optional<Rational> printed_constant;
  std::optional<Rational> corrected_constant;
};

/// Q -> rho(Q)(xi^{2k+3} . xi^{2k+1}) on Ker mu_{2k}.
Functional witness_functional(int genus, int k, const Curve& curve);
LambdaComparison compare_lambda(const Functional& f, const Curve& curve);

/// A_{k,0}: kernel of the witness functional inside Ker mu_{2k}.
struct Hyperplane {
  int genus = 0;
  int k = 0;
  std::size_t ambient_dim = 0;
  std::vector<RatVector> basis;
  /// The witness support coordinates vanish on every basis vector.
  bool support_vanishes = false;
};

Hyperplane hyperplane_Ak0(int genus, int k, const Curve& curve);

struct DiagonalFunctional {
  Functional functional;
  std::vector<RatVector> a_k00;  // kernel of the functional inside A_{k,0}
};

/// Q -> rho(Q)(xi^{2k+3} . xi^{2k+3}) on A_{k,0}. Throws
/// ThresholdNotExtended if some basis member of A_{k,0} has a nonzero
/// pairing at total order <= 4k+5.
DiagonalFunctional diag_functional_on_Ak0(int genus, int k, const Curve& curve);

enum class Verdict { Asymptotic, NotAsymptotic };

struct AsymptoticCertificate {
  std::vector<Rational> lambdas;  // coefficients of xi^1, xi^3, ...
  Verdict verdict = Verdict::Asymptotic;
  int top_index = 1;
  /// Level k-1 of the hyperplane the witness comes from.
  int witness_level = -1;
  std::optional<QuadricI2> witness;
  Rational value;  // rho(witness)(v . v)
  /// Number of evaluated cross terms, all of which must be exactly zero.
  std::size_t cross_terms = 0;
  bool cross_terms_zero = true;
  /// For the asymptotic verdict: number of basis quadrics checked.
  std::size_t quadrics_checked = 0;
};

/// Number of invariant directions xi^1, xi^3, ... spanning V.
int direction_count(int genus);

AsymptoticCertificate asymptotic_classify(const Curve& curve, const std::vector<Rational>& lambdas);

/// Shares the witness computations across many directions on one curve.
class AsymptoticClassifier {
 public:
  explicit AsymptoticClassifier(const Curve& curve);
  AsymptoticCertificate classify(const std::vector<Rational>& lambdas);

 private:
  struct Witness {
    QuadricI2 q;
    std::vector<std::vector<RhoValue>> pairs;  // [i][j] over odd indices
  };
  const Witness& witness_for(int k);

  Curve curve_;
  std::map<int, Witness> witnesses_;
  std::optional<std::size_t> asymptotic_checked_;
};

/// Uniform random direction in V with top odd index >= 3.
std::vector<Rational> random_direction(int genus, SeededRng& rng);

struct CupRank {
  int n = 0;
  std::size_t rank = 0;
  std::vector<RatVector> kernel;
  bool rank_bound_ok = false;
  bool kernel_contains_vanishing = false;
};

/// Pairing P_ij = [z^{n-1}] (g_i g_j) over the K-frame expansions.
CupRank cup_rank(const Curve& curve, int n);

struct WeierstrassCrossCheck {
  Poly x_chart;  // mu_2(Q) on the affine chart
  TruncatedSeries transformed;  // x_chart pulled back to z, frame (dz)^4
  TruncatedSeries z_chart;      // sum c g_a'' g_b
  bool series_agree = false;
  Rational mu2_at_p;
  RhoValue rho11;
  bool ok = false;
};

/// rho(Q)(xi^1 . xi^1) against the value at p of mu_2(Q) computed from the
/// x-chart polynomial.
WeierstrassCrossCheck mu2_at_weierstrass(const QuadricI2& q, const Curve& curve);

}  // namespace gaussmap
