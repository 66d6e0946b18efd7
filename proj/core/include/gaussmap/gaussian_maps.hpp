#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "gaussmap/curve.hpp"
#include "gaussmap/matrix.hpp"
#include "gaussmap/poly.hpp"
#include "gaussmap/quadric.hpp"

namespace gaussmap {

/// Linear system on the a-coordinates whose solution space is Ker mu_{2k}.
struct EquationSystem {
  int genus = 0;
  int level = 0;
  RatMatrix rows;
  /// Row m-1 of `rows_by_m` lists the equations introduced at level m.
  std::vector<RatMatrix> rows_by_m;
  /// n_l = #{(i,j) : i + j = l}.
  std::map<int, int> n_l;
  /// s_m = rank increment from level m-1 to level m, for m = 1..level.
  std::vector<int> s;
};

struct KernelLevel {
  int genus = 0;
  int k = 0;
  /// Canonical (reduced echelon) basis in a-coordinates.
  std::vector<RatVector> basis;
  std::size_t dimension = 0;
  /// dim Ker mu_{2k-2} - dim Ker mu_{2k}; for k = 0, the rank of mu_0 on S^2.
  std::size_t rank = 0;

  std::vector<QuadricI2> quadrics() const;
};

struct KernelChain {
  int genus = 0;
  std::vector<KernelLevel> levels;  // levels[k] for k = 0..K
};

/// Closed forms for the rank and kernel dimension of mu_{2k}.
long expected_rank(int genus, int k);
long expected_kernel_dim(int genus, int k);

EquationSystem build_kernel_equations(int genus, int k);

/// Kernel chain from the explicit a_ij equations, each level solved inside
/// the previous kernel.
KernelChain kernel_chain_via_equations(int genus, int k);
KernelLevel kernel_via_equations(int genus, int k);

/// Brute-force route: imposes the polynomial identities
/// sum c_ab (x^a)^(h) (x^b)^(n) == 0 for h + n <= 2j + 1 level by level.
/// Level 0 is recomputed from mu_0 on S^2 rather than taken from the
/// quadric basis.
KernelChain kernel_chain_via_polynomial_oracle(int genus, int k);
KernelLevel kernel_via_polynomial_oracle(int genus, int k);

struct RankRow {
  int genus;
  int k;
  long rank;
  long dim_ker;
  bool formula_ok;
};

/// Rows for 0 <= k <= floor((g-1)/2); beyond that the domain of mu_{2k} is 0.
std::vector<RankRow> rank_table(int g_min, int g_max);

/// sum c_ab (x^a)^(h) (x^b)^(n) in the x-chart.
Poly derivative_pair_polynomial(const QuadricI2& q, int h, int n);
/// True iff every identity with h + n <= 2k + 1 holds, i.e. Q in Ker mu_{2k}.
bool in_even_kernel(const QuadricI2& q, int k);

/// x-chart polynomial of mu_{2k}(Q). Throws NotInPreviousKernel unless
/// Q is in Ker mu_{2k-2}.
Poly mu_eval_polynomial(const QuadricI2& q, int k);

struct OddRank {
  std::size_t domain_dim = 0;
  std::size_t kernel_dim = 0;
  std::size_t rank = 0;
};

/// mu_{2k+1} on Ker mu_{2k-1} (all of the second exterior power for k = 0).
OddRank odd_kernel_and_rank(int genus, int k);

struct FactorizationResult {
  bool holds = false;
  /// LHS / RHS, fixed once per (g, k); empty if every RHS vanishes.
  std::optional<Rational> constant;
  Poly lhs;
  Poly rhs;
};

/// Compares the x-chart polynomial of mu_{2k+2}(Q) with
/// (k+1) mu_{1,L}(s^t) mu_{2k+1,M}(sum a_ij F_i ^ F_j), F_i = x^{i-1}, up to
/// the frame constant of (g, k). Throws NotInKernel unless Q in Ker mu_{2k}.
FactorizationResult factorization_check(const QuadricI2& q, int k);

/// Same identity at p in the local coordinate z, using the K-frame series,
/// the M-frame F_i = (K-frame of alpha_i) / z^2, and the matching L-frame
/// f_s = z^2, f_t = z^2 / x. Compared below the known series order.
FactorizationResult factorization_check_local(const QuadricI2& q, int k, const Curve& curve);

/// The constant LHS / RHS of the factorization identity at level k.
std::optional<Rational> factorization_constant(int genus, int k);

/// True iff b_{r,m} = 0 whenever r + m >= 2g - (2k+2). Throws NotInKernel.
bool b_support_check(const QuadricI2& q, int k);

}  // namespace gaussmap
