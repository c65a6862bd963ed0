#ifndef JETLAB_BOUNDS_HPP
#define JETLAB_BOUNDS_HPP

#include <optional>
#include <vector>

#include "jetlab/numeric.hpp"

namespace jetlab {

// The integer constants of the jet-differential existence argument at jet
// order k = n+1. Everything exact; no floating point in this module.
struct JetParameters {
  long n = 1;
  BigInt k;        // n + 1
  BigInt k_prime;  // k(k+1)/2
  BigInt delta;    // (k+1)n + k
  BigInt r0;       // delta^(k-1) (delta+1)(delta+2)
  // the same constant in its summed form 2 delta^(k-1) k' + delta^(k-1) (delta+1)^2;
  // the two coincide exactly iff 2k' = delta + 1
  BigInt r0_sum_form;
  bool r0_forms_agree = false;
};

JetParameters jet_parameters(long n);

// k(k + delta - 1 + k delta) < (delta + 1)^2, exactly.
bool key_inequality(long n);

// d = epsilon + (r+k) delta with k <= epsilon <= k+delta-1 and
// r > 2 delta^(k-1) k' + delta^(k-1) k (epsilon + k delta). Feasible for
// every d >= (r0+k) delta + 2 delta; smaller d report infeasible at this
// threshold (which does not preclude smaller feasible degrees).
struct DegreeDecomposition {
  BigInt epsilon;
  BigInt r;
  bool r_inequality_holds = false;
};
std::optional<DegreeDecomposition> decompose_degree(long n, const BigInt& d);

// Feasibility threshold (r0+k) delta + 2 delta against the theorem's stated
// bound (n+1)^(n+3) (n+2)^(n+3).
struct ThresholdComparison {
  BigInt threshold;
  BigInt stated;
  bool ok = false;  // threshold < stated
};
ThresholdComparison threshold_vs_stated_bound(long n);

// Main-theorem degree bound n^(n+2) (n+1)^(n+2) for the Gauss map into
// CP^(n-1); equals the theorem's bound at dimension n-1.
BigInt main_theorem_bound(long n_ambient);

// Exact ratios m / m-tilde with m = beta + alpha delta^(k-1) k' and
// m-tilde = -beta~ - alpha (delta^(k-1) k (epsilon + k delta) - r), for the
// decomposition of a chosen degree (default: minimal feasible). The limit
// value delta^(k-1) k' / (r - delta^(k-1) k (epsilon+k delta)) is below 1/2
// whenever the decomposition is feasible.
struct TwistRatios {
  std::vector<Rational> ratios;  // one per alpha
  Rational limit;
  bool limit_below_half = false;
};
TwistRatios twist_ratio_limit(long n, const std::vector<long>& alpha_grid,
                              const std::optional<BigInt>& degree = std::nullopt,
                              const BigInt& beta = BigInt(0),
                              const BigInt& beta_tilde = BigInt(0));

}  // namespace jetlab

#endif
