#ifndef JETLAB_WRONSKIAN_HPP
#define JETLAB_WRONSKIAN_HPP

#include <utility>
#include <vector>

#include "jetlab/germ.hpp"
#include "jetlab/jet_polynomial.hpp"

namespace jetlab {

// Family of q hyperplanes in CP^n given by inhomogeneous affine forms
// F_i(x) = a_0 + a_1 x_1 + ... + a_n x_n with exact rational coefficients
// (stored constant term first).
struct HyperplaneArrangement {
  int n = 1;
  std::vector<std::vector<Rational>> forms;

  int count() const { return static_cast<int>(forms.size()); }
};

// Exact determinant of a square rational matrix (Gaussian elimination).
Rational rational_det(std::vector<std::vector<Rational>> m);

// True iff every (n+1)-subset of the homogenized forms is nonsingular,
// checked by exact rational determinants. Requires q >= n+1.
bool check_general_position(const HyperplaneArrangement& a);

// Arrangement on the Vandermonde moment curve: F_i = 1 + t_i x_1 + t_i^2 x_2
// + ... with distinct integers t_i = 1..q. In general position for every q.
HyperplaneArrangement vandermonde_arrangement(int n, int q);

// The section-6 jet differential Wron(dx_1,...,dx_n) / (F_1 ... F_q): the
// numerator expands to an isobaric polynomial of weight n(n+1)/2 and the
// denominator contributes vanishing order q-(n+1) on the infinity
// hyperplane.
struct WronskianDifferential {
  HyperplaneArrangement arrangement;
  JetPolynomial numerator;  // det(d^a x_b), rows a = 1..n, columns b = 1..n
  int jet_order = 1;
  int weight = 0;
  int vanishing_order = 0;
};

WronskianDifferential build_wronskian(const HyperplaneArrangement& a, int jet_order = -1);

// Local rewriting over a subset I of n hyperplanes whose forms are nowhere
// zero off I: Wron(dx) = constant * (prod_{i in I} F_i) * det(M), where
// M[a][s] expands (d^a F_{i_s})/F_{i_s} in the log coordinates of variable
// i_s, and constant is the inverse determinant of the chosen basis change.
struct LocalLogForm {
  std::vector<int> index_set;  // 1-based hyperplane indices, |I| = n
  JetPolynomial log_polynomial;  // det(M); Log coordinates indexed by hyperplane
  CRat constant;
};

LocalLogForm local_log_form(const WronskianDifferential& w, const std::vector<int>& index_set);

// Exact verification of the local rewriting on the jet of a concrete germ
// tuple at z: evaluates both sides and compares as complex rationals.
bool verify_local_log_form(const WronskianDifferential& w, const LocalLogForm& form,
                           const std::vector<ExactGerm>& coordinate_germs, const CRat& z);

// (m, m_tilde) = (n(n+1)/2, q-(n+1)). The twist condition m_tilde > 2m holds
// iff q > n^2 + 2n + 1.
std::pair<long, long> recover_fujimoto_weight(long n, long q);

}  // namespace jetlab

#endif
