#ifndef JETLAB_GERM_HPP
#define JETLAB_GERM_HPP

#include <limits>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "jetlab/jet_polynomial.hpp"
#include "jetlab/series.hpp"

namespace jetlab {

// Holomorphic germ at 0, carried by a truncated power series plus a validity
// radius. Polynomial germs (the truncation is the whole function) have
// infinite radius and every operation on them is exact; germs that truncate
// a transcendental function carry the radius inside which the truncation was
// validated, and evaluation stays within 0.9 of it.
template <class T>
struct Germ {
  Series<T> series;
  double radius = std::numeric_limits<double>::infinity();

  Germ() = default;
  explicit Germ(Series<T> s, double r = std::numeric_limits<double>::infinity())
      : series(std::move(s)), radius(r) {}

  int truncation_order() const { return series.order(); }
};

using ExactGerm = Germ<CRat>;
using FloatGerm = Germ<std::complex<double>>;

// Lossy exact-to-floating conversion; there is deliberately no way back.
inline FloatGerm to_float(const ExactGerm& g) { return FloatGerm(to_float(g.series), g.radius); }

// Default truncation order for jet order k: slack for products inside
// weight-m polynomials with m <= 2k.
inline int default_truncation_order(int jet_order) { return 2 * jet_order + 4; }

ExactGerm make_polynomial_germ(std::vector<CRat> coeff, int truncation_order);
// exp(z) truncated; entire, so any finite radius is valid.
ExactGerm make_exp_germ(int truncation_order);
// 1/(1-z) truncated; validity radius 1.
ExactGerm make_geometric_germ(int truncation_order);

inline double scalar_abs(const CRat& v) { return abs_value(v); }
inline double scalar_abs(const std::complex<double>& v) { return std::abs(v); }

// f o phi_lambda with phi_lambda(z) = lambda z. The validity radius shrinks
// by |lambda|; lambda = 0 leaves the constant germ, valid everywhere.
template <class T>
Germ<T> compose_homothety(const Germ<T>& g, const T& lambda) {
  double a = scalar_abs(lambda);
  double r = a > 0 ? g.radius / a : std::numeric_limits<double>::infinity();
  return Germ<T>(g.series.compose_homothety(lambda), r);
}

// Numeric jet of a tuple of germs at a point: the values of every jet
// coordinate a polynomial may reference.
template <class T>
struct JetVector {
  std::map<JetCoordinate, T> values;
};

// Derivative values f^(0..k)(z) of a germ, by repeated formal derivative and
// Taylor recentering. Throws InsufficientOrderError when the truncation or
// the validity radius cannot support the request.
template <class T>
std::vector<T> derivative_values(const Germ<T>& g, int k, const T& z);

// Jet of a germ tuple at z. Variables are indexed 1..n in tuple order. For
// i in divisor_vars the Plain entries hold the quotient symbols
// f_i^(j)(z)/f_i(z) and the Log entries hold (log f_i)^(j)(z), the latter
// obtained from the Faa di Bruno expansion applied to the quotients. For
// other variables the Plain entries hold f_i^(j)(z).
template <class T>
JetVector<T> jet_of(std::span<const Germ<T>> germs, int k, const T& z,
                    const std::set<int>& divisor_vars = {});

template <class T>
JetVector<T> jet_of(const std::vector<Germ<T>>& germs, int k, const T& z,
                    const std::set<int>& divisor_vars = {}) {
  return jet_of(std::span<const Germ<T>>(germs.data(), germs.size()), k, z, divisor_vars);
}

// Value of a jet polynomial at a jet; exact when T is CRat.
template <class T>
T evaluate(const JetPolynomial& p, const JetVector<T>& jet);

// Checks the weighted-homogeneity law Q(j_k(f o phi_lambda))(z) =
// lambda^m Q(j_k(f))(lambda z) to 1e-10 relative. Exact germs evaluate
// exactly; the comparison happens in double at the end.
bool homothety_weight_check(const JetPolynomial& p, int weight,
                            const std::vector<ExactGerm>& germs, const CRat& lambda,
                            const CRat& eval_point, const std::set<int>& divisor_vars = {});

extern template std::vector<CRat> derivative_values(const ExactGerm&, int, const CRat&);
extern template std::vector<std::complex<double>> derivative_values(
    const FloatGerm&, int, const std::complex<double>&);
extern template JetVector<CRat> jet_of(std::span<const ExactGerm>, int, const CRat&,
                                       const std::set<int>&);
extern template JetVector<std::complex<double>> jet_of(std::span<const FloatGerm>, int,
                                                       const std::complex<double>&,
                                                       const std::set<int>&);
extern template CRat evaluate(const JetPolynomial&, const JetVector<CRat>&);
extern template std::complex<double> evaluate(const JetPolynomial&,
                                              const JetVector<std::complex<double>>&);

}  // namespace jetlab

#endif
