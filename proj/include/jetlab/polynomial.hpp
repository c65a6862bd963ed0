#ifndef JETLAB_POLYNOMIAL_HPP
#define JETLAB_POLYNOMIAL_HPP

#include <complex>
#include <utility>
#include <vector>

#include "jetlab/numeric.hpp"

namespace jetlab {

// Univariate polynomial with exact complex-rational coefficients, stored low
// to high with no leading zeros. Degree of the zero polynomial is -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<CRat> coeff) : c_(std::move(coeff)) { strip(); }
  static Poly constant(CRat v);
  static Poly monomial(CRat v, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<CRat>& coefficients() const { return c_; }
  const CRat& operator[](int j) const { return c_[static_cast<size_t>(j)]; }
  CRat leading() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const CRat& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const;
  Poly pow(int e) const;

  // Quotient and remainder over the field of complex rationals.
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  CRat eval(const CRat& z) const;
  std::complex<double> eval(const std::complex<double>& z) const;

  // Number of trailing zero coefficients = multiplicity of the root z = 0.
  int order_at_origin() const;

  Poly monic() const;

 private:
  void strip();
  std::vector<CRat> c_;
};

// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

// "1 - z^2", "(1/2+1/3*I)*z", "0".
std::string to_string(const Poly& p);

// Yun's square-free decomposition: returns pairs (squarefree factor, k) with
// p = lc * prod factor_k^k, factors pairwise coprime, multiplicities
// ascending. Exact; this is what makes divisor multiplicities exact.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// All complex roots of a squarefree polynomial, via the Durand-Kerner
// iteration in double precision.
std::vector<std::complex<double>> roots_squarefree(const Poly& p);

// Roots with exact multiplicities: squarefree decomposition first, numeric
// root finding per factor. The origin root is split off exactly.
struct RootWithMultiplicity {
  std::complex<double> location;
  int multiplicity;
};
std::vector<RootWithMultiplicity> roots_with_multiplicity(const Poly& p);

// Ratio of exact polynomials, normalized so gcd(num, den) = 1 and den is
// monic. Denominator must be nonzero.
class RationalFn {
 public:
  RationalFn() : num_(), den_(Poly::constant(CRat{1})) {}
  RationalFn(Poly num, Poly den);
  static RationalFn from_poly(Poly p) { return RationalFn(std::move(p), Poly::constant(CRat{1})); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  friend bool operator==(const RationalFn& a, const RationalFn& b);

  RationalFn derivative() const;
  std::complex<double> eval(const std::complex<double>& z) const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace jetlab

#endif
