#ifndef JETLAB_NUMERIC_HPP
#define JETLAB_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <string>

#include "jetlab/errors.hpp"

namespace jetlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt big_pow(const BigInt& base, unsigned exp);

// Complex number with exact rational real and imaginary parts. Field
// arithmetic throughout; this is the coefficient domain of every exact
// identity in the library.
struct CRat {
  Rational re;
  Rational im;

  CRat() = default;
  CRat(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
  CRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  CRat(long r) : re(r) {}  // NOLINT
  CRat(long r, long i) : re(r), im(i) {}

  static CRat i() { return CRat{Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  CRat conj() const { return CRat{re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CRat operator/(const CRat& a, const CRat& b) {
    Rational n = b.norm2();
    if (n == 0) throw DomainError("CRat: division by zero");
    CRat num = a * b.conj();
    return {num.re / n, num.im / n};
  }
  CRat& operator+=(const CRat& o) { *this = *this + o; return *this; }
  CRat& operator-=(const CRat& o) { *this = *this - o; return *this; }
  CRat& operator*=(const CRat& o) { *this = *this * o; return *this; }
  CRat& operator/=(const CRat& o) { *this = *this / o; return *this; }

  friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

  CRat pow(int e) const;
};

inline std::complex<double> to_complex(const CRat& c) {
  return {to_double(c.re), to_double(c.im)};
}

inline double abs_value(const CRat& c) { return std::abs(to_complex(c)); }

// Scalar adapters so templated code can accept CRat or std::complex<double>.
inline CRat scalar_cast(const CRat& c, CRat /*tag*/) { return c; }
inline std::complex<double> scalar_cast(const CRat& c, std::complex<double> /*tag*/) {
  return to_complex(c);
}
inline bool scalar_is_zero(const CRat& c) { return c.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0); }

// "p/q", "-3", also plain decimal strings like "0.25".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Complex rational literals: "2", "-1/3", "1+2*I", "3/4-2/5*I", "I", "-I".
CRat parse_crat(const std::string& text);
std::string to_string(const CRat& c);

}  // namespace jetlab

#endif
