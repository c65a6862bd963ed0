#ifndef JETLAB_SERIES_HPP
#define JETLAB_SERIES_HPP

#include <algorithm>
#include <vector>

#include "jetlab/errors.hpp"
#include "jetlab/numeric.hpp"

namespace jetlab {

// Truncated power series around 0 with exact truncation semantics: an object
// of truncation order K represents its function modulo z^{K+1}. Every
// operation states the truncation order of its result; nothing is ever
// rounded, only truncated.
//
// T is a field type: CRat for the exact kernel, std::complex<double> for the
// floating kernel.
template <class T>
class Series {
 public:
  Series() : coeff_(1, T{}) {}
  explicit Series(std::vector<T> coeff) : coeff_(std::move(coeff)) {
    if (coeff_.empty()) coeff_.push_back(T{});
  }

  static Series constant(T value, int order) {
    Series s;
    s.coeff_.assign(static_cast<size_t>(order) + 1, T{});
    s.coeff_[0] = std::move(value);
    return s;
  }

  // The identity germ z, truncated at `order`.
  static Series identity(int order) {
    Series s = constant(T{}, order);
    if (order >= 1) s.coeff_[1] = T{1};
    return s;
  }

  int order() const { return static_cast<int>(coeff_.size()) - 1; }
  const std::vector<T>& coefficients() const { return coeff_; }
  const T& operator[](int j) const { return coeff_[static_cast<size_t>(j)]; }
  T& operator[](int j) { return coeff_[static_cast<size_t>(j)]; }

  bool is_zero() const {
    return std::all_of(coeff_.begin(), coeff_.end(),
                       [](const T& c) { return scalar_is_zero(c); });
  }

  Series truncate(int new_order) const {
    if (new_order >= order()) return *this;
    if (new_order < 0) throw DomainError("Series: negative truncation order");
    return Series(std::vector<T>(coeff_.begin(), coeff_.begin() + new_order + 1));
  }

  friend Series operator+(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    std::vector<T> c(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c[j] = a[j] + b[j];
    return Series(std::move(c));
  }
  friend Series operator-(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    std::vector<T> c(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c[j] = a[j] - b[j];
    return Series(std::move(c));
  }
  friend Series operator-(const Series& a) {
    std::vector<T> c = a.coeff_;
    for (auto& x : c) x = -x;
    return Series(std::move(c));
  }

  // Product truncated at min(order a, order b): each factor is only known to
  // its own truncation, so nothing beyond that is meaningful.
  friend Series operator*(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    std::vector<T> c(static_cast<size_t>(n) + 1, T{});
    for (int i = 0; i <= n; ++i) {
      if (scalar_is_zero(a[i])) continue;
      for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
    }
    return Series(std::move(c));
  }

  friend Series operator*(const T& s, const Series& a) {
    std::vector<T> c = a.coeff_;
    for (auto& x : c) x = s * x;
    return Series(std::move(c));
  }

  // d/dz; result is known to order K-1.
  Series derivative() const {
    if (order() == 0) return Series(std::vector<T>{T{}});
    std::vector<T> c(coeff_.size() - 1);
    for (size_t j = 1; j < coeff_.size(); ++j) c[j - 1] = T(long(j)) * coeff_[j];
    return Series(std::move(c));
  }

  // Multiplicative inverse, same truncation order; requires c0 != 0.
  Series reciprocal() const {
    if (scalar_is_zero(coeff_[0]))
      throw PoleError("Series: reciprocal of a series vanishing at 0");
    std::vector<T> r(coeff_.size(), T{});
    r[0] = T{1} / coeff_[0];
    for (size_t j = 1; j < coeff_.size(); ++j) {
      T acc{};
      for (size_t i = 1; i <= j; ++i) acc += coeff_[i] * r[j - i];
      r[j] = -(acc / coeff_[0]);
    }
    return Series(std::move(r));
  }

  // (f o phi_lambda)(z) = f(lambda z): c_j -> c_j * lambda^j.
  Series compose_homothety(const T& lambda) const {
    std::vector<T> c = coeff_;
    T p{1};
    for (size_t j = 1; j < c.size(); ++j) {
      p = p * lambda;
      c[j] = c[j] * p;
    }
    return Series(std::move(c));
  }

  // Taylor shift: coefficients of f(z0 + h) in h, same truncation length.
  // Exact whenever the truncated coefficients are the whole function
  // (polynomial germs); otherwise accurate only within the validity radius.
  Series recenter(const T& z0) const {
    size_t n = coeff_.size();
    std::vector<T> c = coeff_;
    // Horner-style synthetic division applied n times.
    for (size_t pass = 0; pass + 1 < n; ++pass) {
      for (size_t j = n - 1; j > pass; --j) c[j - 1] += z0 * c[j];
    }
    return Series(std::move(c));
  }

  T eval(const T& z) const {
    T acc{};
    for (size_t j = coeff_.size(); j-- > 0;) acc = acc * z + coeff_[j];
    return acc;
  }

 private:
  std::vector<T> coeff_;
};

using ExactSeries = Series<CRat>;
using FloatSeries = Series<std::complex<double>>;

inline FloatSeries to_float(const ExactSeries& s) {
  std::vector<std::complex<double>> c(s.coefficients().size());
  for (size_t j = 0; j < c.size(); ++j) c[j] = to_complex(s.coefficients()[j]);
  return FloatSeries(std::move(c));
}

}  // namespace jetlab

#endif
