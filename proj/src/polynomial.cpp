#include "jetlab/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "jetlab/errors.hpp"

namespace jetlab {

void Poly::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(CRat v) {
  Poly p;
  p.c_ = {std::move(v)};
  p.strip();
  return p;
}

Poly Poly::monomial(CRat v, int degree) {
  Poly p;
  p.c_.assign(static_cast<size_t>(degree) + 1, CRat{});
  p.c_.back() = std::move(v);
  p.strip();
  return p;
}

CRat Poly::leading() const {
  if (is_zero()) return CRat{};
  return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<CRat> c(std::max(a.c_.size(), b.c_.size()), CRat{});
  for (size_t j = 0; j < a.c_.size(); ++j) c[j] += a.c_[j];
  for (size_t j = 0; j < b.c_.size(); ++j) c[j] += b.c_[j];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
  std::vector<CRat> c = a.c_;
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<CRat> c(a.c_.size() + b.c_.size() - 1, CRat{});
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const CRat& s, const Poly& a) {
  std::vector<CRat> c = a.c_;
  for (auto& x : c) x = s * x;
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly{};
  std::vector<CRat> c(c_.size() - 1);
  for (size_t j = 1; j < c_.size(); ++j) c[j - 1] = CRat(long(j)) * c_[j];
  return Poly(std::move(c));
}

Poly Poly::pow(int e) const {
  if (e < 0) throw DomainError("Poly::pow: negative exponent");
  Poly r = Poly::constant(CRat{1});
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw DomainError("Poly::divmod: division by zero polynomial");
  Poly r = *this;
  if (r.degree() < d.degree()) return {Poly{}, r};
  std::vector<CRat> q(static_cast<size_t>(r.degree() - d.degree()) + 1, CRat{});
  CRat lead_inv = CRat{1} / d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    CRat factor = r.leading() * lead_inv;
    q[static_cast<size_t>(shift)] = factor;
    r = r - Poly::monomial(factor, shift) * d;
  }
  return {Poly(std::move(q)), r};
}

CRat Poly::eval(const CRat& z) const {
  CRat acc{};
  for (size_t j = c_.size(); j-- > 0;) acc = acc * z + c_[j];
  return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& z) const {
  std::complex<double> acc{};
  for (size_t j = c_.size(); j-- > 0;) acc = acc * z + to_complex(c_[j]);
  return acc;
}

int Poly::order_at_origin() const {
  if (is_zero()) return -1;
  int t = 0;
  while (c_[static_cast<size_t>(t)].is_zero()) ++t;
  return t;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return (CRat{1} / leading()) * *this;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int j = p.degree(); j >= 0; --j) {
    const CRat& c = p[j];
    if (c.is_zero()) continue;
    std::string coeff = to_string(c);
    bool mixed = c.re != 0 && c.im != 0;
    bool negative = !mixed && !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mixed) coeff = "(" + coeff + ")";
    if (j == 0) {
      out += coeff;
    } else {
      std::string power = (j == 1) ? "z" : "z^" + std::to_string(j);
      if (coeff == "1")
        out += power;
      else if (coeff == "I")
        out += "I*" + power;
      else
        out += coeff + "*" + power;
    }
  }
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();  // keeps coefficient growth in check
  }
  return a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;

  Poly a = p.monic();
  Poly g = poly_gcd(a, a.derivative());
  Poly w = a.divmod(g).first;  // product of squarefree factors
  int k = 1;
  while (w.degree() > 0) {
    Poly y = poly_gcd(w, g);
    Poly factor = w.divmod(y).first;
    if (factor.degree() > 0) out.emplace_back(factor, k);
    w = std::move(y);
    g = g.divmod(w).first;
    ++k;
  }
  return out;
}

std::vector<std::complex<double>> roots_squarefree(const Poly& p) {
  int n = p.degree();
  std::vector<std::complex<double>> roots;
  if (n <= 0) return roots;

  std::vector<std::complex<double>> c(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) c[static_cast<size_t>(j)] = to_complex(p[j]);
  for (int j = 0; j <= n; ++j) c[static_cast<size_t>(j)] /= c[static_cast<size_t>(n)];

  // Cauchy bound for the root radius.
  double bound = 0.0;
  for (int j = 0; j < n; ++j) bound = std::max(bound, std::abs(c[static_cast<size_t>(j)]));
  bound += 1.0;

  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
    return acc;
  };

  // Durand-Kerner from the usual non-symmetric spiral start.
  roots.resize(static_cast<size_t>(n));
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> w = 1.0;
  for (int j = 0; j < n; ++j) {
    w *= seed;
    roots[static_cast<size_t>(j)] = w * bound / std::abs(w) * (0.5 + 0.1 * j);
  }
  for (int iter = 0; iter < 1000; ++iter) {
    double shift = 0.0;
    for (int j = 0; j < n; ++j) {
      std::complex<double> denom = 1.0;
      for (int i = 0; i < n; ++i)
        if (i != j) denom *= roots[static_cast<size_t>(j)] - roots[static_cast<size_t>(i)];
      std::complex<double> delta = eval(roots[static_cast<size_t>(j)]) / denom;
      roots[static_cast<size_t>(j)] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14 * bound) break;
  }
  return roots;
}

std::vector<RootWithMultiplicity> roots_with_multiplicity(const Poly& p) {
  if (p.is_zero()) throw DomainError("roots_with_multiplicity: zero polynomial");
  std::vector<RootWithMultiplicity> out;

  int origin = p.order_at_origin();
  Poly q = p;
  if (origin > 0) {
    std::vector<CRat> shifted(p.coefficients().begin() + origin, p.coefficients().end());
    q = Poly(std::move(shifted));
    out.push_back({std::complex<double>(0.0, 0.0), origin});
  }
  for (const auto& [factor, mult] : squarefree_decomposition(q)) {
    for (const auto& root : roots_squarefree(factor)) out.push_back({root, mult});
  }
  return out;
}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("RationalFn: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(CRat{1});
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  CRat lead_inv = CRat{1} / den_.leading();
  num_ = lead_inv * num_;
  den_ = lead_inv * den_;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw DomainError("RationalFn: division by zero");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}
bool operator==(const RationalFn& a, const RationalFn& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RationalFn RationalFn::derivative() const {
  return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::complex<double> RationalFn::eval(const std::complex<double>& z) const {
  return num_.eval(z) / den_.eval(z);
}

}  // namespace jetlab
