#include "jetlab/jet_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "jetlab/errors.hpp"

namespace jetlab {

JetMonomial::JetMonomial(CRat c, std::vector<std::pair<JetCoordinate, int>> f)
    : coeff(std::move(c)), factors(std::move(f)) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge equal coordinates
  std::vector<std::pair<JetCoordinate, int>> merged;
  for (const auto& [coord, exp] : factors) {
    if (exp == 0) continue;
    if (exp < 0) throw DomainError("JetMonomial: negative exponent");
    if (!merged.empty() && merged.back().first == coord)
      merged.back().second += exp;
    else
      merged.emplace_back(coord, exp);
  }
  factors = std::move(merged);
}

int JetMonomial::weight() const {
  int w = 0;
  for (const auto& [coord, exp] : factors) w += coord.weight() * exp;
  return w;
}

int JetMonomial::degree() const {
  int d = 0;
  for (const auto& [coord, exp] : factors) d += exp;
  return d;
}

namespace {

bool factors_less(const std::vector<std::pair<JetCoordinate, int>>& a,
                  const std::vector<std::pair<JetCoordinate, int>>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
        return std::tie(x.first, x.second) < std::tie(y.first, y.second);
      });
}

}  // namespace

JetPolynomial::JetPolynomial(std::vector<JetMonomial> terms) : terms_(std::move(terms)) {
  normalize();
}

void JetPolynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const JetMonomial& a, const JetMonomial& b) {
    return factors_less(a.factors, b.factors);
  });
  std::vector<JetMonomial> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().factors == t.factors)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const JetMonomial& m) { return m.coeff.is_zero(); }),
               merged.end());
  terms_ = std::move(merged);
}

JetPolynomial JetPolynomial::constant(CRat c) {
  return JetPolynomial({JetMonomial(std::move(c), {})});
}

JetPolynomial JetPolynomial::coordinate(JetCoordinate c) {
  return JetPolynomial({JetMonomial(CRat{1}, {{c, 1}})});
}

std::optional<int> JetPolynomial::weight() const {
  if (terms_.empty()) return 0;
  int w = terms_.front().weight();
  for (const auto& t : terms_)
    if (t.weight() != w) return std::nullopt;
  return w;
}

JetPolynomial operator+(const JetPolynomial& a, const JetPolynomial& b) {
  std::vector<JetMonomial> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return JetPolynomial(std::move(t));
}

JetPolynomial operator-(const JetPolynomial& a, const JetPolynomial& b) { return a + (-b); }

JetPolynomial operator-(const JetPolynomial& a) {
  std::vector<JetMonomial> t = a.terms_;
  for (auto& m : t) m.coeff = -m.coeff;
  return JetPolynomial(std::move(t));
}

JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b) {
  std::vector<JetMonomial> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      std::vector<std::pair<JetCoordinate, int>> f = x.factors;
      f.insert(f.end(), y.factors.begin(), y.factors.end());
      t.emplace_back(x.coeff * y.coeff, std::move(f));
    }
  }
  return JetPolynomial(std::move(t));
}

JetPolynomial operator*(const CRat& s, const JetPolynomial& a) {
  std::vector<JetMonomial> t = a.terms_;
  for (auto& m : t) m.coeff = s * m.coeff;
  return JetPolynomial(std::move(t));
}

JetPolynomial JetPolynomial::pow(int e) const {
  if (e < 0) throw DomainError("JetPolynomial::pow: negative exponent");
  JetPolynomial r = JetPolynomial::constant(CRat{1});
  JetPolynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

JetPolynomial JetPolynomial::substitute(
    const std::map<JetCoordinate, JetPolynomial>& table) const {
  JetPolynomial out;
  for (const auto& t : terms_) {
    JetPolynomial term = JetPolynomial::constant(t.coeff);
    for (const auto& [coord, exp] : t.factors) {
      auto it = table.find(coord);
      JetPolynomial base =
          (it != table.end()) ? it->second : JetPolynomial::coordinate(coord);
      term = term * base.pow(exp);
    }
    out = out + term;
  }
  return out;
}

std::vector<JetCoordinate> JetPolynomial::support() const {
  std::vector<JetCoordinate> coords;
  for (const auto& t : terms_)
    for (const auto& [coord, exp] : t.factors) coords.push_back(coord);
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  return coords;
}

std::string to_string(const JetCoordinate& c) {
  std::ostringstream os;
  os << (c.kind == CoordKind::Log ? "dlog[" : "d[") << c.var << "]^" << c.order;
  return os.str();
}

std::string to_string(const JetMonomial& m) {
  std::ostringstream os;
  // mixed complex coefficients need parentheses to reparse as one factor
  if (m.coeff.re != 0 && m.coeff.im != 0)
    os << "(" << to_string(m.coeff) << ")";
  else
    os << to_string(m.coeff);
  for (const auto& [coord, exp] : m.factors) {
    os << "*(" << to_string(coord) << ")";
    if (exp != 1) os << "^" << exp;
  }
  return os.str();
}

std::string JetPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    std::string t = jetlab::to_string(terms_[i]);
    if (i > 0) {
      if (!t.empty() && t[0] == '-')
        out += " - ", t.erase(0, 1);
      else
        out += " + ";
    }
    out += t;
  }
  return out;
}

}  // namespace jetlab
