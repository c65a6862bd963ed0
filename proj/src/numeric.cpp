#include "jetlab/numeric.hpp"

#include <cctype>
#include <sstream>

namespace jetlab {

BigInt big_pow(const BigInt& base, unsigned exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

CRat CRat::pow(int e) const {
  if (e < 0) return CRat(Rational(1)) / pow(-e);
  CRat r{Rational(1)};
  CRat b = *this;
  unsigned n = static_cast<unsigned>(e);
  while (n) {
    if (n & 1u) r *= b;
    b *= b;
    n >>= 1u;
  }
  return r;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw DomainError("parse_rational: empty string");

  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) throw DomainError("parse_rational: zero denominator");
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      // decimal: digits after the dot become a power-of-ten denominator
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      size_t frac = s.size() - dot - 1;
      bool negative = !digits.empty() && digits[0] == '-';
      if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.erase(0, 1);
      // strip leading zeros; cpp_int would read them as octal
      while (digits.size() > 1 && digits[0] == '0') digits.erase(0, 1);
      if (digits.empty()) throw DomainError("parse_rational: malformed decimal '" + text + "'");
      BigInt num(digits);
      if (negative) num = -num;
      return Rational(num, big_pow(10, static_cast<unsigned>(frac)));
    }
    return Rational(BigInt(s));
  } catch (const std::exception&) {
    throw DomainError("parse_rational: cannot parse '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

namespace {

// Splits "a+b*I" / "a-b*I" / "a" / "b*I" / "I" at the top-level sign that
// separates the real and imaginary summands.
size_t find_top_level_split(const std::string& s) {
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*' &&
        s[i - 1] != '+' && s[i - 1] != '-')
      return i;
  }
  return std::string::npos;
}

Rational parse_imag_part(std::string part) {
  // part looks like "b*I", "I", "-I", "3/4*I"
  auto pos = part.find('I');
  if (pos == std::string::npos) throw DomainError("parse_crat: expected I in '" + part + "'");
  part.erase(pos, 1);
  if (!part.empty() && part.back() == '*') part.pop_back();
  if (part.empty() || part == "+") return Rational(1);
  if (part == "-") return Rational(-1);
  return parse_rational(part);
}

}  // namespace

CRat parse_crat(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw DomainError("parse_crat: empty string");

  if (s.find('I') == std::string::npos) return CRat{parse_rational(s)};

  size_t split = find_top_level_split(s);
  if (split == std::string::npos) return CRat{Rational(0), parse_imag_part(s)};

  std::string first = s.substr(0, split);
  std::string second = s.substr(split);  // keeps its sign
  if (second.find('I') != std::string::npos) {
    Rational im = parse_imag_part(second.substr(1));
    if (second[0] == '-') im = -im;
    return CRat{parse_rational(first), im};
  }
  // imaginary part written first: "2*I+1"
  Rational im = parse_imag_part(first);
  return CRat{parse_rational(second), im};
}

std::string to_string(const CRat& c) {
  if (c.im == 0) return to_string(c.re);
  std::string im_part = to_string(c.im) + "*I";
  if (c.im == 1) im_part = "I";
  if (c.im == -1) im_part = "-I";
  if (c.re == 0) return im_part;
  if (c.im > 0) return to_string(c.re) + "+" + im_part;
  return to_string(c.re) + im_part;
}

}  // namespace jetlab
