#include "cpt/gaussian.hpp"

#include <cctype>

namespace cpt {

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw DomainError("empty rational literal");
  auto bad = [&] { throw DomainError("bad rational literal: '" + std::string(s) + "'"); };
  std::size_t pos = 0;
  auto read_int = [&]() -> Int {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) bad();
    Int v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
    }
    return neg ? Int(-v) : v;
  };
  Int num = read_int();
  Int den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = read_int();
    if (den == 0) throw DomainError("rational with zero denominator");
  }
  if (pos != s.size()) bad();
  return Rational(num, den);
}

std::string GaussianRational::str() const {
  auto imag_part = [&](const Rational& b, bool lead) {
    std::string sign = b < 0 ? "-" : (lead ? "" : "+");
    Rational a = b < 0 ? Rational(-b) : b;
    if (a == 1) return sign + "i";
    return sign + to_string(a) + "i";
  };
  if (im == 0) return to_string(re);
  if (re == 0) return imag_part(im, true);
  return to_string(re) + imag_part(im, false);
}

}  // namespace cpt
