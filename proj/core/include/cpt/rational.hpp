#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "cpt/errors.hpp"

namespace cpt {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms with positive denominator, which is exactly the invariant the
// scalar layer needs.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Integer or half-odd-integer (denominator 1 or 2).
inline bool is_half_integer(const Rational& r) {
  return denominator(r) == 1 || denominator(r) == 2;
}

inline std::string to_string(const Rational& r) { return r.str(); }

// Parses "p" or "p/q" with optional sign. Throws DomainError on anything else.
Rational parse_rational(std::string_view s);

}  // namespace cpt
