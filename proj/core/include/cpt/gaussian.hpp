#pragma once

#include <string>

#include "cpt/rational.hpp"

namespace cpt {

// Exact complex scalar a + b*i with rational a, b. The scalar field for all
// matrices and multivector coefficients; arithmetic never rounds.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int r) : re(r) {}                  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {1, 0}; }
  static GaussianRational i() { return {0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw DomainError("GaussianRational: division by zero");
    Rational n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Canonical rendering: "0", "3/2", "i", "-2i", "1-i", "1/2+3i".
  std::string str() const;
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

}  // namespace cpt
