#pragma once

#include <map>
#include <string>

#include "cpt/gaussian.hpp"

namespace cpt {

// Exact element of Q(i)[sqrt(2), sqrt(3), ...]: a finite sum of Gaussian
// rational coefficients times square roots of distinct squarefree positive
// integers. The radicand 1 holds the rational part. Closed under +, -, *
// and complex conjugation, which is all the representation checks need.
class SqrtField {
 public:
  SqrtField() = default;
  SqrtField(GaussianRational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_[Int(1)] = std::move(c);
  }
  SqrtField(int n) : SqrtField(GaussianRational(n)) {}  // NOLINT(google-explicit-constructor)
  SqrtField(Rational r) : SqrtField(GaussianRational(std::move(r))) {}  // NOLINT

  // sqrt(r) as an exact value; negative r yields i*sqrt(-r).
  static SqrtField sqrt_of(const Rational& r);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  GaussianRational rational_part() const;

  SqrtField conj() const;  // complex conjugation; radicands are real
  SqrtField operator-() const;

  friend SqrtField operator+(const SqrtField& a, const SqrtField& b);
  friend SqrtField operator-(const SqrtField& a, const SqrtField& b);
  friend SqrtField operator*(const SqrtField& a, const SqrtField& b);
  SqrtField& operator+=(const SqrtField& o) { return *this = *this + o; }
  SqrtField& operator-=(const SqrtField& o) { return *this = *this - o; }

  friend bool operator==(const SqrtField& a, const SqrtField& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SqrtField& a, const SqrtField& b) { return !(a == b); }

  // "0", "1/2", "sqrt(2)", "-1/2*sqrt(3)", "1/2+1/2*sqrt(5)", "(1+i)*sqrt(2)".
  std::string str() const;

  const std::map<Int, GaussianRational>& terms() const { return terms_; }

 private:
  void add_term(const Int& radicand, const GaussianRational& c);
  std::map<Int, GaussianRational> terms_;  // squarefree radicand -> coefficient
};

inline SqrtField conj(const SqrtField& x) { return x.conj(); }

}  // namespace cpt
