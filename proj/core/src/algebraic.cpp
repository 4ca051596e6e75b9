#include "cpt/algebraic.hpp"

#include <boost/multiprecision/integer.hpp>

#include <utility>

namespace cpt {

namespace {

// Splits n > 0 as s^2 * d with d squarefree. Trial division is plenty here:
// radicands come from small ladder coefficients.
void squarefree_split(Int n, Int& s, Int& d) {
  s = 1;
  d = 1;
  for (Int p = 2; p * p <= n && p < 100000; ++p) {
    if (n % p != 0) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    for (int j = 0; j < k / 2; ++j) s *= p;
    if (k % 2) d *= p;
  }
  if (n > 1) {
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) {
      s *= r;
    } else {
      // No factor below the trial bound, so n is prime or a product of two
      // large primes; either way squarefree at the magnitudes in scope.
      d *= n;
    }
  }
}

}  // namespace

SqrtField SqrtField::sqrt_of(const Rational& r) {
  if (r == 0) return SqrtField{};
  GaussianRational unit = GaussianRational::one();
  Rational a = r;
  if (a < 0) {
    a = -a;
    unit = GaussianRational::i();
  }
  // sqrt(p/q) = sqrt(p*q)/q
  Int pq = numerator(a) * denominator(a);
  Int s, d;
  squarefree_split(pq, s, d);
  GaussianRational coeff = unit * GaussianRational(Rational(s, denominator(a)));
  SqrtField out;
  out.add_term(d, coeff);
  return out;
}

bool SqrtField::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1 &&
                            terms_.begin()->second.is_real());
}

GaussianRational SqrtField::rational_part() const {
  auto it = terms_.find(Int(1));
  return it == terms_.end() ? GaussianRational::zero() : it->second;
}

void SqrtField::add_term(const Int& radicand, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(radicand, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SqrtField SqrtField::conj() const {
  SqrtField out;
  for (const auto& [d, c] : terms_) out.terms_[d] = c.conj();
  return out;
}

SqrtField SqrtField::operator-() const {
  SqrtField out;
  for (const auto& [d, c] : terms_) out.terms_[d] = -c;
  return out;
}

SqrtField operator+(const SqrtField& a, const SqrtField& b) {
  SqrtField out = a;
  for (const auto& [d, c] : b.terms_) out.add_term(d, c);
  return out;
}

SqrtField operator-(const SqrtField& a, const SqrtField& b) {
  SqrtField out = a;
  for (const auto& [d, c] : b.terms_) out.add_term(d, -c);
  return out;
}

SqrtField operator*(const SqrtField& a, const SqrtField& b) {
  SqrtField out;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      // sqrt(da)*sqrt(db) = g*sqrt((da/g)*(db/g)) with g = gcd; both
      // radicands are squarefree so the product radicand is too.
      Int g = boost::multiprecision::gcd(da, db);
      Int d = (da / g) * (db / g);
      out.add_term(d, ca * cb * GaussianRational(Rational(g)));
    }
  }
  return out;
}

std::string SqrtField::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    std::string cs = c.str();
    bool neg = cs.front() == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    bool composite = mag.find('+') != std::string::npos || mag.find('-') != std::string::npos;
    std::string term;
    if (d == 1) {
      term = mag;
    } else {
      std::string root = "sqrt(" + d.str() + ")";
      if (mag == "1")
        term = root;
      else if (composite)
        term = "(" + mag + ")*" + root;
      else
        term = mag + "*" + root;
    }
    if (first) {
      out = (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace cpt
