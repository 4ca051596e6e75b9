#include "cpt/multivector.hpp"

#include <bit>
#include <sstream>

namespace cpt {

AlgebraSignature AlgebraSignature::real_form(int p, int q) {
  if (p < 0 || q < 0 || p + q > kMaxGenerators)
    throw CapExceeded("algebra signature out of range: cl(" + std::to_string(p) + "," +
                      std::to_string(q) + ")");
  return {p, q, false};
}

AlgebraSignature AlgebraSignature::complex_form(int n) {
  if (n < 0 || n > kMaxGenerators)
    throw CapExceeded("algebra signature out of range: C_" + std::to_string(n));
  return {n, 0, true};
}

int grade(BladeMask m) { return std::popcount(m); }

Multivector Multivector::scalar(AlgebraSignature sig, GaussianRational c) {
  Multivector out(sig);
  out.set_coeff(0, std::move(c));
  return out;
}

Multivector Multivector::blade(AlgebraSignature sig, BladeMask m, GaussianRational c) {
  if (m >> sig.n()) throw DomainError("blade uses generators beyond the signature");
  Multivector out(sig);
  out.set_coeff(m, std::move(c));
  return out;
}

Multivector Multivector::generator(AlgebraSignature sig, int i) {
  if (i < 1 || i > sig.n()) throw DomainError("generator index out of range");
  return blade(sig, BladeMask{1} << (i - 1));
}

GaussianRational Multivector::coeff(BladeMask m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? GaussianRational::zero() : it->second;
}

void Multivector::set_coeff(BladeMask m, GaussianRational c) {
  if (c.is_zero())
    coeffs_.erase(m);
  else
    coeffs_[m] = std::move(c);
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  if (!(a.sig_ == b.sig_)) throw DomainError("multivector sum: signature mismatch");
  Multivector out = a;
  for (const auto& [m, c] : b.coeffs_) out.set_coeff(m, out.coeff(m) + c);
  return out;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  if (!(a.sig_ == b.sig_)) throw DomainError("multivector difference: signature mismatch");
  Multivector out = a;
  for (const auto& [m, c] : b.coeffs_) out.set_coeff(m, out.coeff(m) - c);
  return out;
}

Multivector Multivector::operator-() const {
  Multivector out(sig_);
  for (const auto& [m, c] : coeffs_) out.coeffs_[m] = -c;
  return out;
}

Multivector operator*(const GaussianRational& s, const Multivector& a) {
  Multivector out(a.sig_);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : a.coeffs_) out.set_coeff(m, s * c);
  return out;
}

GaussianRational blade_product_coeff(const AlgebraSignature& sig, BladeMask a, BladeMask b) {
  // Reordering sign: (-1)^{#{(i,j) : i in a, j in b, j < i}}.
  int swaps = 0;
  for (int i = 0; i < sig.n(); ++i) {
    if (a & (BladeMask{1} << i)) swaps += std::popcount(b & ((BladeMask{1} << i) - 1));
  }
  int sign = (swaps % 2) ? -1 : 1;
  BladeMask shared = a & b;
  for (int i = 0; i < sig.n(); ++i) {
    if (shared & (BladeMask{1} << i)) sign *= sig.generator_square(i + 1);
  }
  return GaussianRational(sign);
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  if (!(a.sig_ == b.sig_)) throw DomainError("geometric product: signature mismatch");
  Multivector out(a.sig_);
  for (const auto& [ma, ca] : a.coeffs_) {
    for (const auto& [mb, cb] : b.coeffs_) {
      BladeMask m = ma ^ mb;
      out.set_coeff(m, out.coeff(m) + ca * cb * blade_product_coeff(a.sig_, ma, mb));
    }
  }
  return out;
}

namespace {

Multivector grade_scaled(const Multivector& a, int (*sgn)(int)) {
  Multivector out(a.signature());
  for (const auto& [m, c] : a.terms()) {
    out.set_coeff(m, sgn(grade(m)) < 0 ? -c : c);
  }
  return out;
}

}  // namespace

Multivector Multivector::grade_involution() const {
  return grade_scaled(*this, [](int k) { return k % 2 ? -1 : 1; });
}

Multivector Multivector::reversion() const {
  return grade_scaled(*this, [](int k) { return (k * (k - 1) / 2) % 2 ? -1 : 1; });
}

Multivector Multivector::clifford_conjugation() const {
  return grade_scaled(*this, [](int k) { return (k * (k + 1) / 2) % 2 ? -1 : 1; });
}

Multivector Multivector::pseudo_conjugation() const {
  if (!sig_.complexified)
    throw DomainError("pseudo-conjugation requires a complexified algebra");
  Multivector out(sig_);
  for (const auto& [m, c] : coeffs_) out.coeffs_[m] = c.conj();
  return out;
}

Multivector Multivector::pseudo_conjugation_real_form(int p, int q) const {
  if (!sig_.complexified)
    throw DomainError("pseudo-conjugation requires a complexified algebra");
  if (p + q != sig_.n()) throw DomainError("real form does not match the signature");
  BladeMask scaled = ((q == 0) ? 0 : ((BladeMask{1} << q) - 1) << p);
  Multivector out(sig_);
  for (const auto& [m, c] : coeffs_) {
    GaussianRational v = c.conj();
    if (std::popcount(m & scaled) % 2) v = -v;
    out.set_coeff(m, v);
  }
  return out;
}

Multivector Multivector::rescale_generators_by_i(BladeMask which) const {
  static const GaussianRational powers[4] = {
      GaussianRational::one(), GaussianRational::i(), GaussianRational(-1),
      GaussianRational(Rational(0), Rational(-1))};
  Multivector out(sig_);
  for (const auto& [m, c] : coeffs_) {
    out.set_coeff(m, powers[std::popcount(m & which) % 4] * c);
  }
  return out;
}

VolumeElement volume_element(AlgebraSignature sig) {
  BladeMask full = (sig.n() == 0) ? 0 : ((BladeMask{1} << sig.n()) - 1);
  Multivector omega = Multivector::blade(sig, full);
  GaussianRational sq = blade_product_coeff(sig, full, full);
  // omega^2 = sq (+-1), so omega^{-1} = sq * omega.
  return {omega, sq * omega, sq};
}

std::string blade_name(BladeMask m) {
  if (m == 0) return "1";
  bool wide = false;
  for (int i = 9; i < kMaxGenerators; ++i)
    if (m & (BladeMask{1} << i)) wide = true;
  std::ostringstream os;
  os << (wide ? "e_{" : "e_");
  bool first = true;
  for (int i = 0; i < kMaxGenerators; ++i) {
    if (!(m & (BladeMask{1} << i))) continue;
    if (!first && wide) os << ",";
    os << (i + 1);
    first = false;
  }
  if (wide) os << "}";
  return os.str();
}

std::string Multivector::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : coeffs_) {
    std::string cs = c.str();
    bool neg = cs.front() == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    std::string term;
    if (m == 0) {
      term = mag;
    } else {
      bool composite = mag.find('+') != std::string::npos || mag.find('-') != std::string::npos;
      if (mag == "1")
        term = blade_name(m);
      else if (composite)
        term = "(" + mag + ")" + blade_name(m);
      else
        term = mag + blade_name(m);
    }
    if (first) {
      os << (neg ? "-" : "") << term;
      first = false;
    } else {
      os << (neg ? " - " : " + ") << term;
    }
  }
  return os.str();
}

}  // namespace cpt
