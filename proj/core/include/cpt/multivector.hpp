#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cpt/gaussian.hpp"

namespace cpt {

inline constexpr int kMaxGenerators = 16;

// cl(p,q) when complexified is false; the complex algebra C_{p+q} (all
// generators squaring to +1 in the canonical orthobasis) when true.
struct AlgebraSignature {
  int p = 0;
  int q = 0;
  bool complexified = false;

  int n() const { return p + q; }

  static AlgebraSignature real_form(int p, int q);
  static AlgebraSignature complex_form(int n);

  // +1 or -1: square of generator i (1-based).
  int generator_square(int i) const { return (complexified || i <= p) ? 1 : -1; }

  friend bool operator==(const AlgebraSignature& a, const AlgebraSignature& b) {
    return a.p == b.p && a.q == b.q && a.complexified == b.complexified;
  }
};

using BladeMask = std::uint32_t;  // bit i-1 set  <=>  e_i in the blade

int grade(BladeMask m);

// Formal blade polynomial over the Gaussian rationals. Zero coefficients are
// pruned eagerly, so structural equality is mathematical equality.
class Multivector {
 public:
  explicit Multivector(AlgebraSignature sig) : sig_(sig) {}

  static Multivector scalar(AlgebraSignature sig, GaussianRational c);
  static Multivector blade(AlgebraSignature sig, BladeMask m, GaussianRational c = 1);
  static Multivector generator(AlgebraSignature sig, int i);  // e_i, 1-based

  const AlgebraSignature& signature() const { return sig_; }
  const std::map<BladeMask, GaussianRational>& terms() const { return coeffs_; }
  GaussianRational coeff(BladeMask m) const;
  void set_coeff(BladeMask m, GaussianRational c);
  bool is_zero() const { return coeffs_.empty(); }

  friend Multivector operator+(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a, const Multivector& b);
  Multivector operator-() const;
  friend Multivector operator*(const GaussianRational& s, const Multivector& a);
  friend Multivector operator*(const Multivector& a, const Multivector& b);  // geometric product

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  Multivector grade_involution() const;     // grade k scaled by (-1)^k
  Multivector reversion() const;            // (-1)^{k(k-1)/2}
  Multivector clifford_conjugation() const; // (-1)^{k(k+1)/2}

  // Coefficientwise complex conjugation in the canonical orthobasis.
  // Requires a complexified signature.
  Multivector pseudo_conjugation() const;

  // Conjugation relative to the real form whose last q generators are the
  // canonical ones scaled by i: coefficient of a blade picks up (-1)^{|S
  // restricted to the i-scaled generators|} on top of conjugation.
  Multivector pseudo_conjugation_real_form(int p, int q) const;

  // Basis-rescaling helper: substitute e_i -> i*e_i for the flagged
  // generators (a blade's coefficient is multiplied by i^{#flagged in it}).
  Multivector rescale_generators_by_i(BladeMask which) const;

  // "1 + 2e_2 + (1-i)e_13"
  std::string str() const;

 private:
  AlgebraSignature sig_;
  std::map<BladeMask, GaussianRational> coeffs_;
};

// Product of two blades: sign from anticommutation plus metric squares on
// the shared generators.
GaussianRational blade_product_coeff(const AlgebraSignature& sig, BladeMask a, BladeMask b);

struct VolumeElement {
  Multivector omega;
  Multivector omega_inverse;
  GaussianRational omega_square;  // scalar value of omega^2 (+1 or -1)
};

VolumeElement volume_element(AlgebraSignature sig);

std::string blade_name(BladeMask m);  // "1", "e_13", "e_{1,3,12}" above index 9

}  // namespace cpt
