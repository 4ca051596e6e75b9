#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cpt/spinbasis.hpp"

namespace cpt {

using IndexMask = std::uint32_t;  // bit j-1 set <=> generator j in the monomial

// sign * product of distinct generators in ascending index order. Its square
// is always +-identity; `square` records which.
struct SignedMonomial {
  IndexMask mask = 0;
  int sign = 1;
  int square = 1;
  ExactMatrix matrix;

  SignedMonomial() : matrix(ExactMatrix::identity(1)) {}
  explicit SignedMonomial(int dim) : matrix(ExactMatrix::identity(dim)) {}

  std::vector<int> indices() const;
  int weight() const;  // number of generators in the product
};

SignedMonomial make_monomial(const GeneratorSet& g, IndexMask mask, int sign = 1);
SignedMonomial make_monomial(const GeneratorSet& g, const std::vector<int>& indices, int sign = 1);

// Exact product, computed combinatorially from the generator squares and
// the anticommutation count; matches the matrix product by construction.
SignedMonomial mono_mul(const GeneratorSet& g, const SignedMonomial& a, const SignedMonomial& b);

// M^{-1} = square * M since M^2 = square * I.
SignedMonomial mono_inverse(const GeneratorSet& g, const SignedMonomial& a);

// Sign s_j in  M E_j = s_j E_j M  for the monomial on `mask`:
// (-1)^{|S| - [j in S]}.
int predicted_conjugation_sign(IndexMask mask, int j);

// Combinatorial product sign of E_S * E_T relative to E_{S xor T}.
int monomial_product_sign(const GeneratorSet& g, IndexMask a, IndexMask b);

// W = E_1 E_2 ... E_{2m}, the full ascending product with sign +1.
SignedMonomial compute_W(const GeneratorSet& g);

// The unique monomial M with M E_j = target_signs[j-1] E_j M for every j,
// found by exhaustive subset search with parity pruning and verified by
// explicit matrix conjugation. Throws DomainError when no subset fits.
SignedMonomial solve_monomial(const GeneratorSet& g, const std::vector<int>& target_signs);

// `reference` labels E and Pi by the minus-set of the transpose/reality
// signature, matching the published tables; when a minus-set has odd size
// that element carries the star-composite law and its W-partner carries the
// plain one. `strict` labels by the plain laws themselves.
enum class SeptetLabeling { reference, strict };

struct AutomorphismSeptet {
  SeptetLabeling labeling = SeptetLabeling::reference;
  SignedMonomial W, E, C, Pi, K, S, F;

  // Which element of each pair carries the unstarred law, established by
  // matrix arithmetic during construction:
  //   reversion_on_E:    E A^T E^-1 realizes reversion (else C does)
  //   conjugation_on_Pi: Pi A^* Pi^-1 realizes the pseudoautomorphism
  //   bar_reversion_on_S: S (A^T)^* S^-1 realizes the conjugate reversion
  bool reversion_on_E = true;
  bool conjugation_on_Pi = true;
  bool bar_reversion_on_S = true;

  std::array<const SignedMonomial*, 7> ordered() const { return {&W, &E, &C, &Pi, &K, &S, &F}; }
  static const std::array<const char*, 7>& names();
};

// Solves E from the transpose signature and Pi from the reality signature,
// forms C = EW, K = PiW, S = PiE, F = PiC, and re-verifies every
// conjugation law by exact matrix arithmetic before returning.
AutomorphismSeptet compute_septet(const GeneratorSet& g,
                                  SeptetLabeling labeling = SeptetLabeling::reference);

}  // namespace cpt
