#pragma once

#include <utility>
#include <vector>

#include "cpt/matrix.hpp"

namespace cpt {

// The printed convention has sigma3 = diag(i,-i): i times the usual Pauli
// matrix. The tables in scope are only reproduced with that convention;
// `standard` (hermitian diag(1,-1)) is available for comparison runs.
enum class PauliConvention { paper, standard };

// `strict` is the uniform Kronecker-product formula. `reference` matches the
// published 16x16 spin-3/2 basis, which deviates from the formula in exactly
// one phase: its sixth generator is i times the strict one. They coincide
// for every other m.
enum class BasisVariant { strict, reference };

struct PauliSet {
  ExactMatrix sigma1, sigma2, sigma3, unit2;
  static PauliSet make(PauliConvention conv = PauliConvention::paper);
};

// 2m pairwise anticommuting generators of dimension 2^m, each squaring to
// +I or -I (sign recorded in `squares`).
struct GeneratorSet {
  int m = 0;
  PauliConvention convention = PauliConvention::paper;
  BasisVariant variant = BasisVariant::strict;
  std::vector<ExactMatrix> gens;
  std::vector<int> squares;

  int count() const { return static_cast<int>(gens.size()); }
  int dim() const { return gens.empty() ? 0 : gens.front().dim(); }
  const ExactMatrix& gen(int j) const { return gens.at(j - 1); }  // 1-based like the labels
};

inline constexpr int kDefaultBwCap = 8;  // dim 2^8 = 256

// E_k = sigma3^{(k-1)} (x) sigma1 (x) 1^{(m-k)}, E_{m+k} likewise with
// sigma2, for k = 1..m.
GeneratorSet build_brauer_weyl(int m, PauliConvention conv = PauliConvention::paper,
                               int m_cap = kDefaultBwCap);

// Strict basis with the single documented phase adjustment at m = 4.
GeneratorSet reference_basis(int m, PauliConvention conv = PauliConvention::paper,
                             int m_cap = kDefaultBwCap);

struct GeneratorReport {
  bool anticommute = true;
  std::pair<int, int> offending_pair{0, 0};  // 1-based, when !anticommute
  bool squares_ok = true;
  int offending_square = 0;  // 1-based, when !squares_ok
  std::vector<int> squares;

  bool ok() const { return anticommute && squares_ok; }
};

GeneratorReport verify_generators(const GeneratorSet& g);

// Per-generator transpose sign eps_j with E_j^T = eps_j E_j; throws
// DomainError if some generator is neither symmetric nor antisymmetric.
std::vector<int> symmetry_signature(const GeneratorSet& g);

// Per-generator conjugation sign eta_j with E_j^* = eta_j E_j.
std::vector<int> reality_signature(const GeneratorSet& g);

}  // namespace cpt
