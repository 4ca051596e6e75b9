#pragma once

#include <string>
#include <vector>

#include "cpt/rational.hpp"

namespace cpt {

// A physical field selected either as a chiral pair (l,0)+(0,l) with k = 2l
// doubled factors, or a tensor pair (l',l'')+(l''. ,l'.) with k = 2l',
// r = 2l''.
struct FieldSpec {
  enum class Kind { chiral_pair, tensor_pair };
  Kind kind = Kind::chiral_pair;
  int k = 0;
  int r = 0;  // mirrors k for chiral pairs

  static FieldSpec chiral(const Rational& l);
  static FieldSpec tensor(int k, int r);

  // "l=1/2" | "(3/2,1)+(1,3/2)" | "k=3,r=2"
  static FieldSpec parse(const std::string& text);

  bool degenerate() const { return k == 0 && r == 0; }
  Rational spin() const;  // k/2 for chiral, |k-r|/2 for tensor
  std::string str() const;
};

// (l0, l1) of the representation plus the weights l, l-dot they determine.
struct RepSpec {
  Rational l0, l1, l, l_dot;
};

RepSpec rep_params(const FieldSpec& f);

// Inverts the weight relations: k = l0+l1-1 and, for tensor pairs,
// r = l1-l0-1.
int k_from_rep(const RepSpec& r);
int r_from_rep(const RepSpec& r);

struct AlgebraSpec {
  int num_generators = 0;  // 2k+2 (chiral) or 2(k+r)+2 (tensor)
  int matrix_dim = 1;      // 2^(num_generators/2)
  bool degenerate = false;
  std::string description;
};

AlgebraSpec field_to_algebra(const FieldSpec& f);

// mu = 2*kappa/(2l+1)
Rational mass_gy(const Rational& l, const Rational& kappa);

struct TensorMass {
  Rational mu;    // kappa/((k+1)(r+1))
  Rational spin;  // |k-r|/2
};

TensorMass mass_tensor(int k, int r, const Rational& kappa);

enum class ChainScheme { bose_diagonal, fermi_diagonal };

struct ChainEntry {
  FieldSpec field;
  long long spinspace_dim = 1;  // 2^(k+r)
  long long sym_dim = 1;        // (k+1)(r+1)
};

// Fixed-spin rows: bose (0,0),(1,1),(2,2),... and fermi (1,0),(2,1),...
std::vector<ChainEntry> enumerate_chain(ChainScheme scheme, int depth);

}  // namespace cpt
