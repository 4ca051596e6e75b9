#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cpt/algebraic.hpp"
#include "cpt/matrix.hpp"
#include "cpt/rational.hpp"

namespace cpt {

using RepMatrix = DenseMatrix<SqrtField>;

// The six boost/rotation ladder operators of one finite-dimensional
// representation, in either basis.
struct LorentzOps {
  RepMatrix h3, hp, hm, f3, fp, fm;
};

// Representation on the xi_{k,nu} basis, k = l0..l1-1, nu = -k..k, ordered
// by ascending k then ascending nu.
struct GNRep {
  Rational l0, l1;
  int dim = 0;
  std::vector<std::pair<Rational, Rational>> basis;  // (k, nu)
  LorentzOps ops;
};

// Finite-dimensional only: l1 = l0 + p for a positive integer p.
GNRep build_gn_rep(const Rational& l0, const Rational& l1, int dim_cap = 64);

// Representation on |l,m; ld,md>, m outer-ascending, md inner-ascending.
struct WaerdenRep {
  Rational l, l_dot;
  int dim = 0;
  std::vector<std::pair<Rational, Rational>> basis;  // (m, md)
  RepMatrix x3, xp, xm, y3, yp, ym;
};

WaerdenRep build_waerden(const Rational& l, const Rational& l_dot, int dim_cap = 64);

struct RelationCheck {
  std::string name;
  bool pass = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const;
};

// Reconstructs the rotation/boost generator pairs from the ladder operators
// and checks all fifteen commutator relations.
RelationReport verify_lorentz_relations(const LorentzOps& ops);
RelationReport verify_lorentz_relations(const GNRep& rep);
RelationReport verify_lorentz_relations(const WaerdenRep& rep);

// X = (H + iF)/2, Y = (H - iF)/2, computed along two independent routes
// (directly, and through the reconstructed rotation/boost generators) that
// must agree; verifies the su(2) x su(2) relations before returning.
struct WaerdenOps {
  RepMatrix x3, xp, xm, y3, yp, ym;
};

WaerdenOps waerden_from_gn(const LorentzOps& ops);

// Rank-(k,r) spintensor with each index in {1,2}; component layout is
// row-major with undotted indices leading.
struct SpinTensor {
  int k = 0, r = 0;
  std::vector<GaussianRational> comp;

  SpinTensor(int k_, int r_);
  int size() const { return 1 << (k + r); }
  GaussianRational& at(const std::vector<int>& alpha);  // indices in {1,2}
};

// Applies sigma to every undotted index and sigma_dot to every dotted one.
SpinTensor spintensor_transform(const ExactMatrix& sigma, const ExactMatrix& sigma_dot,
                                const SpinTensor& t);

}  // namespace cpt
