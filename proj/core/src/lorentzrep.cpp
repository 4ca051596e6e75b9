#include "cpt/lorentzrep.hpp"

#include <map>
#include <sstream>

namespace cpt {

namespace {

const GaussianRational kI = GaussianRational::i();

SqrtField root(const Rational& r) { return SqrtField::sqrt_of(r); }

RepMatrix commutator(const RepMatrix& a, const RepMatrix& b) { return a * b - b * a; }

RepMatrix scale(const SqrtField& s, const RepMatrix& m) { return s * m; }

}  // namespace

GNRep build_gn_rep(const Rational& l0, const Rational& l1, int dim_cap) {
  if (l0 < 0 || !is_half_integer(l0) || !is_half_integer(l1))
    throw DomainError("l0 must be a non-negative integer or half-integer, l1 likewise");
  Rational p = l1 - l0;
  if (!is_integer(p) || p <= 0)
    throw DomainError("finite-dimensional representations need l1 = l0 + p for a positive "
                      "integer p; got l1-l0 = " + to_string(p));
  GNRep rep;
  rep.l0 = l0;
  rep.l1 = l1;
  for (Rational k = l0; k < l1; k += 1)
    for (Rational nu = -k; nu <= k; nu += 1) rep.basis.emplace_back(k, nu);
  rep.dim = static_cast<int>(rep.basis.size());
  if (rep.dim > dim_cap) throw CapExceeded("representation dimension exceeds cap");

  std::map<std::pair<Rational, Rational>, int> idx;
  for (int i = 0; i < rep.dim; ++i) idx.emplace(rep.basis[i], i);
  auto at = [&](const Rational& k, const Rational& nu) {
    auto it = idx.find({k, nu});
    return it == idx.end() ? -1 : it->second;
  };

  // A_k = i l0 l1 / (k(k+1)), zero at k = 0 (only the nu = 0 state exists
  // there, so the nu-proportional term contributes nothing).
  auto A = [&](const Rational& k) -> SqrtField {
    if (k == 0) return SqrtField{};
    return SqrtField{GaussianRational(Rational(0), l0 * l1 / (k * (k + 1)))};
  };
  // C_k = (i/k) sqrt((k^2-l0^2)(k^2-l1^2)/(4k^2-1)); the radicand is
  // negative strictly between l0 and l1, where sqrt contributes another i.
  // The boundary guard also avoids the 0/0 at k = l0 = 1/2.
  auto C = [&](const Rational& k) -> SqrtField {
    if (k == 0 || k == l0 || k == l1) return SqrtField{};
    Rational rad = (k * k - l0 * l0) * (k * k - l1 * l1) / (4 * k * k - 1);
    return SqrtField{GaussianRational(Rational(0), 1 / k)} * root(rad);
  };

  RepMatrix zero(rep.dim);
  rep.ops = {zero, zero, zero, zero, zero, zero};
  for (const auto& [k, nu] : rep.basis) {
    int col = at(k, nu);
    rep.ops.h3.at(col, col) += SqrtField{GaussianRational(nu)};
    if (int row = at(k, nu + 1); row >= 0)
      rep.ops.hp.at(row, col) += root((k + nu + 1) * (k - nu));
    if (int row = at(k, nu - 1); row >= 0)
      rep.ops.hm.at(row, col) += root((k + nu) * (k - nu + 1));

    if (int row = at(k - 1, nu); row >= 0)
      rep.ops.f3.at(row, col) += C(k) * root(k * k - nu * nu);
    rep.ops.f3.at(col, col) += -(A(k) * SqrtField{GaussianRational(nu)});
    if (int row = at(k + 1, nu); row >= 0)
      rep.ops.f3.at(row, col) += -(C(k + 1) * root((k + 1) * (k + 1) - nu * nu));

    if (int row = at(k - 1, nu + 1); row >= 0)
      rep.ops.fp.at(row, col) += C(k) * root((k - nu) * (k - nu - 1));
    if (int row = at(k, nu + 1); row >= 0)
      rep.ops.fp.at(row, col) += -(A(k) * root((k - nu) * (k + nu + 1)));
    if (int row = at(k + 1, nu + 1); row >= 0)
      rep.ops.fp.at(row, col) += C(k + 1) * root((k + nu + 1) * (k + nu + 2));

    if (int row = at(k - 1, nu - 1); row >= 0)
      rep.ops.fm.at(row, col) += -(C(k) * root((k + nu) * (k + nu - 1)));
    if (int row = at(k, nu - 1); row >= 0)
      rep.ops.fm.at(row, col) += -(A(k) * root((k + nu) * (k - nu + 1)));
    if (int row = at(k + 1, nu - 1); row >= 0)
      rep.ops.fm.at(row, col) += -(C(k + 1) * root((k - nu + 1) * (k - nu + 2)));
  }
  return rep;
}

WaerdenRep build_waerden(const Rational& l, const Rational& l_dot, int dim_cap) {
  if (l < 0 || l_dot < 0 || !is_half_integer(l) || !is_half_integer(l_dot))
    throw DomainError("l and l-dot must be non-negative integers or half-integers");
  WaerdenRep rep;
  rep.l = l;
  rep.l_dot = l_dot;
  for (Rational m = -l; m <= l; m += 1)
    for (Rational md = -l_dot; md <= l_dot; md += 1) rep.basis.emplace_back(m, md);
  rep.dim = static_cast<int>(rep.basis.size());
  if (rep.dim > dim_cap) throw CapExceeded("representation dimension exceeds cap");

  std::map<std::pair<Rational, Rational>, int> idx;
  for (int i = 0; i < rep.dim; ++i) idx.emplace(rep.basis[i], i);
  RepMatrix zero(rep.dim);
  rep.x3 = rep.xp = rep.xm = rep.y3 = rep.yp = rep.ym = zero;
  for (const auto& [m, md] : rep.basis) {
    int col = idx.at({m, md});
    rep.x3.at(col, col) += SqrtField{GaussianRational(m)};
    rep.y3.at(col, col) += SqrtField{GaussianRational(md)};
    if (auto it = idx.find({m + 1, md}); it != idx.end())
      rep.xp.at(it->second, col) += root((l - m) * (l + m + 1));
    if (auto it = idx.find({m - 1, md}); it != idx.end())
      rep.xm.at(it->second, col) += root((l + m) * (l - m + 1));
    if (auto it = idx.find({m, md + 1}); it != idx.end())
      rep.yp.at(it->second, col) += root((l_dot - md) * (l_dot + md + 1));
    if (auto it = idx.find({m, md - 1}); it != idx.end())
      rep.ym.at(it->second, col) += root((l_dot + md) * (l_dot - md + 1));
  }
  return rep;
}

bool RelationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

RelationReport verify_lorentz_relations(const LorentzOps& ops) {
  const SqrtField i{kI};
  const SqrtField half{GaussianRational(Rational(1, 2))};
  const SqrtField neg_ihalf{GaussianRational(Rational(0), Rational(-1, 2))};
  // H+ = iA1 - A2, H- = iA1 + A2, H3 = iA3 inverted:
  RepMatrix a1 = scale(neg_ihalf, ops.hp + ops.hm);
  RepMatrix a2 = scale(half, ops.hm - ops.hp);
  RepMatrix a3 = scale(-i, ops.h3);
  RepMatrix b1 = scale(neg_ihalf, ops.fp + ops.fm);
  RepMatrix b2 = scale(half, ops.fm - ops.fp);
  RepMatrix b3 = scale(-i, ops.f3);

  RepMatrix zero(a1.dim());
  struct Rel {
    const char* name;
    RepMatrix lhs, rhs;
  };
  std::vector<Rel> rels = {
      {"[A1,A2]=A3", commutator(a1, a2), a3},
      {"[A2,A3]=A1", commutator(a2, a3), a1},
      {"[A3,A1]=A2", commutator(a3, a1), a2},
      {"[B1,B2]=-A3", commutator(b1, b2), -a3},
      {"[B2,B3]=-A1", commutator(b2, b3), -a1},
      {"[B3,B1]=-A2", commutator(b3, b1), -a2},
      {"[A1,B1]=0", commutator(a1, b1), zero},
      {"[A2,B2]=0", commutator(a2, b2), zero},
      {"[A3,B3]=0", commutator(a3, b3), zero},
      {"[A1,B2]=B3", commutator(a1, b2), b3},
      {"[A1,B3]=-B2", commutator(a1, b3), -b2},
      {"[A2,B3]=B1", commutator(a2, b3), b1},
      {"[A2,B1]=-B3", commutator(a2, b1), -b3},
      {"[A3,B1]=B2", commutator(a3, b1), b2},
      {"[A3,B2]=-B1", commutator(a3, b2), -b1},
  };
  RelationReport rep;
  for (auto& r : rels) rep.checks.push_back({r.name, r.lhs == r.rhs});
  return rep;
}

RelationReport verify_lorentz_relations(const GNRep& rep) {
  return verify_lorentz_relations(rep.ops);
}

RelationReport verify_lorentz_relations(const WaerdenRep& rep) {
  // Recover H/F from X/Y: H = X + Y ladder-wise, F = -i(X - Y).
  const SqrtField i{kI};
  LorentzOps ops{rep.x3 + rep.y3,       rep.xp + rep.yp,       rep.xm + rep.ym,
                 scale(-i, rep.x3 - rep.y3), scale(-i, rep.xp - rep.yp),
                 scale(-i, rep.xm - rep.ym)};
  return verify_lorentz_relations(ops);
}

namespace {

// su(2) x su(2) relations (components from the ladder operators).
void check_com2(const WaerdenOps& w) {
  const SqrtField i{kI};
  const SqrtField half{GaussianRational(Rational(1, 2))};
  const SqrtField neg_ihalf{GaussianRational(Rational(0), Rational(-1, 2))};
  RepMatrix xs[3] = {scale(half, w.xp + w.xm), scale(neg_ihalf, w.xp - w.xm), w.x3};
  RepMatrix ys[3] = {scale(half, w.yp + w.ym), scale(neg_ihalf, w.yp - w.ym), w.y3};
  auto require = [](bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("su(2) x su(2) relation failed: ") + what);
  };
  const std::pair<int, int> eps[3] = {{0, 1}, {1, 2}, {2, 0}};
  for (auto [a, b] : eps) {
    int c = 3 - a - b;
    require(commutator(xs[a], xs[b]) == scale(i, xs[c]), "[X_k,X_l]=i eps X_m");
    require(commutator(ys[a], ys[b]) == scale(i, ys[c]), "[Y_k,Y_l]=i eps Y_m");
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      require(commutator(xs[a], ys[b]).is_zero(), "[X_l,Y_m]=0");
}

}  // namespace

WaerdenOps waerden_from_gn(const LorentzOps& ops) {
  const SqrtField i{kI};
  const SqrtField half{GaussianRational(Rational(1, 2))};
  const SqrtField ihalf{GaussianRational(Rational(0), Rational(1, 2))};

  // Route 1: ladder combinations.
  WaerdenOps w{scale(half, ops.h3) + scale(ihalf, ops.f3),
               scale(half, ops.hp) + scale(ihalf, ops.fp),
               scale(half, ops.hm) + scale(ihalf, ops.fm),
               scale(half, ops.h3) - scale(ihalf, ops.f3),
               scale(half, ops.hp) - scale(ihalf, ops.fp),
               scale(half, ops.hm) - scale(ihalf, ops.fm)};

  // Route 2: through the reconstructed rotation/boost generators,
  // X_l = i(A_l + iB_l)/2 and Y_l = i(A_l - iB_l)/2, reassembled into
  // ladders. Must agree with route 1 exactly.
  const SqrtField neg_ihalf{GaussianRational(Rational(0), Rational(-1, 2))};
  RepMatrix a[3] = {scale(neg_ihalf, ops.hp + ops.hm), scale(half, ops.hm - ops.hp),
                    scale(-i, ops.h3)};
  RepMatrix b[3] = {scale(neg_ihalf, ops.fp + ops.fm), scale(half, ops.fm - ops.fp),
                    scale(-i, ops.f3)};
  RepMatrix x[3] = {RepMatrix(a[0].dim()), RepMatrix(a[0].dim()), RepMatrix(a[0].dim())};
  RepMatrix y[3] = {RepMatrix(a[0].dim()), RepMatrix(a[0].dim()), RepMatrix(a[0].dim())};
  for (int l = 0; l < 3; ++l) {
    x[l] = scale(ihalf, a[l] + scale(i, b[l]));
    y[l] = scale(ihalf, a[l] - scale(i, b[l]));
  }
  WaerdenOps w2{x[2],
                x[0] + scale(i, x[1]),
                x[0] - scale(i, x[1]),
                y[2],
                y[0] + scale(i, y[1]),
                y[0] - scale(i, y[1])};
  if (!(w.x3 == w2.x3 && w.xp == w2.xp && w.xm == w2.xm && w.y3 == w2.y3 && w.yp == w2.yp &&
        w.ym == w2.ym))
    throw InternalError("the two Waerden conversion routes disagree");

  check_com2(w);
  return w;
}

SpinTensor::SpinTensor(int k_, int r_) : k(k_), r(r_) {
  if (k < 0 || r < 0 || k + r > 20) throw DomainError("spintensor rank out of range");
  comp.assign(std::size_t{1} << (k + r), GaussianRational::zero());
}

GaussianRational& SpinTensor::at(const std::vector<int>& alpha) {
  if (static_cast<int>(alpha.size()) != k + r)
    throw DomainError("spintensor index count mismatch");
  std::size_t flat = 0;
  for (int a : alpha) {
    if (a != 1 && a != 2) throw DomainError("spintensor indices take values 1 and 2");
    flat = flat * 2 + (a - 1);
  }
  return comp[flat];
}

SpinTensor spintensor_transform(const ExactMatrix& sigma, const ExactMatrix& sigma_dot,
                                const SpinTensor& t) {
  if (sigma.dim() != 2 || sigma_dot.dim() != 2)
    throw DomainError("spintensor transforms take 2x2 matrices");
  SpinTensor out = t;
  const int total = t.k + t.r;
  // Contract one index position at a time; position 0 is the leftmost
  // (most significant) undotted index.
  for (int pos = 0; pos < total; ++pos) {
    const ExactMatrix& s = pos < t.k ? sigma : sigma_dot;
    SpinTensor next(t.k, t.r);
    const std::size_t stride = std::size_t{1} << (total - 1 - pos);
    for (std::size_t flat = 0; flat < next.comp.size(); ++flat) {
      const int ap = (flat / stride) % 2;  // new index value - 1
      const std::size_t base = flat - ap * stride;
      GaussianRational acc = GaussianRational::zero();
      for (int aold = 0; aold < 2; ++aold)
        acc += s.at(ap, aold) * out.comp[base + aold * stride];
      next.comp[flat] = acc;
    }
    out = next;
  }
  return out;
}

}  // namespace cpt
