#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpt/lorentzrep.hpp"
#include "cpt/spinbasis.hpp"

using namespace cpt;

namespace {

SqrtField sf(int n) { return SqrtField{GaussianRational(n)}; }
SqrtField sfq(const Rational& r) { return SqrtField{GaussianRational(r)}; }

}  // namespace

TEST_CASE("sqrt field arithmetic and canonicalization") {
  SqrtField r2 = SqrtField::sqrt_of(2);
  CHECK(r2 * r2 == sf(2));
  CHECK(SqrtField::sqrt_of(2) * SqrtField::sqrt_of(3) == SqrtField::sqrt_of(6));
  CHECK(SqrtField::sqrt_of(4) == sf(2));
  CHECK(SqrtField::sqrt_of(8) == sf(2) * r2);
  CHECK(SqrtField::sqrt_of(Rational(9, 4)) == sfq(Rational(3, 2)));
  CHECK(SqrtField::sqrt_of(-1) == SqrtField{GaussianRational::i()});
  CHECK(SqrtField::sqrt_of(-2) * SqrtField::sqrt_of(-2) == sf(-2));
  CHECK((r2 + r2 - r2 - r2).is_zero());
  // sqrt(1/2) = sqrt(2)/2
  CHECK(SqrtField::sqrt_of(Rational(1, 2)) == sfq(Rational(1, 2)) * r2);
  CHECK(r2.conj() == r2);
  CHECK(SqrtField::sqrt_of(-3).conj() == -SqrtField::sqrt_of(-3));
}

TEST_CASE("sqrt field rendering") {
  CHECK(SqrtField{}.str() == "0");
  CHECK(SqrtField::sqrt_of(2).str() == "sqrt(2)");
  CHECK((-SqrtField::sqrt_of(3)).str() == "-sqrt(3)");
  CHECK((sfq(Rational(1, 2)) + sfq(Rational(1, 2)) * SqrtField::sqrt_of(5)).str() ==
        "1/2 + 1/2*sqrt(5)");
  CHECK((SqrtField{GaussianRational(1, 1)} * SqrtField::sqrt_of(2)).str() == "(1+i)*sqrt(2)");
}

TEST_CASE("degenerate and small representations") {
  GNRep zero = build_gn_rep(0, 1);
  CHECK(zero.dim == 1);
  for (const RepMatrix* m : {&zero.ops.h3, &zero.ops.hp, &zero.ops.hm, &zero.ops.f3,
                             &zero.ops.fp, &zero.ops.fm})
    CHECK(m->is_zero());
  CHECK(verify_lorentz_relations(zero).all_pass());

  GNRep half = build_gn_rep(Rational(1, 2), Rational(3, 2));
  CHECK(half.dim == 2);
  // A_{1/2} = i ==> F3 = diag(i/2, -i/2) on nu = (-1/2, +1/2)
  CHECK(half.ops.f3.at(0, 0) == SqrtField{GaussianRational(Rational(0), Rational(1, 2))});
  CHECK(half.ops.f3.at(1, 1) == SqrtField{GaussianRational(Rational(0), Rational(-1, 2))});
  CHECK(half.ops.hp.at(1, 0) == sf(1));

  CHECK(build_gn_rep(0, 2).dim == 4);
  CHECK(build_gn_rep(1, 2).dim == 3);
}

TEST_CASE("rejects the infinite-dimensional regime") {
  CHECK_THROWS_AS(build_gn_rep(0, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(build_gn_rep(Rational(1, 2), Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(build_gn_rep(1, 0), DomainError);
  CHECK_THROWS_AS(build_gn_rep(0, 40), CapExceeded);
}

TEST_CASE("boost-rotation relations hold for every rep of dim <= 20") {
  int checked = 0;
  for (int twice_l0 = 0; twice_l0 <= 8; ++twice_l0) {
    Rational l0(twice_l0, 2);
    for (int p = 1; p <= 10; ++p) {
      Rational l1 = l0 + p;
      Rational dim = l1 * l1 - l0 * l0;
      if (dim > 20) break;
      GNRep rep = build_gn_rep(l0, l1);
      CHECK(rep.dim == static_cast<int>(numerator(dim)));
      RelationReport report = verify_lorentz_relations(rep);
      for (const auto& c : report.checks) {
        INFO("l0=", to_string(l0), " l1=", to_string(l1), " relation ", c.name);
        CHECK(c.pass);
      }
      ++checked;
    }
  }
  CHECK(checked >= 12);  // includes (0,1), (1/2,3/2), (0,2), (1/2,5/2), (1,2)
}

TEST_CASE("waerden ladder representations") {
  WaerdenRep w = build_waerden(Rational(1, 2), 0);
  CHECK(w.dim == 2);
  // X+ | 1/2,-1/2 > = 1 * | 1/2,+1/2 >
  CHECK(w.xp.at(1, 0) == sf(1));
  // X3 eigenvalues are -1/2, +1/2
  CHECK(w.x3.at(0, 0) == sfq(Rational(-1, 2)));
  CHECK(w.x3.at(1, 1) == sfq(Rational(1, 2)));

  WaerdenRep scalar = build_waerden(0, 0);
  CHECK(scalar.dim == 1);
  CHECK(scalar.x3.is_zero());
  CHECK(scalar.yp.is_zero());

  CHECK(build_waerden(Rational(1, 2), Rational(1, 2)).dim == 4);
  CHECK(build_waerden(1, Rational(1, 2)).dim == 6);
}

TEST_CASE("su(2)xsu(2) structure for all l + l-dot <= 3") {
  for (int tl = 0; tl <= 6; ++tl) {
    for (int td = 0; tl + td <= 6; ++td) {
      Rational l(tl, 2), ld(td, 2);
      WaerdenRep w = build_waerden(l, ld);
      Rational expected_dim = (2 * l + 1) * (2 * ld + 1);
      CHECK(w.dim == static_cast<int>(numerator(expected_dim)));
      RelationReport report = verify_lorentz_relations(w);
      for (const auto& c : report.checks) {
        INFO("l=", to_string(l), " ld=", to_string(ld), " relation ", c.name);
        CHECK(c.pass);
      }
      // ladder consistency: X3 = [X+, X-]/2
      SqrtField half{GaussianRational(Rational(1, 2))};
      CHECK(half * (w.xp * w.xm - w.xm * w.xp) == w.x3);
      CHECK(half * (w.yp * w.ym - w.ym * w.yp) == w.y3);
    }
  }
}

TEST_CASE("conversion from the xi basis to the ladder basis") {
  GNRep rep = build_gn_rep(Rational(1, 2), Rational(3, 2));
  WaerdenOps w = waerden_from_gn(rep.ops);
  WaerdenRep direct = build_waerden(Rational(1, 2), 0);
  // (1/2,3/2) corresponds to (l, l-dot) = (1/2, 0); bases align (nu = m)
  CHECK(w.x3 == direct.x3);
  CHECK(w.xp == direct.xp);
  CHECK(w.xm == direct.xm);
  CHECK(w.y3.is_zero());
  CHECK(w.yp.is_zero());
  CHECK(w.ym.is_zero());

  // zero input -> zero output
  GNRep zero = build_gn_rep(0, 1);
  WaerdenOps wz = waerden_from_gn(zero.ops);
  CHECK(wz.x3.is_zero());
  CHECK(wz.ym.is_zero());

  // conversions of larger reps pass their internal su(2)xsu(2) checks
  CHECK_NOTHROW(waerden_from_gn(build_gn_rep(0, 2).ops));
  CHECK_NOTHROW(waerden_from_gn(build_gn_rep(1, 2).ops));
  CHECK_NOTHROW(waerden_from_gn(build_gn_rep(Rational(1, 2), Rational(5, 2)).ops));
}

TEST_CASE("spintensor transforms") {
  PauliSet p = PauliSet::make();
  ExactMatrix id2 = ExactMatrix::identity(2);

  SpinTensor t(1, 0);
  t.at({1}) = GaussianRational::one();
  t.at({2}) = GaussianRational::one();
  ExactMatrix diag(2);
  diag.at(0, 0) = GaussianRational(2);
  diag.at(1, 1) = GaussianRational::one();
  SpinTensor r = spintensor_transform(diag, id2, t);
  CHECK(r.comp[0] == GaussianRational(2));
  CHECK(r.comp[1] == GaussianRational::one());

  // identity leaves any tensor unchanged
  SpinTensor t2(2, 1);
  for (std::size_t i = 0; i < t2.comp.size(); ++i) t2.comp[i] = GaussianRational(int(i) + 1);
  SpinTensor same = spintensor_transform(id2, id2, t2);
  CHECK(same.comp == t2.comp);

  // rank-2 undotted transform equals the kronecker square on the flat vector
  SpinTensor t3(2, 0);
  for (std::size_t i = 0; i < 4; ++i) t3.comp[i] = GaussianRational(int(i) + 1);
  SpinTensor viaT = spintensor_transform(p.sigma2, id2, t3);
  ExactMatrix k2 = kron(p.sigma2, p.sigma2);
  for (int row = 0; row < 4; ++row) {
    GaussianRational acc = GaussianRational::zero();
    for (int col = 0; col < 4; ++col) acc += k2.at(row, col) * t3.comp[col];
    CHECK(viaT.comp[row] == acc);
  }

  // composition: transform(b) after transform(a) = transform(b*a)
  SpinTensor t4(1, 1);
  for (std::size_t i = 0; i < 4; ++i) t4.comp[i] = GaussianRational(int(i) + 2);
  SpinTensor two_step =
      spintensor_transform(p.sigma1, p.sigma3, spintensor_transform(p.sigma2, p.sigma2, t4));
  SpinTensor one_step = spintensor_transform(p.sigma1 * p.sigma2, p.sigma3 * p.sigma2, t4);
  CHECK(two_step.comp == one_step.comp);
}
