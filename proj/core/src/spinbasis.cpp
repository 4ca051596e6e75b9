#include "cpt/spinbasis.hpp"

#include <string>

namespace cpt {

PauliSet PauliSet::make(PauliConvention conv) {
  const GaussianRational one = GaussianRational::one();
  const GaussianRational i = GaussianRational::i();
  ExactMatrix s1(2), s2(2), s3(2), u(2);
  s1.at(0, 1) = one;
  s1.at(1, 0) = one;
  s2.at(0, 1) = -i;
  s2.at(1, 0) = i;
  if (conv == PauliConvention::paper) {
    s3.at(0, 0) = i;
    s3.at(1, 1) = -i;
  } else {
    s3.at(0, 0) = one;
    s3.at(1, 1) = -one;
  }
  u.at(0, 0) = one;
  u.at(1, 1) = one;
  return {s1, s2, s3, u};
}

namespace {

int square_sign(const ExactMatrix& g) {
  ExactMatrix sq = g * g;
  auto cmp = compare(sq, ExactMatrix::identity(g.dim()));
  if (cmp.kind == CompareKind::equal) return 1;
  if (cmp.kind == CompareKind::negatives) return -1;
  throw DomainError("generator square is not +-identity");
}

GeneratorSet build(int m, PauliConvention conv, int m_cap, BasisVariant variant) {
  if (m < 1 || m > m_cap)
    throw CapExceeded("generator count out of range: m=" + std::to_string(m) +
                      " (cap " + std::to_string(m_cap) + ")");
  PauliSet p = PauliSet::make(conv);
  GeneratorSet out;
  out.m = m;
  out.convention = conv;
  out.variant = variant;
  for (int half = 0; half < 2; ++half) {
    const ExactMatrix& mid = half == 0 ? p.sigma1 : p.sigma2;
    for (int k = 1; k <= m; ++k) {
      ExactMatrix g(1);
      g.at(0, 0) = GaussianRational::one();
      for (int slot = 1; slot <= m; ++slot) {
        const ExactMatrix& factor = slot < k ? p.sigma3 : (slot == k ? mid : p.unit2);
        g = kron(g, factor);
      }
      out.gens.push_back(std::move(g));
    }
  }
  if (variant == BasisVariant::reference && m == 4 && conv == PauliConvention::paper) {
    // The published 16x16 basis prints its sixth generator with an extra
    // factor i relative to the tensor formula; the reference tables are
    // only reproduced with that phase.
    out.gens[5] = GaussianRational::i() * out.gens[5];
  }
  for (const ExactMatrix& g : out.gens) out.squares.push_back(square_sign(g));
  return out;
}

}  // namespace

GeneratorSet build_brauer_weyl(int m, PauliConvention conv, int m_cap) {
  return build(m, conv, m_cap, BasisVariant::strict);
}

GeneratorSet reference_basis(int m, PauliConvention conv, int m_cap) {
  return build(m, conv, m_cap, BasisVariant::reference);
}

GeneratorReport verify_generators(const GeneratorSet& g) {
  GeneratorReport rep;
  const int n = g.count();
  for (int j = 1; j <= n; ++j) {
    ExactMatrix sq = g.gen(j) * g.gen(j);
    auto cmp = compare(sq, ExactMatrix::identity(g.dim()));
    if (cmp.kind != CompareKind::equal && cmp.kind != CompareKind::negatives) {
      rep.squares_ok = false;
      rep.offending_square = j;
      rep.squares.push_back(0);
      continue;
    }
    rep.squares.push_back(cmp.kind == CompareKind::equal ? 1 : -1);
  }
  for (int a = 1; a <= n && rep.anticommute; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (!(g.gen(a) * g.gen(b) == -(g.gen(b) * g.gen(a)))) {
        rep.anticommute = false;
        rep.offending_pair = {a, b};
        break;
      }
    }
  }
  return rep;
}

namespace {

std::vector<int> signed_signature(const GeneratorSet& g, bool transpose, const char* what) {
  std::vector<int> out;
  for (int j = 1; j <= g.count(); ++j) {
    ExactMatrix img = transpose ? g.gen(j).transpose() : g.gen(j).conj();
    auto cmp = compare(img, g.gen(j));
    if (cmp.kind == CompareKind::equal)
      out.push_back(1);
    else if (cmp.kind == CompareKind::negatives)
      out.push_back(-1);
    else
      throw DomainError(std::string("generator ") + std::to_string(j) + " has no definite " +
                        what + " sign");
  }
  return out;
}

}  // namespace

std::vector<int> symmetry_signature(const GeneratorSet& g) {
  return signed_signature(g, true, "transpose");
}

std::vector<int> reality_signature(const GeneratorSet& g) {
  return signed_signature(g, false, "conjugation");
}

}  // namespace cpt
