#include "cpt/autosolve.hpp"

#include <bit>
#include <sstream>
#include <string>

namespace cpt {

std::vector<int> SignedMonomial::indices() const {
  std::vector<int> out;
  for (int j = 0; j < 32; ++j)
    if (mask & (IndexMask{1} << j)) out.push_back(j + 1);
  return out;
}

int SignedMonomial::weight() const { return std::popcount(mask); }

int monomial_product_sign(const GeneratorSet& g, IndexMask a, IndexMask b) {
  int swaps = 0;
  for (int j = 0; j < g.count(); ++j) {
    if (a & (IndexMask{1} << j)) swaps += std::popcount(b & ((IndexMask{1} << j) - 1));
  }
  int sign = (swaps % 2) ? -1 : 1;
  IndexMask shared = a & b;
  for (int j = 0; j < g.count(); ++j) {
    if (shared & (IndexMask{1} << j)) sign *= g.squares[j];
  }
  return sign;
}

SignedMonomial make_monomial(const GeneratorSet& g, IndexMask mask, int sign) {
  if (mask >> g.count()) throw DomainError("monomial index beyond generator count");
  SignedMonomial out(g.dim());
  out.mask = mask;
  out.sign = sign;
  ExactMatrix m = ExactMatrix::identity(g.dim());
  for (int j = 1; j <= g.count(); ++j) {
    if (mask & (IndexMask{1} << (j - 1))) m = m * g.gen(j);
  }
  out.matrix = sign < 0 ? -m : m;
  out.square = monomial_product_sign(g, mask, mask);
  return out;
}

SignedMonomial make_monomial(const GeneratorSet& g, const std::vector<int>& indices, int sign) {
  IndexMask mask = 0;
  for (int j : indices) {
    if (j < 1 || j > g.count()) throw DomainError("monomial index out of range");
    mask |= IndexMask{1} << (j - 1);
  }
  return make_monomial(g, mask, sign);
}

SignedMonomial mono_mul(const GeneratorSet& g, const SignedMonomial& a, const SignedMonomial& b) {
  int sign = a.sign * b.sign * monomial_product_sign(g, a.mask, b.mask);
  SignedMonomial out = make_monomial(g, a.mask ^ b.mask, sign);
  return out;
}

SignedMonomial mono_inverse(const GeneratorSet& g, const SignedMonomial& a) {
  SignedMonomial out = a;
  if (a.square < 0) {
    out.sign = -a.sign;
    out.matrix = -a.matrix;
  }
  (void)g;
  return out;
}

int predicted_conjugation_sign(IndexMask mask, int j) {
  int size = std::popcount(mask);
  bool inside = mask & (IndexMask{1} << (j - 1));
  return ((size - (inside ? 1 : 0)) % 2) ? -1 : 1;
}

SignedMonomial compute_W(const GeneratorSet& g) {
  return make_monomial(g, (IndexMask{1} << g.count()) - 1, 1);
}

namespace {

std::string signs_str(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (x > 0 ? '+' : '-');
  return s;
}

// Checks M E_j M^{-1} == s_j E_j for all j by exact matrix arithmetic.
bool conjugation_matches(const GeneratorSet& g, const SignedMonomial& m,
                         const std::vector<int>& signs) {
  SignedMonomial inv = mono_inverse(g, m);
  for (int j = 1; j <= g.count(); ++j) {
    ExactMatrix lhs = m.matrix * g.gen(j) * inv.matrix;
    ExactMatrix rhs = signs[j - 1] < 0 ? -g.gen(j) : g.gen(j);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace

SignedMonomial solve_monomial(const GeneratorSet& g, const std::vector<int>& target_signs) {
  const int n = g.count();
  if (static_cast<int>(target_signs.size()) != n)
    throw DomainError("solve_monomial: signature length does not match generator count");
  int minus = 0;
  for (int s : target_signs) minus += (s < 0);

  // A subset of even size conjugates to -1 exactly on its own indices; of
  // odd size, exactly off them. Only one parity class can fit, which prunes
  // the exhaustive scan to a single candidate per subset size parity.
  std::vector<IndexMask> solutions;
  const IndexMask all = (IndexMask{1} << n) - 1;
  for (IndexMask s = 0; s <= all; ++s) {
    bool match = true;
    int parity = std::popcount(s) % 2;
    int required_minus = parity ? n - std::popcount(s) : std::popcount(s);
    if (required_minus != minus) continue;  // parity pruning
    for (int j = 1; j <= n && match; ++j) {
      match = predicted_conjugation_sign(s, j) == target_signs[j - 1];
    }
    if (match) solutions.push_back(s);
  }
  if (solutions.empty())
    throw DomainError("unsolvable signature " + signs_str(target_signs));
  // The subset -> sign-pattern map is injective, so at most one survives;
  // keep the lexicographic tie-break anyway for determinism.
  IndexMask best = solutions.front();
  for (IndexMask s : solutions) {
    if (s < best) best = s;
  }
  SignedMonomial out = make_monomial(g, best, 1);
  if (!conjugation_matches(g, out, target_signs))
    throw InternalError("solve_monomial: parity prediction disagreed with matrix conjugation");
  return out;
}

namespace {

SignedMonomial minus_set_monomial(const GeneratorSet& g, const std::vector<int>& signature) {
  IndexMask mask = 0;
  for (int j = 1; j <= g.count(); ++j) {
    if (signature[j - 1] < 0) mask |= IndexMask{1} << (j - 1);
  }
  return make_monomial(g, mask, 1);
}

// Constant c with M X_j M^{-1} == c x_j for all j, where X_j is the given
// image of E_j (transpose / conjugate / conjugate-transpose). Throws if the
// constant is not uniform +-1.
int uniform_law_sign(const GeneratorSet& g, const SignedMonomial& m,
                     ExactMatrix (*image)(const ExactMatrix&), const char* what) {
  SignedMonomial inv = mono_inverse(g, m);
  int constant = 0;
  for (int j = 1; j <= g.count(); ++j) {
    ExactMatrix lhs = m.matrix * image(g.gen(j)) * inv.matrix;
    auto cmp = compare(lhs, g.gen(j));
    int c;
    if (cmp.kind == CompareKind::equal)
      c = 1;
    else if (cmp.kind == CompareKind::negatives)
      c = -1;
    else
      throw InternalError(std::string("septet law (") + what + ") not monomial on generator " +
                          std::to_string(j));
    if (constant == 0)
      constant = c;
    else if (constant != c)
      throw InternalError(std::string("septet law (") + what + ") sign not uniform");
  }
  return constant;
}

ExactMatrix id_image(const ExactMatrix& m) { return m; }
ExactMatrix tr_image(const ExactMatrix& m) { return m.transpose(); }
ExactMatrix cj_image(const ExactMatrix& m) { return m.conj(); }
ExactMatrix ct_image(const ExactMatrix& m) { return m.transpose().conj(); }

}  // namespace

const std::array<const char*, 7>& AutomorphismSeptet::names() {
  static const std::array<const char*, 7> n = {"W", "E", "C", "Pi", "K", "S", "F"};
  return n;
}

AutomorphismSeptet compute_septet(const GeneratorSet& g, SeptetLabeling labeling) {
  GeneratorReport rep = verify_generators(g);
  if (!rep.ok()) {
    std::ostringstream os;
    os << "generator set fails verification:";
    if (!rep.anticommute)
      os << " pair (" << rep.offending_pair.first << "," << rep.offending_pair.second
         << ") does not anticommute";
    if (!rep.squares_ok) os << " generator " << rep.offending_square << " square not +-I";
    throw DomainError(os.str());
  }

  std::vector<int> eps = symmetry_signature(g);
  std::vector<int> eta = reality_signature(g);

  AutomorphismSeptet sep;
  sep.labeling = labeling;
  sep.W = compute_W(g);
  // Both construction routes return sign +1, the published phase
  // normalization for E and Pi.
  if (labeling == SeptetLabeling::reference) {
    sep.E = minus_set_monomial(g, eps);
    sep.Pi = minus_set_monomial(g, eta);
  } else {
    sep.E = solve_monomial(g, eps);
    sep.Pi = solve_monomial(g, eta);
  }
  // The derived elements are the positive ascending monomials (the table
  // headers); the defining products determine them only up to the group
  // sign, e.g. E*W = -C for the spin-1 field.
  auto positive = [&](const SignedMonomial& m) {
    return m.sign < 0 ? make_monomial(g, m.mask, 1) : m;
  };
  sep.C = positive(mono_mul(g, sep.E, sep.W));
  sep.K = positive(mono_mul(g, sep.Pi, sep.W));
  sep.S = positive(mono_mul(g, sep.Pi, sep.E));
  sep.F = positive(mono_mul(g, sep.Pi, sep.C));

  // Re-verify every conjugation law by matrix arithmetic. W always carries
  // grade involution; each remaining pair realizes its two laws in one of
  // the two orders, recorded in the flags.
  if (uniform_law_sign(g, sep.W, id_image, "involution") != -1)
    throw InternalError("W does not implement grade involution");
  int e_sign = uniform_law_sign(g, sep.E, tr_image, "reversion/conjugation");
  int c_sign = uniform_law_sign(g, sep.C, tr_image, "reversion/conjugation");
  if (e_sign + c_sign != 0) throw InternalError("E and C do not split the transpose laws");
  sep.reversion_on_E = e_sign == 1;
  int pi_sign = uniform_law_sign(g, sep.Pi, cj_image, "pseudoautomorphism");
  int k_sign = uniform_law_sign(g, sep.K, cj_image, "pseudoautomorphism");
  if (pi_sign + k_sign != 0) throw InternalError("Pi and K do not split the conjugation laws");
  sep.conjugation_on_Pi = pi_sign == 1;
  int s_sign = uniform_law_sign(g, sep.S, ct_image, "conjugate reversion");
  int f_sign = uniform_law_sign(g, sep.F, ct_image, "conjugate reversion");
  if (s_sign + f_sign != 0) throw InternalError("S and F do not split the starred laws");
  sep.bar_reversion_on_S = s_sign == 1;

  // Product identities as exact matrices, up to the group sign.
  auto matches = [](const SignedMonomial& x, const ExactMatrix& prod) {
    return x.matrix == prod || x.matrix == -prod;
  };
  if (!matches(sep.C, sep.E.matrix * sep.W.matrix) ||
      !matches(sep.K, sep.Pi.matrix * sep.W.matrix) ||
      !matches(sep.S, sep.Pi.matrix * sep.E.matrix) ||
      !matches(sep.F, sep.Pi.matrix * sep.C.matrix))
    throw InternalError("septet product identities failed");

  // Strict labeling must carry the plain laws on the first-listed elements.
  if (labeling == SeptetLabeling::strict &&
      (!sep.reversion_on_E || !sep.conjugation_on_Pi || !sep.bar_reversion_on_S))
    throw InternalError("strict septet labels do not carry the plain laws");

  return sep;
}

}  // namespace cpt
