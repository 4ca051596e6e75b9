#include "cpt/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cpt {

namespace {

int two_l_to_count(const Rational& l, const char* what) {
  Rational doubled = l * 2;
  if (l < 0 || !is_integer(doubled))
    throw DomainError(std::string(what) + " must be a non-negative integer or half-integer");
  Int n = numerator(doubled);
  if (n > 24) throw CapExceeded(std::string(what) + " too large");
  return static_cast<int>(n);
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

FieldSpec FieldSpec::chiral(const Rational& l) {
  FieldSpec f;
  f.kind = Kind::chiral_pair;
  f.k = two_l_to_count(l, "l");
  f.r = f.k;
  return f;
}

FieldSpec FieldSpec::tensor(int k, int r) {
  if (k < 0 || r < 0) throw DomainError("k and r must be non-negative");
  FieldSpec f;
  f.kind = Kind::tensor_pair;
  f.k = k;
  f.r = r;
  return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.rfind("l=", 0) == 0) return chiral(parse_rational(s.substr(2)));
  if (s.rfind("k=", 0) == 0) {
    auto comma = s.find(",r=");
    if (comma == std::string::npos) throw DomainError("expected k=<int>,r=<int>");
    Rational k = parse_rational(s.substr(2, comma - 2));
    Rational r = parse_rational(s.substr(comma + 3));
    if (!is_integer(k) || !is_integer(r)) throw DomainError("k and r must be integers");
    return tensor(static_cast<int>(numerator(k)), static_cast<int>(numerator(r)));
  }
  if (!s.empty() && s.front() == '(') {
    // (a,b)+(b,a): a tensor pair and its mirrored partner
    auto mid = s.find(")+(");
    if (mid == std::string::npos || s.back() != ')')
      throw DomainError("expected (a,b)+(b,a) field spec");
    auto parse_pair = [](const std::string& body) {
      auto comma = body.find(',');
      if (comma == std::string::npos) throw DomainError("expected a,b inside parentheses");
      return std::pair(parse_rational(body.substr(0, comma)), parse_rational(body.substr(comma + 1)));
    };
    auto [a1, b1] = parse_pair(s.substr(1, mid - 1));
    auto [a2, b2] = parse_pair(s.substr(mid + 3, s.size() - mid - 4));
    if (a1 != b2 || b1 != a2)
      throw DomainError("tensor field spec must be mirrored: (a,b)+(b,a)");
    return tensor(two_l_to_count(a1, "l'"), two_l_to_count(b1, "l''"));
  }
  throw DomainError("unrecognized field spec: '" + text + "'");
}

Rational FieldSpec::spin() const {
  if (kind == Kind::chiral_pair) return Rational(k, 2);
  return Rational(k >= r ? k - r : r - k, 2);
}

std::string FieldSpec::str() const {
  std::ostringstream os;
  if (kind == Kind::chiral_pair) {
    os << "l=" << to_string(Rational(k, 2));
  } else {
    os << "k=" << k << ",r=" << r;
  }
  return os.str();
}

RepSpec rep_params(const FieldSpec& f) {
  RepSpec r;
  if (f.kind == FieldSpec::Kind::chiral_pair) {
    r.l0 = Rational(f.k, 2);
    r.l1 = Rational(f.k, 2) + 1;
  } else {
    r.l0 = Rational(f.k - f.r, 2);
    r.l1 = Rational(f.k + f.r, 2) + 1;
  }
  r.l = (r.l0 + r.l1 - 1) / 2;
  r.l_dot = (r.l0 - r.l1 + 1) / 2;
  return r;
}

int k_from_rep(const RepSpec& r) {
  Rational k = r.l0 + r.l1 - 1;
  if (!is_integer(k)) throw DomainError("rep does not invert to an integer k");
  return static_cast<int>(numerator(k));
}

int r_from_rep(const RepSpec& r) {
  Rational rr = r.l1 - r.l0 - 1;
  if (!is_integer(rr)) throw DomainError("rep does not invert to an integer r");
  return static_cast<int>(numerator(rr));
}

AlgebraSpec field_to_algebra(const FieldSpec& f) {
  AlgebraSpec a;
  if (f.degenerate()) {
    a.degenerate = true;
    a.num_generators = 0;
    a.matrix_dim = 1;
    a.description = "1 (scalar field, no generators)";
    return a;
  }
  std::ostringstream os;
  if (f.kind == FieldSpec::Kind::chiral_pair) {
    a.num_generators = 2 * f.k + 2;
    os << "C2^(x" << f.k << ") (+) *C2^(x" << f.k << ")";
  } else {
    a.num_generators = 2 * (f.k + f.r) + 2;
    os << "C2^(x" << f.k << ") (x) *C2^(x" << f.r << ")  (+)  mirror";
  }
  int m = a.num_generators / 2;
  if (m > 24) throw CapExceeded("field needs too many generators");
  a.matrix_dim = 1 << m;
  a.description = os.str();
  return a;
}

Rational mass_gy(const Rational& l, const Rational& kappa) {
  if (l < 0) throw DomainError("spin must be non-negative");
  return 2 * kappa / (2 * l + 1);
}

TensorMass mass_tensor(int k, int r, const Rational& kappa) {
  if (k < 0 || r < 0) throw DomainError("k and r must be non-negative");
  TensorMass t;
  t.mu = kappa / Rational((k + 1) * (r + 1));
  t.spin = Rational(k >= r ? k - r : r - k, 2);
  return t;
}

std::vector<ChainEntry> enumerate_chain(ChainScheme scheme, int depth) {
  if (depth < 1) throw DomainError("chain depth must be at least 1");
  std::vector<ChainEntry> out;
  for (int step = 0; step < depth; ++step) {
    int k = scheme == ChainScheme::bose_diagonal ? step : step + 1;
    int r = step;
    ChainEntry e;
    e.field = FieldSpec::tensor(k, r);
    e.spinspace_dim = 1LL << (k + r);
    e.sym_dim = static_cast<long long>(k + 1) * (r + 1);
    out.push_back(e);
  }
  return out;
}

}  // namespace cpt
