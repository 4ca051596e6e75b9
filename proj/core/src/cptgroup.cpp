#include "cpt/cptgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace cpt {

int SignVector::plus_count() const {
  int c = 0;
  for (int x : v) c += (x > 0);
  return c;
}

std::string SignVector::str() const {
  std::string s = "(";
  for (int i = 0; i < 7; ++i) {
    s += v[i] > 0 ? '+' : '-';
    if (i < 6) s += ',';
  }
  return s + ")";
}

SignVector sign_vector(const AutomorphismSeptet& s) {
  SignVector out;
  auto elems = s.ordered();
  for (int i = 0; i < 7; ++i) out.v[i] = elems[i]->square;
  return out;
}

std::string to_string(GroupType t) {
  switch (t) {
    case GroupType::Z2x2x2x2: return "Z2xZ2xZ2xZ2";
    case GroupType::Z4xZ2xZ2: return "Z4xZ2xZ2";
    case GroupType::Q4xZ2: return "Q4xZ2";
    case GroupType::D4xZ2: return "D4xZ2";
    case GroupType::StarZ4xZ2xZ2: return "*Z4xZ2xZ2";
  }
  return "?";
}

Fingerprint fingerprint_of_table(const std::vector<std::vector<int>>& mul) {
  const int n = static_cast<int>(mul.size());
  Fingerprint fp;
  fp.order = n;
  fp.abelian = true;
  for (int i = 0; i < n && fp.abelian; ++i)
    for (int j = 0; j < n; ++j)
      if (mul[i][j] != mul[j][i]) {
        fp.abelian = false;
        break;
      }
  int e = -1;
  for (int i = 0; i < n; ++i) {
    bool ident = true;
    for (int j = 0; j < n; ++j) ident = ident && mul[i][j] == j;
    if (ident) {
      e = i;
      break;
    }
  }
  if (e < 0) throw DomainError("multiplication table has no identity");
  std::map<int, int> counts;
  for (int i = 0; i < n; ++i) {
    int k = 1, x = i;
    while (x != e) {
      x = mul[x][i];
      ++k;
      if (k > n) throw DomainError("multiplication table is not a group");
    }
    counts[k]++;
  }
  fp.order_counts.assign(counts.begin(), counts.end());
  for (int i = 0; i < n; ++i) {
    bool central = true;
    for (int j = 0; j < n; ++j) central = central && mul[i][j] == mul[j][i];
    fp.center += central;
  }
  return fp;
}

namespace {

// Closure of explicit matrices into a multiplication table. Elements are
// canonicalized by their exact entries.
struct MatrixGroup {
  std::vector<ExactMatrix> elems;
  std::vector<std::vector<int>> table;
};

std::string matrix_key(const ExactMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      const GaussianRational& v = m.at(i, j);
      if (!v.is_zero()) os << i << ',' << j << ':' << v.str() << ';';
    }
  return os.str();
}

MatrixGroup close_matrix_group(const std::vector<ExactMatrix>& gens, std::size_t cap = 64) {
  MatrixGroup g;
  std::map<std::string, int> index;
  std::vector<ExactMatrix> frontier = gens;
  frontier.push_back(ExactMatrix::identity(gens.at(0).dim()));
  while (!frontier.empty()) {
    ExactMatrix m = frontier.back();
    frontier.pop_back();
    std::string key = matrix_key(m);
    if (index.count(key)) continue;
    index.emplace(key, static_cast<int>(g.elems.size()));
    g.elems.push_back(m);
    if (g.elems.size() > cap) throw DomainError("matrix group closure exceeded cap");
    for (const ExactMatrix& n : g.elems) {
      frontier.push_back(m * n);
      frontier.push_back(n * m);
    }
  }
  const int n = static_cast<int>(g.elems.size());
  g.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(matrix_key(g.elems[i] * g.elems[j]));
      if (it == index.end()) throw InternalError("matrix closure not closed");
      g.table[i][j] = it->second;
    }
  return g;
}

std::vector<std::vector<int>> direct_with_z2(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  std::vector<std::vector<int>> out(2 * n, std::vector<int>(2 * n));
  for (int i = 0; i < n; ++i)
    for (int si = 0; si < 2; ++si)
      for (int j = 0; j < n; ++j)
        for (int sj = 0; sj < 2; ++sj)
          out[2 * i + si][2 * j + sj] = 2 * t[i][j] + (si ^ sj);
  return out;
}

ExactMatrix mat2(std::array<GaussianRational, 4> e) {
  ExactMatrix m(2);
  m.at(0, 0) = e[0];
  m.at(0, 1) = e[1];
  m.at(1, 0) = e[2];
  m.at(1, 1) = e[3];
  return m;
}

std::vector<std::pair<GroupType, std::vector<std::vector<int>>>> build_presentations() {
  using GR = GaussianRational;
  const GR o = GR::one(), i = GR::i(), z = GR::zero();
  std::vector<std::pair<GroupType, std::vector<std::vector<int>>>> out;

  // Z2^4: xor on 4-bit vectors.
  {
    std::vector<std::vector<int>> t(16, std::vector<int>(16));
    for (int a = 0; a < 16; ++a)
      for (int b = 0; b < 16; ++b) t[a][b] = a ^ b;
    out.emplace_back(GroupType::Z2x2x2x2, std::move(t));
  }
  // Z4 x Z2 x Z2 on tuples (a mod 4, b, c).
  {
    std::vector<std::vector<int>> t(16, std::vector<int>(16));
    auto enc = [](int a, int b, int c) { return a * 4 + b * 2 + c; };
    for (int a1 = 0; a1 < 4; ++a1)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int c1 = 0; c1 < 2; ++c1)
          for (int a2 = 0; a2 < 4; ++a2)
            for (int b2 = 0; b2 < 2; ++b2)
              for (int c2 = 0; c2 < 2; ++c2)
                t[enc(a1, b1, c1)][enc(a2, b2, c2)] =
                    enc((a1 + a2) % 4, (b1 + b2) % 2, (c1 + c2) % 2);
    out.emplace_back(GroupType::Z4xZ2xZ2, std::move(t));
  }
  // Q4 x Z2: quaternion units i = diag(i,-i), j = [[0,1],[-1,0]], doubled.
  {
    MatrixGroup q8 = close_matrix_group({mat2({i, z, z, -i}), mat2({z, o, -o, z})});
    if (q8.elems.size() != 8) throw InternalError("Q8 presentation has wrong order");
    out.emplace_back(GroupType::Q4xZ2, direct_with_z2(q8.table));
  }
  // D4 x Z2: reflections X = [[0,1],[1,0]], Z = diag(1,-1), doubled.
  {
    MatrixGroup d4 = close_matrix_group({mat2({z, o, o, z}), mat2({o, z, z, -o})});
    if (d4.elems.size() != 8) throw InternalError("D4 presentation has wrong order");
    out.emplace_back(GroupType::D4xZ2, direct_with_z2(d4.table));
  }
  // *Z4 x Z2 x Z2: the central product Z4 o D4 (Pauli pair with i adjoined).
  {
    MatrixGroup pauli = close_matrix_group(
        {mat2({z, o, o, z}), mat2({o, z, z, -o}), mat2({i, z, z, i})});
    if (pauli.elems.size() != 16) throw InternalError("Z4oD4 presentation has wrong order");
    out.emplace_back(GroupType::StarZ4xZ2xZ2, pauli.table);
  }
  return out;
}

}  // namespace

std::vector<std::pair<GroupType, std::vector<std::vector<int>>>> catalog_presentations() {
  return build_presentations();
}

const std::map<Fingerprint, GroupType>& classification_catalog() {
  static const std::map<Fingerprint, GroupType> catalog = [] {
    std::map<Fingerprint, GroupType> c;
    for (const auto& [type, table] : build_presentations()) {
      Fingerprint fp = fingerprint_of_table(table);
      auto [it, inserted] = c.emplace(fp, type);
      if (!inserted)
        throw InternalError("classification fingerprints are not pairwise distinct");
    }
    return c;
  }();
  return catalog;
}

GroupType classify(const Fingerprint& fp) {
  const auto& catalog = classification_catalog();
  auto it = catalog.find(fp);
  if (it == catalog.end()) {
    throw DomainError("group fingerprint matches no order-16 double cover: order=" +
                      std::to_string(fp.order));
  }
  return it->second;
}

bool tables_isomorphic(const std::vector<std::vector<int>>& a,
                       const std::vector<std::vector<int>>& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  auto orders = [&](const std::vector<std::vector<int>>& t) {
    Fingerprint fp = fingerprint_of_table(t);
    return fp;
  };
  if (orders(a) != orders(b)) return false;
  // Backtracking over element images, constrained by the partial tables.
  std::vector<int> img(n, -1), used(n, 0);
  auto consistent = [&](int x) {
    for (int y = 0; y < n; ++y) {
      if (img[y] < 0) continue;
      if (img[a[x][y]] >= 0 && img[a[x][y]] != b[img[x]][img[y]]) return false;
      if (img[a[y][x]] >= 0 && img[a[y][x]] != b[img[y]][img[x]]) return false;
    }
    return true;
  };
  // order elements by decreasing constraint (just fixed order works at n=16)
  std::function<bool(int)> rec = [&](int x) -> bool {
    if (x == n) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (img[a[i][j]] != b[img[i]][img[j]]) return false;
      return true;
    }
    if (img[x] >= 0) return rec(x + 1);
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      img[x] = y;
      used[y] = 1;
      if (consistent(x) && rec(x + 1)) return true;
      img[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  return rec(0);
}

namespace {

// element encoding: 2*k + (sign is minus), k into (1, W, E, C, Pi, K, S, F)
int encode(int label, int sign) { return 2 * label + (sign < 0 ? 1 : 0); }

}  // namespace

CptGroup generate_group(const GeneratorSet& g, const AutomorphismSeptet& s) {
  CptGroup out;
  auto elems = s.ordered();
  out.base_masks[0] = 0;
  for (int k = 0; k < 7; ++k) out.base_masks[k + 1] = elems[k]->mask;
  std::map<IndexMask, int> label_of;
  for (int k = 0; k < 8; ++k) {
    if (!label_of.emplace(out.base_masks[k], k).second)
      throw DomainError("septet elements are not distinct; closure would shrink");
  }

  // signs[k] for the canonical representative of label k (sign +1 by
  // construction of the septet).
  out.table.assign(16, std::vector<int>(16));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int sign = monomial_product_sign(g, out.base_masks[a], out.base_masks[b]);
      IndexMask m = out.base_masks[a] ^ out.base_masks[b];
      auto it = label_of.find(m);
      if (it == label_of.end())
        throw DomainError("closure exceeds 16 elements; input is not a septet");
      for (int sa = 0; sa < 2; ++sa)
        for (int sb = 0; sb < 2; ++sb) {
          int total = sign * (sa ? -1 : 1) * (sb ? -1 : 1);
          out.table[encode(a, sa ? -1 : 1)][encode(b, sb ? -1 : 1)] =
              encode(it->second, total);
        }
    }
  }

  // Re-verify all 64 base products against exact matrix arithmetic.
  const ExactMatrix ident = ExactMatrix::identity(g.dim());
  std::array<const ExactMatrix*, 8> mats{};
  mats[0] = &ident;
  for (int k = 0; k < 7; ++k) mats[k + 1] = &elems[k]->matrix;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int cell = out.table[encode(a, 1)][encode(b, 1)];
      const ExactMatrix& expect = *mats[cell / 2];
      ExactMatrix got = *mats[a] * *mats[b];
      if (!(cell % 2 ? got == -expect : got == expect))
        throw InternalError("combinatorial product disagrees with matrix product");
    }

  out.signs = sign_vector(s);
  out.fp = fingerprint_of_table(out.table);
  out.type = classify(out.fp);

  // Cross-check: the computed sign pattern must land on a Table-of-covers row
  // compatible with the fingerprint classification.
  int plus = out.signs.plus_count();
  bool compatible = (plus == 7 && out.type == GroupType::Z2x2x2x2) ||
                    (plus == 3 && (out.type == GroupType::Z4xZ2xZ2 ||
                                   out.type == GroupType::StarZ4xZ2xZ2)) ||
                    (plus == 1 && out.type == GroupType::Q4xZ2) ||
                    (plus == 5 && out.type == GroupType::D4xZ2);
  if (!compatible)
    throw InternalError("sign vector " + out.signs.str() + " incompatible with type " +
                        to_string(out.type));

  // -1 must be central (it is, by the sign bookkeeping; assert anyway).
  for (int x = 0; x < 16; ++x)
    if (out.table[1][x] != out.table[x][1]) throw InternalError("-1 is not central");

  // ext type: quotient by a central involution other than -1 when one
  // exists (the worked fields give D4), else by {+-1} (gives Z2xZ2xZ2).
  {
    int zsel = 1;  // element index of -1
    for (int x = 2; x < 16; ++x) {
      bool central = true;
      for (int y = 0; y < 16; ++y) central = central && out.table[x][y] == out.table[y][x];
      if (central && out.table[x][x] == 0) {
        zsel = x;
        break;
      }
    }
    std::vector<int> coset(16, -1);
    int ncos = 0;
    for (int x = 0; x < 16; ++x) {
      if (coset[x] >= 0) continue;
      coset[x] = ncos;
      coset[out.table[x][zsel]] = ncos;
      ++ncos;
    }
    std::vector<std::vector<int>> q(ncos, std::vector<int>(ncos));
    for (int x = 0; x < 16; ++x)
      for (int y = 0; y < 16; ++y) q[coset[x]][coset[y]] = coset[out.table[x][y]];
    Fingerprint qf = fingerprint_of_table(q);
    int max_order = qf.order_counts.back().first;
    if (qf.abelian)
      out.ext_type = max_order == 2 ? "Z2xZ2xZ2" : (max_order == 4 ? "Z4xZ2" : "Z8");
    else {
      int involutions = 0;
      for (auto [o, c] : qf.order_counts)
        if (o == 2) involutions = c;
      out.ext_type = involutions == 1 ? "Q4" : "D4";
    }
  }
  return out;
}

MultTable8 mult_table_mod_z2(const GeneratorSet& g, const AutomorphismSeptet& s) {
  CptGroup grp = generate_group(g, s);
  MultTable8 t;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int cell = grp.table[2 * a][2 * b];
      t.cells[a][b] = {cell % 2 ? -1 : 1, cell / 2};
    }
  return t;
}

std::array<std::array<int, 8>, 8> abstract_cpt_table() {
  std::array<std::array<int, 8>, 8> t{};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = a ^ b;
  return t;
}

const std::array<const char*, 8>& abstract_cpt_labels() {
  static const std::array<const char*, 8> l = {"1", "P", "T", "PT", "C", "CP", "CT", "CPT"};
  return l;
}

namespace {

SubgroupInfo bucket_from_fingerprint(const Fingerprint& fp) {
  SubgroupInfo info;
  info.order = fp.order;
  info.abelian = fp.abelian;
  int max_order = fp.order_counts.back().first;
  if (fp.abelian) {
    info.bucket = max_order <= 2 ? "Z2xZ2" : "Z4";
  } else {
    int involutions = 0;
    for (auto [o, c] : fp.order_counts)
      if (o == 2) involutions = c;
    info.bucket = involutions == 1 ? "quaternionic" : "dihedral";
  }
  return info;
}

}  // namespace

SubgroupInfo subgroup_type(const GeneratorSet& g, const AutomorphismSeptet& s) {
  // Closure of {W, E, C} over signed monomials; -1 enters only if products
  // generate it (they do exactly when the subgroup is not the plain
  // four-element one).
  std::map<std::pair<IndexMask, int>, int> index;
  std::vector<std::pair<IndexMask, int>> elems;
  std::vector<std::pair<IndexMask, int>> frontier = {{0, 1},
                                                     {s.W.mask, s.W.sign},
                                                     {s.E.mask, s.E.sign},
                                                     {s.C.mask, s.C.sign}};
  while (!frontier.empty()) {
    auto el = frontier.back();
    frontier.pop_back();
    if (index.count(el)) continue;
    index.emplace(el, static_cast<int>(elems.size()));
    elems.push_back(el);
    for (const auto& other : elems) {
      for (auto [x, y] : {std::pair(el, other), std::pair(other, el)}) {
        int sign = x.second * y.second * monomial_product_sign(g, x.first, y.first);
        frontier.emplace_back(x.first ^ y.first, sign);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int sign =
          elems[i].second * elems[j].second * monomial_product_sign(g, elems[i].first, elems[j].first);
      auto it = index.find({elems[i].first ^ elems[j].first, sign});
      if (it == index.end()) throw InternalError("subgroup closure not closed");
      table[i][j] = it->second;
    }
  return bucket_from_fingerprint(fingerprint_of_table(table));
}

SubgroupInfo classify_matrix_group(const std::vector<ExactMatrix>& gens) {
  MatrixGroup g = close_matrix_group(gens, 16);
  return bucket_from_fingerprint(fingerprint_of_table(g.table));
}

}  // namespace cpt
