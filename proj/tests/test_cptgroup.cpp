#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cpt/cptgroup.hpp"
#include "test_util.hpp"

using namespace cpt;

namespace {

SignVector sv(std::initializer_list<int> v) {
  SignVector s;
  int i = 0;
  for (int x : v) s.v[i++] = x;
  return s;
}

CptGroup worked_field(int m) {
  GeneratorSet g = reference_basis(m);
  return generate_group(g, compute_septet(g));
}

}  // namespace

TEST_CASE("sign vectors of the worked fields") {
  {
    GeneratorSet g = reference_basis(2);
    CHECK(sign_vector(compute_septet(g)) == sv({1, 1, 1, 1, 1, -1, -1}));
  }
  {
    GeneratorSet g = reference_basis(3);
    CHECK(sign_vector(compute_septet(g)) == sv({-1, 1, 1, 1, 1, -1, 1}));
  }
  {
    GeneratorSet g = reference_basis(4);
    CHECK(sign_vector(compute_septet(g)) == sv({-1, -1, 1, 1, 1, 1, 1}));
  }
  CHECK(sv({1, 1, 1, 1, 1, -1, -1}).str() == "(+,+,+,+,+,-,-)");
}

TEST_CASE("worked fields generate order-16 dihedral covers") {
  for (int m : {2, 3, 4}) {
    CptGroup grp = worked_field(m);
    CHECK(grp.table.size() == 16);
    CHECK(grp.type == GroupType::D4xZ2);
    CHECK(grp.ext_type == "D4");
    CHECK(grp.fp.center == 4);
    CHECK_FALSE(grp.fp.abelian);
  }
}

TEST_CASE("every non-degenerate basis closes at order 16 with central -1") {
  for (int m = 2; m <= 6; ++m) {
    GeneratorSet g = build_brauer_weyl(m);
    CptGroup grp = generate_group(g, compute_septet(g));
    CHECK(grp.table.size() == 16);
    for (int x = 0; x < 16; ++x) CHECK(grp.table[1][x] == grp.table[x][1]);
  }
  // m=1 is degenerate: the transpose and reality signatures coincide, the
  // reversion and conjugation representatives collapse onto one matrix and
  // no order-16 closure exists.
  GeneratorSet g1 = build_brauer_weyl(1);
  CHECK_THROWS_AS(generate_group(g1, compute_septet(g1)), DomainError);
}

TEST_CASE("strict m=4 basis gives the all-plus abelian cover") {
  GeneratorSet g = build_brauer_weyl(4);
  AutomorphismSeptet s = compute_septet(g);
  CHECK(sign_vector(s) == sv({1, 1, 1, 1, 1, 1, 1}));
  CptGroup grp = generate_group(g, s);
  CHECK(grp.type == GroupType::Z2x2x2x2);
  CHECK(grp.fp.abelian);
  CHECK(grp.ext_type == "Z2xZ2xZ2");
}

TEST_CASE("tensor field k=3 r=2 pipeline") {
  GeneratorSet g = build_brauer_weyl(6);
  AutomorphismSeptet s = compute_septet(g);
  CHECK(sign_vector(s) == sv({1, 1, 1, 1, 1, -1, -1}));
  CHECK(s.Pi.indices() == std::vector<int>{2, 4, 6, 7, 9, 11});
  CHECK(s.S.indices() == std::vector<int>{2, 4, 6, 8, 10, 12});
  CptGroup grp = generate_group(g, s);
  CHECK(grp.type == GroupType::D4xZ2);
}

TEST_CASE("classification catalog is validated and pairwise distinct") {
  const auto& catalog = classification_catalog();
  CHECK(catalog.size() == 5);
  std::set<GroupType> types;
  for (const auto& [fp, type] : catalog) {
    CHECK(fp.order == 16);
    types.insert(type);
  }
  CHECK(types.size() == 5);
}

TEST_CASE("classify agrees with the presentations and the isomorphism test") {
  auto pres = catalog_presentations();
  CHECK(pres.size() == 5);
  for (const auto& [type, table] : pres) {
    CHECK(classify(fingerprint_of_table(table)) == type);
  }
  // pairwise non-isomorphic
  for (std::size_t i = 0; i < pres.size(); ++i)
    for (std::size_t j = i + 1; j < pres.size(); ++j)
      CHECK_FALSE(tables_isomorphic(pres[i].second, pres[j].second));
  // spin-1/2 group is isomorphic to the D4xZ2 presentation and no other
  CptGroup grp = worked_field(2);
  for (const auto& [type, table] : pres) {
    CHECK(tables_isomorphic(grp.table, table) == (type == GroupType::D4xZ2));
  }
}

TEST_CASE("sign-pattern rows match the classification") {
  // five '+' two '-' -> D4xZ2 (worked fields), all '+' -> Z2^4 (strict m=4)
  CHECK(worked_field(2).signs.plus_count() == 5);
  GeneratorSet g4 = build_brauer_weyl(4);
  CptGroup abelian = generate_group(g4, compute_septet(g4));
  CHECK(abelian.signs.plus_count() == 7);
}

TEST_CASE("mod-Z2 multiplication tables") {
  GeneratorSet g = reference_basis(2);
  AutomorphismSeptet s = compute_septet(g);
  MultTable8 t = mult_table_mod_z2(g, s);
  // identity row and column
  for (int j = 0; j < 8; ++j) {
    CHECK(t.cells[0][j].label == j);
    CHECK(t.cells[0][j].sign == 1);
    CHECK(t.cells[j][0].label == j);
    CHECK(t.cells[j][0].sign == 1);
  }
  // E x Pi = -S and Pi x E = +S in the spin-1/2 table (E=E_34, Pi=E_23)
  CHECK(t.cells[2][4].label == 6);
  CHECK(t.cells[2][4].sign == -1);
  CHECK(t.cells[4][2].label == 6);
  CHECK(t.cells[4][2].sign == 1);
  // S x S = -1
  CHECK(t.cells[6][6].label == 0);
  CHECK(t.cells[6][6].sign == -1);

  // spin-1: W x W = -1
  GeneratorSet g3 = reference_basis(3);
  MultTable8 t3 = mult_table_mod_z2(g3, compute_septet(g3));
  CHECK(t3.cells[1][1].label == 0);
  CHECK(t3.cells[1][1].sign == -1);
}

TEST_CASE("abstract table is the xor cube and every table projects onto it") {
  auto abs = abstract_cpt_table();
  // P x T = PT, C x PT = CPT, diagonal is the identity
  CHECK(abs[1][2] == 3);
  CHECK(abs[4][3] == 7);
  for (int x = 0; x < 8; ++x) CHECK(abs[x][x] == 0);
  for (int m : {2, 3, 4}) {
    GeneratorSet g = reference_basis(m);
    MultTable8 t = mult_table_mod_z2(g, compute_septet(g));
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) CHECK(t.cells[a][b].label == abs[a][b]);
  }
}

TEST_CASE("subgroup generated by W, E, C") {
  {
    GeneratorSet g = reference_basis(2);
    SubgroupInfo info = subgroup_type(g, compute_septet(g));
    CHECK(info.abelian);
    CHECK(info.order == 4);  // closes without -1
    CHECK(info.bucket == "Z2xZ2");
  }
  {
    GeneratorSet g = reference_basis(3);
    SubgroupInfo info = subgroup_type(g, compute_septet(g));
    CHECK_FALSE(info.abelian);
    CHECK(info.order == 8);
    CHECK(info.bucket == "dihedral");
  }
  {
    GeneratorSet g = reference_basis(4);
    SubgroupInfo info = subgroup_type(g, compute_septet(g));
    CHECK(info.abelian);
    CHECK(info.bucket == "Z4");
  }
}

TEST_CASE("quaternionic subgroup bucket on the 2x2 model") {
  // W = i*sigma1, E = i*sigma2 have W^2 = E^2 = -1 and WE = -EW.
  PauliSet p = PauliSet::make(PauliConvention::standard);
  GaussianRational i = GaussianRational::i();
  SubgroupInfo info = classify_matrix_group({i * p.sigma1, i * p.sigma2});
  CHECK_FALSE(info.abelian);
  CHECK(info.order == 8);
  CHECK(info.bucket == "quaternionic");

  // commuting involutions stay Z2xZ2
  SubgroupInfo flat = classify_matrix_group({p.sigma3, ExactMatrix::identity(2)});
  CHECK(flat.abelian);
  CHECK(flat.bucket == "Z2xZ2");
}

TEST_CASE("non-septet input is rejected") {
  GeneratorSet g = build_brauer_weyl(2);
  AutomorphismSeptet s = compute_septet(g);
  AutomorphismSeptet broken = s;
  broken.F = broken.E;  // duplicate monomial: closure would collapse
  CHECK_THROWS_AS(generate_group(g, broken), DomainError);
}
