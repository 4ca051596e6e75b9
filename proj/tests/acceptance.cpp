// Acceptance suite: runs every gate criterion and prints one PASS/FAIL line
// per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "cli/golden.hpp"
#include "cli/render.hpp"
#include "cpt/cptgroup.hpp"
#include "cpt/lorentzrep.hpp"
#include "cpt/catalog.hpp"
#include "test_util.hpp"

using namespace cpt;
using namespace cpt::cli;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail
            << "\n";
  if (!pass) ++g_failures;
}

struct FieldRun {
  GeneratorSet gens;
  AutomorphismSeptet septet;
  CptGroup group;
  MultTable8 table;
  double seconds = 0;
};

FieldRun run_field(int m) {
  auto t0 = std::chrono::steady_clock::now();
  FieldRun r;
  r.gens = reference_basis(m);
  r.septet = compute_septet(r.gens);
  r.group = generate_group(r.gens, r.septet);
  r.table = mult_table_mod_z2(r.gens, r.septet);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Diffs a computed table against a transcription with annotated defects:
// every cell must match exactly, except the annotated ones where the
// transcription must carry the documented printed value and the computation
// the documented derived value.
bool table_reproduced(const FieldRun& r, const GoldenTable& gt, std::string& detail) {
  int exact = 0, annotated = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      std::string computed = cell_name(r.table.cells[i][j]);
      const std::string& reference = gt.cells[i][j];
      if (computed == reference) {
        ++exact;
        continue;
      }
      const GoldenErratum* known = nullptr;
      for (const GoldenErratum& e : gt.errata)
        if (e.row == i && e.col == j) known = &e;
      if (known && known->printed == reference && known->derived == computed) {
        ++annotated;
        continue;
      }
      std::ostringstream os;
      os << gt.name << " cell (" << element_names()[i] << "," << element_names()[j]
         << "): computed " << computed << " vs reference " << reference;
      detail = os.str();
      return false;
    }
  std::ostringstream os;
  os << gt.name << " reproduced: " << exact << "/64 cells exact";
  if (annotated) os << ", " << annotated << " documented print defect(s) reconciled";
  detail = os.str();
  return static_cast<std::size_t>(annotated) == gt.errata.size();
}

std::string fmt_time(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << s << "s";
  return os.str();
}

void criterion_1_and_2(const GoldenSet& golden) {
  FieldRun half = run_field(2);
  std::string detail;
  bool ok = table_reproduced(half, golden.tables.at("tab4"), detail);
  report(1, ok && half.seconds < 1.0, detail + " in " + fmt_time(half.seconds));

  FieldRun one = run_field(3);
  std::string d5;
  bool ok5 = table_reproduced(one, golden.tables.at("tab5"), d5);
  FieldRun threehalf = run_field(4);
  std::string d6;
  bool ok6 = table_reproduced(threehalf, golden.tables.at("tab6"), d6);
  report(2, ok5 && ok6 && one.seconds < 1.0 && threehalf.seconds < 1.0,
         d5 + " in " + fmt_time(one.seconds) + "; " + d6 + " in " + fmt_time(threehalf.seconds));
}

void criterion_3() {
  const std::vector<std::pair<int, std::array<int, 7>>> expect = {
      {2, {1, 1, 1, 1, 1, -1, -1}},
      {3, {-1, 1, 1, 1, 1, -1, 1}},
      {4, {-1, -1, 1, 1, 1, 1, 1}},
  };
  bool ok = true;
  std::ostringstream os;
  for (const auto& [m, sv] : expect) {
    FieldRun r = run_field(m);
    bool match = r.group.signs.v == sv && r.group.type == GroupType::D4xZ2;
    ok = ok && match;
    os << "m=" << m << " " << r.group.signs.str() << " " << to_string(r.group.type)
       << (match ? " ok; " : " MISMATCH; ");
  }
  report(3, ok, os.str());
}

void criterion_4(const GoldenSet& golden) {
  auto abs = abstract_cpt_table();
  bool ok = true;
  // the abstract table equals the published Z2^3 table cellwise
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      ok = ok && golden.tab1.cells[i][j] == abstract_cpt_labels()[abs[i][j]];
  // and the sign-forgotten image of every computed table equals it
  for (int m : {2, 3, 4}) {
    FieldRun r = run_field(m);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) ok = ok && r.table.cells[i][j].label == abs[i][j];
  }
  report(4, ok, "abstract CPT/Z2 table matches the reference and every sign-forgotten table");
}

void criterion_5(const GoldenSet& golden) {
  bool ok = true;
  int monomials = 0, variants = 0;
  std::ostringstream os;
  for (const GoldenField& gf : golden.fields) {
    FieldRun r = run_field(gf.m);
    auto elems = r.septet.ordered();
    for (int i = 0; i < 7; ++i) {
      const std::string name = AutomorphismSeptet::names()[i];
      auto it = gf.septet.find(name);
      bool match = it != gf.septet.end() && it->second == elems[i]->indices();
      ok = ok && match;
      monomials += match;
    }
    for (const GoldenVariant& v : gf.text_variants) {
      // the documented text variant must differ from the derived monomial,
      // and the derivation must produce the derived one
      auto it = gf.septet.find(v.element);
      bool flagged = it != gf.septet.end() && v.derived == it->second && v.printed != v.derived;
      ok = ok && flagged;
      ++variants;
      os << gf.field << " " << v.element << " text variant " << monomial_label(v.printed, false)
         << " flagged against derived " << monomial_label(v.derived, false) << "; ";
    }
  }
  std::ostringstream head;
  head << monomials << "/21 published monomials reproduced; " << os.str();
  report(5, ok && monomials == 21 && variants == 1, head.str());
}

void criterion_6() {
  auto t0 = std::chrono::steady_clock::now();
  FieldSpec field = FieldSpec::tensor(3, 2);
  AlgebraSpec alg = field_to_algebra(field);
  bool ok = alg.num_generators == 12 && alg.matrix_dim == 64;
  GeneratorSet g = build_brauer_weyl(alg.num_generators / 2);
  AutomorphismSeptet s = compute_septet(g);
  CptGroup grp = generate_group(g, s);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ok = ok && grp.table.size() == 16;
  // central -1: the canonical element 1 (index of -I) commutes with all
  bool central = true;
  for (int x = 0; x < 16; ++x) central = central && grp.table[1][x] == grp.table[x][1];
  ok = ok && central;
  GroupType type = grp.type;  // classify() already ran inside generate_group
  std::ostringstream os;
  os << "k=3,r=2: 12 generators, 64x64, order 16, central -1, type " << to_string(type) << " in "
     << fmt_time(secs);
  report(6, ok && secs < 10.0, os.str());
}

void criterion_7() {
  bool ok = true;
  auto pres = catalog_presentations();
  ok = ok && pres.size() == 5;
  std::set<Fingerprint> fps;
  for (const auto& [type, table] : pres) {
    Fingerprint fp = fingerprint_of_table(table);
    fps.insert(fp);
    ok = ok && classify(fp) == type;
  }
  ok = ok && fps.size() == 5;
  // brute-force isomorphism agrees with classify: same type <=> isomorphic
  for (std::size_t i = 0; i < pres.size(); ++i)
    for (std::size_t j = 0; j < pres.size(); ++j) {
      bool iso = tables_isomorphic(pres[i].second, pres[j].second);
      ok = ok && iso == (i == j);
    }
  report(7, ok, "five extraspecial fingerprints pairwise distinct; classify matches brute force");
}

void criterion_8() {
  std::mt19937_64 rng(20260809);
  bool ok = true;
  long long cases = 0;
  for (int n = 1; n <= 6; ++n) {
    auto sig = AlgebraSignature::complex_form(n);
    for (int trial = 0; trial < 1000; ++trial) {
      Multivector a = cpt::testing::random_multivector(rng, sig);
      Multivector b = cpt::testing::random_multivector(rng, sig);
      ok = ok && a.grade_involution().grade_involution() == a;
      ok = ok && a.reversion().reversion() == a;
      ok = ok && a.clifford_conjugation().clifford_conjugation() == a;
      ok = ok && a.pseudo_conjugation().pseudo_conjugation() == a;
      ok = ok && (a * b).reversion() == b.reversion() * a.reversion();
      ++cases;
    }
    // The volume-element form of the involution: conjugation by omega is the
    // involution exactly when omega anticommutes with every generator (even
    // n); for odd n omega is central and conjugation by it is the identity.
    {
      auto rsig = AlgebraSignature::real_form(n, 0);
      auto v = volume_element(rsig);
      for (int trial = 0; trial < 1000; ++trial) {
        Multivector a = cpt::testing::random_multivector(rng, rsig);
        Multivector conjugated = v.omega * a * v.omega_inverse;
        ok = ok && conjugated == (n % 2 == 0 ? a.grade_involution() : a);
        ++cases;
      }
    }
  }
  // complex-coordinate patterns in cl(3,0): star negates and w-conjugates
  // the three vector coordinates (fixing the scalar one), reversion
  // w-conjugates all four
  {
    auto sig = AlgebraSignature::real_form(3, 0);
    const BladeMask unit[4] = {0b000, 0b001, 0b010, 0b100};
    const BladeMask partner[4] = {0b111, 0b110, 0b101, 0b011};
    const int orient[4] = {1, 1, -1, 1};
    for (int trial = 0; trial < 1000; ++trial) {
      Multivector a = cpt::testing::random_multivector(rng, sig, 8);
      Multivector st = a.grade_involution();
      Multivector rv = a.reversion();
      for (int j = 0; j < 4; ++j) {
        GaussianRational x = a.coeff(unit[j]);
        GaussianRational y = orient[j] < 0 ? -a.coeff(partner[j]) : a.coeff(partner[j]);
        GaussianRational sx = st.coeff(unit[j]);
        GaussianRational sy = orient[j] < 0 ? -st.coeff(partner[j]) : st.coeff(partner[j]);
        GaussianRational rx = rv.coeff(unit[j]);
        GaussianRational ry = orient[j] < 0 ? -rv.coeff(partner[j]) : rv.coeff(partner[j]);
        int sign = j == 0 ? 1 : -1;
        ok = ok && sx == (sign < 0 ? -x : x) && sy == (sign < 0 ? y : -y);
        ok = ok && rx == x && ry == -y;
      }
      ++cases;
    }
  }
  std::ostringstream os;
  os << "multivector property suite: " << cases << " randomized cases, n <= 6";
  report(8, ok, os.str());
}

void criterion_9() {
  bool ok = true;
  int reps = 0;
  for (int twice_l0 = 0; twice_l0 <= 8; ++twice_l0) {
    Rational l0(twice_l0, 2);
    for (int p = 1; p <= 10; ++p) {
      Rational l1 = l0 + p;
      if (l1 * l1 - l0 * l0 > 20) break;
      GNRep rep = build_gn_rep(l0, l1);
      ok = ok && verify_lorentz_relations(rep).all_pass();
      ++reps;
    }
  }
  int waerdens = 0;
  for (int tl = 0; tl <= 6; ++tl)
    for (int td = 0; tl + td <= 6; ++td) {
      WaerdenRep w = build_waerden(Rational(tl, 2), Rational(td, 2));
      ok = ok && verify_lorentz_relations(w).all_pass();
      ++waerdens;
    }
  std::ostringstream os;
  os << "boost-rotation relations exact on " << reps << " xi-basis reps (dim <= 20) and "
     << waerdens << " ladder reps (l + l-dot <= 3)";
  report(9, ok && reps >= 12, os.str());
}

void criterion_10() {
  bool ok = true;
  for (int k = 0; k <= 12; ++k) {
    RepSpec rc = rep_params(FieldSpec::chiral(Rational(k, 2)));
    ok = ok && k_from_rep(rc) == k;
    for (int r = 0; r <= 12; ++r) {
      RepSpec rt = rep_params(FieldSpec::tensor(k, r));
      ok = ok && k_from_rep(rt) == k && r_from_rep(rt) == r;
    }
  }
  ok = ok && mass_gy(0, 1) == 2 && mass_gy(Rational(1, 2), 1) == 1 && mass_gy(1, 3) == 2;
  ok = ok && mass_tensor(1, 0, 1).mu == Rational(1, 2) && mass_tensor(1, 1, 4).mu == 1 &&
       mass_tensor(3, 2, 12).mu == 1;
  auto bose = enumerate_chain(ChainScheme::bose_diagonal, 3);
  ok = ok && bose[0].spinspace_dim == 1 && bose[1].spinspace_dim == 4 &&
       bose[2].spinspace_dim == 16;
  auto fermi = enumerate_chain(ChainScheme::fermi_diagonal, 2);
  ok = ok && fermi[0].spinspace_dim == 2 && fermi[1].spinspace_dim == 8;
  report(10, ok, "weight round-trips (k,r <= 12), mass formulas, chain dims 1->4->16 and 2->8");
}

}  // namespace

int main() {
  GoldenSet golden = load_golden("");
  criterion_1_and_2(golden);
  criterion_3();
  criterion_4(golden);
  criterion_5(golden);
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::cout << "acceptance: all criteria PASS\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion/criteria FAILED\n";
  return 1;
}
