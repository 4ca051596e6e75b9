#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cpt/autosolve.hpp"

namespace cpt {

// Squares of (W, E, C, Pi, K, S, F): the superscripts (a,...,g).
struct SignVector {
  std::array<int, 7> v{};
  int plus_count() const;
  std::string str() const;  // "(+,+,+,+,+,-,-)"
  friend bool operator==(const SignVector&, const SignVector&) = default;
};

SignVector sign_vector(const AutomorphismSeptet& s);

// The five order-16 double covers of Z2xZ2xZ2.
enum class GroupType { Z2x2x2x2, Z4xZ2xZ2, Q4xZ2, D4xZ2, StarZ4xZ2xZ2 };
std::string to_string(GroupType t);

// (abelian?, multiset of element orders, center size, group order) —
// separates the five types; validated against brute-force presentations
// before the catalog is trusted.
struct Fingerprint {
  bool abelian = false;
  std::vector<std::pair<int, int>> order_counts;  // (element order, count), ascending
  int center = 0;
  int order = 0;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint_of_table(const std::vector<std::vector<int>>& mul);

// Catalog of the five fingerprints, built once from explicit presentations
// (bit vectors, tuples, quaternion units, signed permutations, the i-scaled
// Pauli pair) and checked pairwise distinct.
const std::map<Fingerprint, GroupType>& classification_catalog();

// Brute-force multiplication table of each catalog presentation, for
// cross-checks against classify().
std::vector<std::pair<GroupType, std::vector<std::vector<int>>>> catalog_presentations();

// Backtracking isomorphism test for small groups (order <= 16 here).
bool tables_isomorphic(const std::vector<std::vector<int>>& a,
                       const std::vector<std::vector<int>>& b);

struct MultTable8Cell {
  int sign = 1;
  int label = 0;  // into the order (1, W, E, C, Pi, K, S, F)
};

struct MultTable8 {
  std::array<std::array<MultTable8Cell, 8>, 8> cells{};
  friend bool operator==(const MultTable8&, const MultTable8&) = default;
};

// Order-16 group {+-1, +-W, ..., +-F} with its index table and class data.
struct CptGroup {
  // element 2*k + (sign<0): k indexes (1, W, E, C, Pi, K, S, F)
  std::array<IndexMask, 8> base_masks{};
  std::vector<std::vector<int>> table;  // 16x16 index table
  SignVector signs;
  GroupType type = GroupType::D4xZ2;
  std::string ext_type;  // class of the 8-element quotient, e.g. "D4"
  Fingerprint fp;
};

// Closes the septet under multiplication, asserts order exactly 16 with a
// central -1, fills the table combinatorially and re-verifies every base
// product against exact matrix arithmetic.
CptGroup generate_group(const GeneratorSet& g, const AutomorphismSeptet& s);

GroupType classify(const Fingerprint& fp);

MultTable8 mult_table_mod_z2(const GeneratorSet& g, const AutomorphismSeptet& s);

// The sign-free Z2xZ2xZ2 table over (1, P, T, PT, C, CP, CT, CPT):
// cells[i][j] = i xor j under the bit encoding P=1, T=2, C=4.
std::array<std::array<int, 8>, 8> abstract_cpt_table();
const std::array<const char*, 8>& abstract_cpt_labels();

// Isomorphism class of <+-1, W, E, C>.
struct SubgroupInfo {
  int order = 0;
  bool abelian = true;
  std::string bucket;  // "Z2xZ2" | "Z4" | "dihedral" | "quaternionic"
};

SubgroupInfo subgroup_type(const GeneratorSet& g, const AutomorphismSeptet& s);

// Same bucketing applied to the closure of explicit matrix generators
// (order <= 16); used by the oracle tests.
SubgroupInfo classify_matrix_group(const std::vector<ExactMatrix>& gens);

}  // namespace cpt
