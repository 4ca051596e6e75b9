#pragma once

#include <optional>
#include <string>

#include "cpt/catalog.hpp"
#include "cpt/rational.hpp"

namespace cpt::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum class OutputFormat { text, json, csv };

struct RunConfig {
  std::string command;  // classify | table | verify | rep | mass | chain
  OutputFormat format = OutputFormat::text;
  bool unicode = false;
  bool parallel = false;
  bool strict_basis = false;      // --basis strict
  bool standard_pauli = false;    // --pauli standard
  int dim_cap = 256;              // overridable via CPT_DIM_CAP

  std::optional<FieldSpec> field;

  // rep parameters
  std::optional<Rational> l0, l1, l, ldot;

  // mass/chain parameters
  std::vector<Rational> mass_l;
  Rational kappa = 1;
  std::string scheme = "bose";
  int depth = 1;

  std::string golden_dir;  // verify: override the embedded reference tables
};

// Exit codes shared by the CLI and the tests driving it.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

}  // namespace cpt::cli
