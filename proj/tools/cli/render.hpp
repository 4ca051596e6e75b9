#pragma once

#include <string>
#include <vector>

#include "cpt/autosolve.hpp"
#include "cpt/cptgroup.hpp"

namespace cpt::cli {

// "1" for the empty monomial; otherwise "E_34" / "E_{1,3,12}" in ascii or
// the script form with subscript digits in unicode mode.
std::string monomial_label(const std::vector<int>& indices, bool unicode);

inline const std::array<const char*, 8>& element_names() {
  static const std::array<const char*, 8> n = {"1", "W", "E", "C", "Pi", "K", "S", "F"};
  return n;
}

// "-E_12" style cell: sign prefix + the monomial label of the element.
std::string cell_text(const MultTable8Cell& cell, const AutomorphismSeptet& septet, int dim,
                      bool unicode);

// "W" / "-W" style cell over abstract element names (golden-table format).
std::string cell_name(const MultTable8Cell& cell);

// Fixed-width 9x9 grid (headers + cells).
std::string render_table_text(const MultTable8& table, const AutomorphismSeptet& septet, int dim,
                              bool unicode);

std::string render_table_csv(const MultTable8& table, const AutomorphismSeptet& septet, int dim);

}  // namespace cpt::cli
