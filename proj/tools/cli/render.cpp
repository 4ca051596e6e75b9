#include "cli/render.hpp"

#include <iomanip>
#include <sstream>

namespace cpt::cli {

namespace {

const char* kSubscripts[10] = {"₀", "₁", "₂", "₃", "₄",
                               "₅", "₆", "₇", "₈", "₉"};

std::string subscript_number(int n) {
  std::string digits = std::to_string(n);
  std::string out;
  for (char c : digits) out += kSubscripts[c - '0'];
  return out;
}

}  // namespace

std::string monomial_label(const std::vector<int>& indices, bool unicode) {
  if (indices.empty()) return "1";
  bool wide = indices.back() > 9;
  std::string out;
  if (unicode) {
    out = "ℰ";  // script capital E
    bool first = true;
    for (int i : indices) {
      if (!first && wide) out += "ˌ";  // low separator between wide indices
      out += subscript_number(i);
      first = false;
    }
    return out;
  }
  out = wide ? "E_{" : "E_";
  bool first = true;
  for (int i : indices) {
    if (!first && wide) out += ",";
    out += std::to_string(i);
    first = false;
  }
  if (wide) out += "}";
  return out;
}

std::string cell_text(const MultTable8Cell& cell, const AutomorphismSeptet& septet, int dim,
                      bool unicode) {
  std::string body;
  if (cell.label == 0) {
    body = unicode ? "1" + subscript_number(dim) : "1_" + std::to_string(dim);
  } else {
    body = monomial_label(septet.ordered()[cell.label - 1]->indices(), unicode);
  }
  return (cell.sign < 0 ? "-" : "") + body;
}

std::string cell_name(const MultTable8Cell& cell) {
  return (cell.sign < 0 ? std::string("-") : std::string()) + element_names()[cell.label];
}

namespace {

std::vector<std::string> header_labels(const AutomorphismSeptet& septet, int dim, bool unicode) {
  std::vector<std::string> hdr;
  hdr.push_back(unicode ? "1" + subscript_number(dim) : "1_" + std::to_string(dim));
  for (const SignedMonomial* m : septet.ordered())
    hdr.push_back(monomial_label(m->indices(), unicode));
  return hdr;
}

}  // namespace

namespace {

// Display columns, not bytes: count UTF-8 lead bytes (the subscript glyphs
// are all single-width).
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

}  // namespace

std::string render_table_text(const MultTable8& table, const AutomorphismSeptet& septet, int dim,
                              bool unicode) {
  auto hdr = header_labels(septet, dim, unicode);
  std::size_t width = 0;
  std::vector<std::vector<std::string>> cells(8, std::vector<std::string>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      cells[i][j] = cell_text(table.cells[i][j], septet, dim, unicode);
      width = std::max(width, display_width(cells[i][j]));
    }
  for (const auto& h : hdr) width = std::max(width, display_width(h));
  std::ostringstream os;
  auto pad = [&](const std::string& s) {
    os << s << std::string(width + 2 - display_width(s), ' ');
  };
  pad("");
  for (const auto& h : hdr) pad(h);
  os << "\n";
  for (int i = 0; i < 8; ++i) {
    pad(hdr[i]);
    for (int j = 0; j < 8; ++j) pad(cells[i][j]);
    os << "\n";
  }
  return os.str();
}

std::string render_table_csv(const MultTable8& table, const AutomorphismSeptet& septet, int dim) {
  auto hdr = header_labels(septet, dim, false);
  std::ostringstream os;
  os << "row";
  for (const auto& h : hdr) os << "," << h;
  os << "\n";
  for (int i = 0; i < 8; ++i) {
    os << hdr[i];
    for (int j = 0; j < 8; ++j) os << "," << cell_text(table.cells[i][j], septet, dim, false);
    os << "\n";
  }
  return os.str();
}

}  // namespace cpt::cli
