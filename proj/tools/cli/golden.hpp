#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cpt::cli {

// One annotated print defect in a reference table: the transcription keeps
// the printed value, the engine must reproduce the derived one.
struct GoldenErratum {
  int row = 0;
  int col = 0;
  std::string printed;
  std::string derived;
  std::string note;
};

struct GoldenTable {
  std::string name;
  std::vector<std::vector<std::string>> cells;  // signed element names
  std::vector<GoldenErratum> errata;
};

struct GoldenVariant {
  std::string element;
  std::vector<int> printed;
  std::vector<int> derived;
  std::string note;
};

struct GoldenField {
  std::string field;
  int m = 0;
  std::string table;
  std::map<std::string, std::vector<int>> septet;
  std::vector<int> sign_vector;
  std::string group_type;
  std::vector<GoldenVariant> text_variants;
};

struct GoldenSet {
  GoldenTable tab1;
  std::map<std::string, GoldenTable> tables;  // tab4, tab5, tab6
  std::vector<GoldenField> fields;
};

// Raw JSON of a compiled-in reference file ("tab1", "tab4", ..., "septets").
const std::string& embedded_golden(const std::string& name);

// Loads the reference set from a directory of <name>.json files, or from
// the compiled-in copies when dir is empty.
GoldenSet load_golden(const std::string& dir);

}  // namespace cpt::cli
