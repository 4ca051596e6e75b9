#include "cli/golden.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cpt/errors.hpp"

namespace cpt::cli {

using nlohmann::json;

namespace {

json parse_golden(const std::string& name, const std::string& dir) {
  std::string text;
  if (dir.empty()) {
    text = embedded_golden(name);
  } else {
    std::ifstream in(dir + "/" + name + ".json");
    if (!in) throw DomainError("cannot open reference file " + dir + "/" + name + ".json");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return json::parse(text);
}

GoldenTable table_from_json(const json& j) {
  GoldenTable t;
  t.name = j.at("name").get<std::string>();
  for (const auto& row : j.at("cells")) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(c.get<std::string>());
    if (cells.size() != 8) throw DomainError("reference table row is not 8 cells wide");
    t.cells.push_back(std::move(cells));
  }
  if (t.cells.size() != 8) throw DomainError("reference table is not 8 rows tall");
  if (j.contains("errata")) {
    for (const auto& e : j.at("errata")) {
      GoldenErratum g;
      g.row = e.at("row").get<int>();
      g.col = e.at("col").get<int>();
      g.printed = e.at("printed").get<std::string>();
      g.derived = e.at("derived").get<std::string>();
      g.note = e.value("note", "");
      t.errata.push_back(std::move(g));
    }
  }
  return t;
}

}  // namespace

GoldenSet load_golden(const std::string& dir) {
  GoldenSet set;
  set.tab1 = table_from_json(parse_golden("tab1", dir));
  for (const char* name : {"tab4", "tab5", "tab6"})
    set.tables.emplace(name, table_from_json(parse_golden(name, dir)));
  json s = parse_golden("septets", dir);
  for (const auto& f : s.at("fields")) {
    GoldenField g;
    g.field = f.at("field").get<std::string>();
    g.m = f.at("m").get<int>();
    g.table = f.at("table").get<std::string>();
    for (const auto& [key, idx] : f.at("septet").items())
      g.septet[key] = idx.get<std::vector<int>>();
    g.sign_vector = f.at("sign_vector").get<std::vector<int>>();
    g.group_type = f.at("group_type").get<std::string>();
    for (const auto& v : f.value("text_variants", json::array())) {
      GoldenVariant gv;
      gv.element = v.at("element").get<std::string>();
      gv.printed = v.at("printed").get<std::vector<int>>();
      gv.derived = v.at("derived").get<std::vector<int>>();
      gv.note = v.value("note", "");
      g.text_variants.push_back(std::move(gv));
    }
    set.fields.push_back(std::move(g));
  }
  return set;
}

}  // namespace cpt::cli
