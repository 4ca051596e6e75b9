#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

using cpt::cli::RunConfig;

void add_format_flags(CLI::App* cmd, RunConfig& cfg, std::string& format) {
  cmd->add_option("--format", format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->default_val("text");
  cmd->add_flag("--unicode", cfg.unicode,
                "Render monomials with script-E subscripts instead of E_ ascii");
}

struct FieldArgs {
  std::string field;
  int k = -1, r = -1;
};

void add_field_flags(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--field", args.field,
                  "Field spec: l=1/2 | (3/2,1)+(1,3/2) | k=3,r=2");
  cmd->add_option("--k", args.k, "Tensor field: count of undotted factors");
  cmd->add_option("--r", args.r, "Tensor field: count of dotted factors");
}

void resolve_field(const FieldArgs& args, RunConfig& cfg) {
  if (!args.field.empty()) {
    cfg.field = cpt::FieldSpec::parse(args.field);
  } else if (args.k >= 0 || args.r >= 0) {
    if (args.k < 0 || args.r < 0)
      throw cpt::DomainError("--k and --r must be given together");
    cfg.field = cpt::FieldSpec::tensor(args.k, args.r);
  }
}

cpt::cli::OutputFormat parse_format(const std::string& s) {
  if (s == "json") return cpt::cli::OutputFormat::json;
  if (s == "csv") return cpt::cli::OutputFormat::csv;
  return cpt::cli::OutputFormat::text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cpt: exact CPT symmetry groups of arbitrary-spin fields"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* cap = std::getenv("CPT_DIM_CAP")) {
    cfg.dim_cap = std::atoi(cap);
    if (cfg.dim_cap < 2) {
      std::cerr << "error: CPT_DIM_CAP must be at least 2\n";
      return cpt::cli::kExitUsage;
    }
  }

  std::string format = "text";
  FieldArgs field_args;
  std::string basis = "reference", pauli = "paper";
  std::string l0, l1, l, ldot, kappa = "1";
  std::vector<std::string> mass_l;

  CLI::App* classify = app.add_subcommand("classify", "Solve the septet and classify the group");
  add_field_flags(classify, field_args);
  add_format_flags(classify, cfg, format);
  classify->add_option("--basis", basis, "Generator basis: reference (published tables) or strict")
      ->check(CLI::IsMember({"reference", "strict"}));
  classify->add_option("--pauli", pauli, "Pauli convention: paper (default) or standard")
      ->check(CLI::IsMember({"paper", "standard"}));

  CLI::App* table = app.add_subcommand("table", "Emit the 8x8 signed multiplication table");
  add_field_flags(table, field_args);
  add_format_flags(table, cfg, format);
  table->add_option("--basis", basis)->check(CLI::IsMember({"reference", "strict"}));
  table->add_option("--pauli", pauli)->check(CLI::IsMember({"paper", "standard"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "Regenerate the reference tables from first principles and diff them");
  verify->add_option("--golden-dir", cfg.golden_dir,
                     "Directory of reference *.json files (default: embedded copies)");
  verify->add_flag("--parallel", cfg.parallel, "Verify the worked fields concurrently");

  CLI::App* rep = app.add_subcommand("rep", "Build Lorentz representation operators exactly");
  rep->add_option("--l0", l0, "Weight l0 (with --l1)");
  rep->add_option("--l1", l1, "Weight l1 (with --l0)");
  rep->add_option("--l", l, "Ladder weight l (with --ldot)");
  rep->add_option("--ldot", ldot, "Ladder weight l-dot (with --l)");
  add_format_flags(rep, cfg, format);

  CLI::App* mass = app.add_subcommand("mass", "Evaluate the mass spectrum formulas");
  mass->add_option("--l", mass_l, "Spin value(s) for the 2k/(2l+1) formula")->expected(-1);
  mass->add_option("--kappa", kappa, "Mass constant (rational)");
  add_field_flags(mass, field_args);
  add_format_flags(mass, cfg, format);

  CLI::App* chain = app.add_subcommand("chain", "Enumerate a fixed-spin row of fields");
  chain->add_option("--scheme", cfg.scheme, "bose or fermi")
      ->check(CLI::IsMember({"bose", "fermi"}))
      ->required();
  chain->add_option("--depth", cfg.depth, "Number of fields to list")->required();
  chain->add_option("--kappa", kappa, "Mass constant (rational)");
  add_format_flags(chain, cfg, format);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.format = parse_format(format);
    cfg.strict_basis = basis == "strict";
    cfg.standard_pauli = pauli == "standard";
    resolve_field(field_args, cfg);
    if (!l0.empty()) cfg.l0 = cpt::parse_rational(l0);
    if (!l1.empty()) cfg.l1 = cpt::parse_rational(l1);
    if (!l.empty()) cfg.l = cpt::parse_rational(l);
    if (!ldot.empty()) cfg.ldot = cpt::parse_rational(ldot);
    cfg.kappa = cpt::parse_rational(kappa);
    for (const std::string& s : mass_l) cfg.mass_l.push_back(cpt::parse_rational(s));
    for (CLI::App* sub : {classify, table, verify, rep, mass, chain}) {
      if (sub->parsed()) cfg.command = sub->get_name();
    }
  } catch (const cpt::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cpt::cli::kExitUsage;
  }

  return cpt::cli::run_command(cfg, std::cout, std::cerr);
}
