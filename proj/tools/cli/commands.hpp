#pragma once

#include <iosfwd>

#include "cli/options.hpp"

namespace cpt::cli {

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_rep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_mass(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_chain(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Dispatch on cfg.command; translates thrown errors into exit codes.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace cpt::cli
