#pragma once

// Command execution with deterministic JSON reports. Every number in a report
// sits in an object {"value": ..., "provenance": ...} where provenance is one
// of exact, corpus-lower-bound, cutoff-inconclusive or config.

#include <string>
#include <vector>

#include "itdim/session.hpp"

namespace itdim {

struct CommandRequest {
    std::string command;
    std::string algebra_text;
    std::string module_expr;  ///< --module
    std::string d_gens;       ///< --d-gens; empty means add Λ, "all" means mod Λ
    std::string v_expr;       ///< --v; empty means 0
    int n = 0;
    SessionConfig config;
};

struct CommandResult {
    int exit_code = 0;  ///< 0 exact or certified, 2 inconclusive, 1 error or failed check
    std::string json;
};

const std::vector<std::string>& command_names();

CommandResult run_command(const CommandRequest& req);

}  // namespace itdim
