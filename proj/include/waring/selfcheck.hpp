#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace waring {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SelfCheckOptions {
    // Path to the command line tool, used by the criterion that exercises
    // exit codes end to end. Empty fails that criterion explicitly.
    std::string cli_path;
};

// Runs the full acceptance battery with pinned trial counts and exact
// (zero-tolerance) comparisons throughout.
std::vector<CriterionResult> run_selfcheck(const SelfCheckOptions& options);

// One line per criterion; returns 0 when everything passed, 1 otherwise.
int print_selfcheck(const std::vector<CriterionResult>& results, std::ostream& os);

} // namespace waring
