#pragma once

// Self-check suites behind the CLI's verify subcommand.  Each suite runs the
// invariant battery of one module, bounded by max_degree; checks never throw
// (an exception inside a check is reported as its failure).  All randomness
// is seeded, so output is stable across runs.

#include <string>
#include <vector>

namespace nhopf {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

const std::vector<std::string>& verify_suites();

// suite is one of verify_suites() or "all"
std::vector<CheckResult> run_verify(const std::string& suite, int max_degree);

}  // namespace nhopf
