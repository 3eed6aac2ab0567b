#pragma once

#include <string>
#include <vector>

#include "ladderkit/systems.hpp"

namespace ladderkit {

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail;  // empty when ok
};

// Exact structural checks for one system: factorization and
// intertwining at every level, gauge solve, chain degeneracies, closed
// vs product normalizations, route agreement, eigenvalue equations,
// node counts and exact unit norms on a bounded grid.
std::vector<CheckResult> verify_system(SystemId id, long max_level);

// Parser goldens, renderer round-trips and macro consistency.
std::vector<CheckResult> verify_dsl(unsigned seed);

bool all_ok(const std::vector<CheckResult>& results);

}  // namespace ladderkit
