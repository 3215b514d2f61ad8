#pragma once

// The reproducibility catalog: named checks with their expected values,
// grouped by acceptance criterion, and the finite-ring corpus they run on.

#include "ringrank/finring.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ringrank {

struct CheckResult {
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct Check {
    std::string name;
    int criterion;     // 1..9
    std::string claim; // what is being reproduced
    std::string basis; // "theorem", "oracle" or "definition"
    std::function<CheckResult()> run;
};

std::vector<Check> catalog_checks();
std::string criterion_title(int criterion);

struct NamedRing {
    std::string name;
    FinRing ring;
};

/// Finite rings of size at most 512 used for the oracle and inequality suites.
std::vector<NamedRing> oracle_corpus();

} // namespace ringrank
