#pragma once

#include "finik/surgery.hpp"

#include <string>
#include <vector>

namespace finik {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Independent brute-force evaluation of the contraction bracket: direct
// enumeration of all leg pairings with naive chain-following, written
// separately from contract() so the two implementations cross-check.
DiagramVector contract_oracle(const GraphCombination& g, const LinkingTable& lk, int n);

// The full anchor suite, one entry per criterion group; every check is an
// exact identity.
std::vector<CheckResult> acceptance_suite();

} // namespace finik
