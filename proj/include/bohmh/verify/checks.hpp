#pragma once

#include "bohmh/constants.hpp"

#include <string>
#include <vector>

namespace bohmh::verify {

struct CheckResult {
    std::string name;
    bool passed{false};
    std::string detail;
};

/// Quantitative acceptance table, one result per criterion, in order.
std::vector<CheckResult> acceptance_checks(const PhysConsts& c);

/// Module invariants (property tests driven by a fixed seed).
std::vector<CheckResult> invariant_checks(const PhysConsts& c);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace bohmh::verify
