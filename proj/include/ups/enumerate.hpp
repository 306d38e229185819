#pragma once

#include <optional>
#include <vector>

#include "ups/pl_function.hpp"

namespace ups {

// All admissible Upsilon profiles for concordance genus gc (and fixed tau
// when given): symmetric, integer slopes bounded by gc, zero at zero,
// admissible slope-change locations. Sorted by (tau, breakpoints, slopes).
std::vector<PLFunction> enumerate_profiles(long long gc,
                                           std::optional<long long> tau = std::nullopt);

// Independent brute force over symmetric profiles with breakpoints on the
// grid {a/b : b <= denominator_bound}, filtered by validate_candidate.
// Must agree with enumerate_profiles(gc) as a set.
std::vector<PLFunction> oracle_enumerate(long long gc, long long denominator_bound);

}  // namespace ups
