#ifndef MARGINCOUNT_ORACLE_HPP
#define MARGINCOUNT_ORACLE_HPP

#include <vector>

#include "margincount/enumerate.hpp"
#include "margincount/sample.hpp"

namespace margincount {

/* Brute-force ground truth for small instances. Deliberately a different
 * algorithmic skeleton (per-cell backtracking with remaining-sum checks)
 * sharing nothing with the recursion beyond the core types. */

// Guard: m*n <= 20 and max margin <= 4; larger instances are refused.
BigCount brute_count(const MarginSpec& spec, Mode mode);

// The complete list of matrices (refused when the count exceeds 1e5).
std::vector<Matrix> brute_enumerate(const MarginSpec& spec, Mode mode);

}  // namespace margincount

#endif
