#pragma once

#include <functional>

#include "pmd/enumerate.hpp"

namespace pmd {

// Per-cell outcome callback: family is 'y', 'f' or 't'.
using VerifyCallback = std::function<void(char family, long long n, long long k, bool ok)>;

// Cross-checks the closed-form/recursive counts against exhaustive
// enumeration for every n in [n_lo, n_hi] and every k. One shared budget
// guards the whole run. Returns true iff every cell matched. Propagates
// BudgetExceeded.
bool verify_range(int p, long long n_lo, long long n_hi, EnumerationBudget& budget,
                  const VerifyCallback& report);

}  // namespace pmd
