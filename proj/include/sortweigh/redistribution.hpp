#pragma once
// Redistribution moves: trade fakes between adjacent classes to squeeze a
// general solution under the height bound without changing its total.

#include <optional>
#include <vector>

#include "sortweigh/sequence.hpp"
#include "sortweigh/solver.hpp"

namespace sortweigh {

/// Class indices i (1-based, i < r) where a step applies: the gap to the
/// next class exceeds (p_i + p_{i+1}) / c.
std::vector<int> applicable_steps(const PileProfile& prof, const Solution& sol);

/// One move at class i: f_i grows by p_{i+1}/c, f_{i+1} shrinks by p_i/c.
/// The total is unchanged and the result is again a solution.  Throws
/// std::invalid_argument when the step is not applicable.
Solution redistribution_step(const PileProfile& prof, const Solution& sol, int i);

/// M = sum i * p_i * f_i.  Every applicable step at class i lowers M by
/// exactly p_i * p_{i+1} / c, so repeated stepping terminates.
long long monovariant(const PileProfile& prof, const Solution& sol);

/// Applies the lowest applicable step until none applies.  The fixpoint has
/// spread f_r - f_1 <= (2p - p_1 - p_r) / c.
Solution normalize(const PileProfile& prof, const Solution& sol);

/// Lexicographically smallest general solution for the total, normalized;
/// produced only when the fixpoint obeys the height bound f_r <= k.
std::optional<Solution> lift_to_height_bound(const WeighingInstance& inst, long long fakes);

}  // namespace sortweigh
