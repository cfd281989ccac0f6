#pragma once
// Exact enumeration of the fake-coin distributions compatible with a sorting
// outcome, the discreetness decision, and the change of variables that turns
// height-free enumeration into a coefficient representability question.

#include <optional>
#include <utility>
#include <vector>

#include "sortweigh/sequence.hpp"

namespace sortweigh {

/// Per-class fake counts f_1 < ... < f_r together with the weighted total
/// sum p_i * f_i they account for.
struct Solution {
  std::vector<long long> fakes;
  long long total = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Image of a solution under the change of variables: the coefficients are
/// the suffix sums of the parts and the target is total - min_fakes.
struct XSolution {
  std::vector<long long> xs;      ///< x_1..x_r, all non-negative
  std::vector<long long> coeffs;  ///< a_1 < ... < a_r, suffix sums of parts
  long long target = 0;           ///< n = total - min_fakes
};

/// All solutions with the given total in lexicographic order.  With the
/// height bound the largest class is additionally capped at k fakes per
/// pile.  Throws std::out_of_range when fakes lies outside [0, p*k].
std::vector<Solution> enumerate_solutions(const WeighingInstance& inst,
                                          long long fakes, bool height_bounded);

/// Existence-only variant; total outside [0, p*k] simply has no solution.
bool has_solution(const WeighingInstance& inst, long long fakes, bool height_bounded);

/// Existence of a general solution: no height bound, so k plays no role.
bool has_general_solution(const PileProfile& prof, long long fakes);

/// Lexicographically smallest general solution with the given total.
std::optional<Solution> first_general_solution(const PileProfile& prof, long long fakes);

/// Every total in [0, p*k] admitting a height-bounded solution, ascending.
std::vector<long long> possible_fakes(const WeighingInstance& inst);

/// True exactly when totals fakes-p and fakes are both achievable with the
/// same sequence on piles of k-1 coins: the observer who knows f fake coins
/// are in play then learns nothing about any single coin.
bool is_discreet(const WeighingInstance& inst, long long fakes);

/// The discreet subset of possible_fakes, ascending.
std::vector<long long> discreet_fakes(const WeighingInstance& inst);

/// Least and greatest achievable totals, or nothing when k < r-1 and the
/// outcome cannot occur at all.
std::optional<std::pair<long long, long long>> min_max_fakes(const WeighingInstance& inst);

/// Coefficients a_i = p_r + p_{r-1} + ... (suffix sums of the parts read
/// from the last class); strictly increasing with a_r = p.
std::vector<long long> suffix_coefficients(const PileProfile& prof);

/// Change of variables x_r = f_1, x_i = f_{r-i+1} - f_{r-i} - 1.  The
/// height bound f_r <= k corresponds to sum x_i <= k - r + 1.
XSolution to_x_space(const PileProfile& prof, const Solution& sol);

/// Inverse map: f_i = i - 1 + x_{r-i+1} + ... + x_r.
Solution from_x_space(const PileProfile& prof, const XSolution& x);

}  // namespace sortweigh
