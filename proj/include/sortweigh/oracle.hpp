#pragma once
// Brute-force ground truth: enumerate raw pile configurations (and, for the
// exception sweep, raw class-count combinations) with no number theory at
// all, so the solver has something independent to be checked against.

#include <vector>

#include "sortweigh/sequence.hpp"

namespace sortweigh {

/// Guard on the configuration-space size (k+1)^p an oracle call may visit.
inline constexpr long long kDefaultMaxStates = 1'000'000'000;

/// Sort the per-pile fake counts ascending and rank them: equal counts share
/// a rank, each strict increase adds one.
SortingSequence classify(const std::vector<long long>& counts);

/// Totals sum(g) over every configuration g in [0,k]^p with classify(g)
/// equal to the instance's sequence, ascending.  Throws std::length_error
/// when (k+1)^p exceeds max_states.
std::vector<long long> oracle_possible_fakes(const WeighingInstance& inst,
                                             long long max_states = kDefaultMaxStates);

/// True when matching configurations with the given total exist both with a
/// fake in every pile and with a real coin in every pile.
bool oracle_is_discreet(const WeighingInstance& inst, long long fakes,
                        long long max_states = kDefaultMaxStates);

/// One full configuration sweep, bucketed by total: cheaper than separate
/// per-total oracle calls when a whole instance is being cross-checked.
struct OracleScan {
  std::vector<char> possible;         ///< a matching configuration exists
  std::vector<char> fake_everywhere;  ///< ... with every pile count >= 1
  std::vector<char> real_everywhere;  ///< ... with every pile count <= k-1
};

OracleScan oracle_scan(const WeighingInstance& inst,
                       long long max_states = kDefaultMaxStates);

/// Height-bounded achievability decided by walking every strictly increasing
/// class-count tuple in [0,k]^r directly (no descent, no pruning).
bool oracle_has_bounded_solution(const PileProfile& prof, long long k, long long fakes);

/// Flags [0..p*k] of totals achievable under the height bound, from the same
/// exhaustive tuple walk.
std::vector<char> oracle_bounded_totals(const PileProfile& prof, long long k);

/// An instance below the possible-range theorem's pile size with general
/// solutions on both ends and no height-bounded one.
struct ExceptionRow {
  int piles = 0;
  long long coins_per_pile = 0;
  SortingSequence sequence;
  std::vector<long long> fakes;
};

/// All exception rows with at most max_piles piles, ordered by pile count,
/// then pile size, then sequence.  Capped at max_piles <= 8.
std::vector<ExceptionRow> oracle_exceptions(int max_piles);

}  // namespace sortweigh
