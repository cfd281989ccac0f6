#pragma once
// Frobenius numbers of coefficient sets, the classical upper bounds, and the
// thresholds gamma/delta that locate the arithmetic-progression core of the
// possible and discreet fake counts.

#include <optional>
#include <utility>
#include <vector>

#include "sortweigh/sequence.hpp"

namespace sortweigh {

/// A strictly increasing set of positive coefficients.  The least value
/// representable in each residue class mod the smallest coefficient is
/// precomputed on construction, which makes representability queries cheap
/// and the instance safe to share across threads.
class CoefficientSet {
 public:
  explicit CoefficientSet(std::vector<long long> coeffs);

  const std::vector<long long>& coeffs() const { return coeffs_; }
  long long gcd() const { return gcd_; }

  /// True when n is a non-negative integer combination of the coefficients.
  bool is_representable(long long n) const;

  /// Least representable value congruent to each residue mod coeffs[0];
  /// unreachable residues (possible only when gcd > 1) hold LLONG_MAX.
  const std::vector<long long>& least_by_residue() const { return least_by_residue_; }

 private:
  std::vector<long long> coeffs_;
  long long gcd_ = 0;
  std::vector<long long> least_by_residue_;
};

/// Largest integer with no representation, or -1 when every non-negative
/// integer is representable.  Throws std::domain_error unless gcd == 1.
long long frobenius_number(const CoefficientSet& set);

/// The Frobenius number next to the classical upper bounds.  The bounds
/// assume an independent system: no coefficient representable by the
/// others (a redundant coefficient inflates r and can push the Erdos-Graham
/// and Selmer formulas below g).  The formula values are reported verbatim
/// either way.
struct FrobeniusResult {
  long long number = 0;        ///< g(a_1,...,a_r)
  long long schur = 0;         ///< (a_1 - 1)(a_r - 1) - 1
  long long erdos_graham = 0;  ///< 2 a_{r-1} floor(a_r / r) - a_r
  long long selmer = 0;        ///< 2 a_r floor(a_1 / r) - a_1
};

FrobeniusResult frobenius_bounds(const CoefficientSet& set);

/// gamma:  largest multiple of c with no general solution (all larger
///         multiples have one); computed as c * g(a_1/c,...,a_r/c) + F_min.
/// delta:  gamma + p, the analogous threshold for the discreet values.
/// The primed versions apply to the reversed sequence.
struct Thresholds {
  long long gamma = 0;
  long long gamma_prime = 0;
  long long delta = 0;
  long long delta_prime = 0;
};

/// Throws std::domain_error for single-class sequences, where every pile
/// holds the same count and no threshold structure exists.
Thresholds thresholds(const SortingSequence& s);

/// Least k at which the possible-range theorem applies:
/// k >= (4p - 2 p_1 - 2 p_r) / c + 1 - r.
long long range_threshold(const PileProfile& prof);

/// Least k at which the discreet-range theorem applies; one extra pair of
/// coins of slack beyond range_threshold.
long long discreet_range_threshold(const PileProfile& prof);

/// Open interval (gamma, pk - gamma') within which every multiple of c is a
/// possible fake count; absent when k is below range_threshold.
std::optional<std::pair<long long, long long>> predicted_range(const WeighingInstance& inst);

/// Open interval (delta, pk - delta') within which every multiple of c is a
/// discreet fake count; absent when k is below discreet_range_threshold.
std::optional<std::pair<long long, long long>> predicted_discreet_range(const WeighingInstance& inst);

}  // namespace sortweigh
