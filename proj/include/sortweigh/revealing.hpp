#pragma once
// Revealing factor of an outcome: how much the sorting result narrows down
// the set of coin-level possibilities, as an exact rational.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "sortweigh/sequence.hpp"

namespace sortweigh {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; 0 outside 0 <= r <= n.
BigInt binomial(long long n, long long r);

/// Number of coin-level configurations consistent with the outcome and the
/// total: sum over height-bounded solutions of prod C(k, f_i)^(p_i).  Zero
/// when the total is not a possible fake count.
BigInt new_possibility_count(const WeighingInstance& inst, long long fakes);

/// old_count  C(pk, f): possibilities knowing only the fake total.
/// new_count  possibilities after the sort is observed.
/// ratio      old/new in lowest terms; approx is a 6-significant-digit
///            decimal rendering for display only.
struct RevealingFactor {
  BigInt old_count;
  BigInt new_count;
  BigRational ratio;
  std::string approx;
};

/// Throws std::domain_error ("zero new possibilities") when no coin-level
/// configuration matches, i.e. the total is not a possible fake count.
RevealingFactor revealing_factor(const WeighingInstance& inst, long long fakes);

/// Ground truth by walking all 2^(pk) fake/real assignments and matching the
/// per-pile counts against the sequence entry by entry.  Guarded at pk <= 24.
BigInt coin_level_count(const WeighingInstance& inst, long long fakes);

/// Same sweep bucketed by total, one pass for a whole instance.
std::vector<BigInt> coin_level_counts(const WeighingInstance& inst);

/// Decimal rendering of a rational to the given significant digits.
std::string approx_decimal(const BigRational& value, int significant);

}  // namespace sortweigh
