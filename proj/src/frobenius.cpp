#include "sortweigh/frobenius.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "sortweigh/solver.hpp"

namespace sortweigh {

namespace {

constexpr long long kUnreachable = std::numeric_limits<long long>::max();

// Shortest-reach over residues mod the smallest coefficient: dist[v] is the
// least representable value congruent to v.  Standard Dijkstra on a graph
// whose edges add one coefficient at a time.
std::vector<long long> least_reachable(const std::vector<long long>& coeffs) {
  const long long base = coeffs.front();
  std::vector<long long> dist(base, kUnreachable);
  dist[0] = 0;
  using Node = std::pair<long long, long long>;  // (value, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    const auto [value, residue] = queue.top();
    queue.pop();
    if (value != dist[residue]) continue;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
      const long long next = value + coeffs[i];
      const long long next_residue = next % base;
      if (next < dist[next_residue]) {
        dist[next_residue] = next;
        queue.emplace(next, next_residue);
      }
    }
  }
  return dist;
}

}  // namespace

CoefficientSet::CoefficientSet(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("coefficient set must be non-empty");
  if (coeffs_.front() < 1) throw std::invalid_argument("coefficients must be positive");
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] <= coeffs_[i - 1])
      throw std::invalid_argument("coefficients must be strictly increasing");
  gcd_ = 0;
  for (long long a : coeffs_) gcd_ = std::gcd(gcd_, a);
  least_by_residue_ = least_reachable(coeffs_);
}

bool CoefficientSet::is_representable(long long n) const {
  if (n < 0) return false;
  const long long least = least_by_residue_[n % coeffs_.front()];
  return least != kUnreachable && least <= n;
}

long long frobenius_number(const CoefficientSet& set) {
  if (set.gcd() != 1)
    throw std::domain_error("Frobenius number is defined only for coprime coefficients");
  if (set.coeffs().front() == 1) return -1;
  long long worst = 0;
  for (long long least : set.least_by_residue()) {
    assert(least != kUnreachable);
    worst = std::max(worst, least);
  }
  return worst - set.coeffs().front();
}

FrobeniusResult frobenius_bounds(const CoefficientSet& set) {
  FrobeniusResult result;
  result.number = frobenius_number(set);
  const auto& a = set.coeffs();
  const long long r = static_cast<long long>(a.size());
  if (r == 1) {
    // The only coprime singleton is {1}; every bound degenerates with g.
    result.schur = result.erdos_graham = result.selmer = -1;
    return result;
  }
  result.schur = (a.front() - 1) * (a.back() - 1) - 1;
  result.erdos_graham = 2 * a[r - 2] * (a.back() / r) - a.back();
  result.selmer = 2 * a.back() * (a.front() / r) - a.front();
  return result;
}

namespace {

// gamma of a single orientation: reduce the suffix coefficients by c, take
// the Frobenius number there, and translate back by the least general total.
long long gamma_of(const SortingSequence& s) {
  const PileProfile prof = profile(s);
  std::vector<long long> reduced = suffix_coefficients(prof);
  for (long long& a : reduced) a /= prof.gcd;
  const CoefficientSet set(std::move(reduced));
  assert(set.gcd() == 1);
  return prof.gcd * frobenius_number(set) + prof.min_fakes;
}

}  // namespace

Thresholds thresholds(const SortingSequence& s) {
  const PileProfile prof = profile(s);
  if (prof.classes < 2)
    throw std::domain_error("thresholds exist only for sequences with at least two classes");
  Thresholds t;
  t.gamma = gamma_of(s);
  t.gamma_prime = gamma_of(s.reversed());
  t.delta = t.gamma + prof.piles;
  t.delta_prime = t.gamma_prime + prof.piles;
  return t;
}

long long range_threshold(const PileProfile& prof) {
  return (4 * prof.piles - 2 * prof.parts.front() - 2 * prof.parts.back()) / prof.gcd
         + 1 - prof.classes;
}

long long discreet_range_threshold(const PileProfile& prof) {
  return range_threshold(prof) + 2;
}

std::optional<std::pair<long long, long long>> predicted_range(const WeighingInstance& inst) {
  const PileProfile prof = profile(inst.sequence);
  if (prof.classes < 2)
    throw std::domain_error("predicted range exists only for sequences with at least two classes");
  if (inst.coins_per_pile < range_threshold(prof)) return std::nullopt;
  const Thresholds t = thresholds(inst.sequence);
  return std::make_pair(t.gamma, inst.total_coins - t.gamma_prime);
}

std::optional<std::pair<long long, long long>> predicted_discreet_range(const WeighingInstance& inst) {
  const PileProfile prof = profile(inst.sequence);
  if (prof.classes < 2)
    throw std::domain_error("predicted range exists only for sequences with at least two classes");
  if (inst.coins_per_pile < discreet_range_threshold(prof)) return std::nullopt;
  const Thresholds t = thresholds(inst.sequence);
  return std::make_pair(t.delta, inst.total_coins - t.delta_prime);
}

}  // namespace sortweigh
