#include "sortweigh/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sortweigh/frobenius.hpp"
#include "sortweigh/solver.hpp"

namespace sortweigh {

SortingSequence classify(const std::vector<long long>& counts) {
  if (counts.empty()) throw std::invalid_argument("cannot classify an empty configuration");
  for (long long c : counts)
    if (c < 0) throw std::invalid_argument("pile counts must be non-negative");
  std::vector<long long> sorted = counts;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> entries(sorted.size(), 0);
  for (std::size_t j = 1; j < sorted.size(); ++j)
    entries[j] = entries[j - 1] + (sorted[j] > sorted[j - 1] ? 1 : 0);
  return SortingSequence(std::move(entries));
}

namespace {

long long state_count(long long k, int piles, long long cap) {
  long long states = 1;
  for (int i = 0; i < piles; ++i) {
    if (states > cap / (k + 1)) return cap + 1;
    states *= k + 1;
  }
  return states;
}

// classify(g) == entries, evaluated on an already sorted copy without
// building a SortingSequence per state.
bool sorted_matches(const std::vector<long long>& sorted, const std::vector<int>& entries) {
  int rank = 0;
  for (std::size_t j = 1; j < sorted.size(); ++j) {
    if (sorted[j] > sorted[j - 1]) ++rank;
    if (entries[j] != rank) return false;
  }
  return true;
}

// Walk every configuration in [0,k]^p; hand each matching one to the visitor.
template <typename Visit>
void for_each_matching(const WeighingInstance& inst, long long max_states, Visit visit) {
  const int p = inst.sequence.pile_count();
  const long long k = inst.coins_per_pile;
  if (state_count(k, p, max_states) > max_states)
    throw std::length_error("configuration space exceeds the state guard");
  const auto& entries = inst.sequence.entries();
  std::vector<long long> g(p, 0);
  std::vector<long long> sorted(p);
  for (;;) {
    sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted_matches(sorted, entries)) {
      const long long total = std::accumulate(g.begin(), g.end(), 0LL);
      visit(g, total);
    }
    int pos = 0;
    while (pos < p && ++g[pos] > k) g[pos++] = 0;
    if (pos == p) break;
  }
}

}  // namespace

std::vector<long long> oracle_possible_fakes(const WeighingInstance& inst, long long max_states) {
  std::vector<char> seen(inst.total_coins + 1, 0);
  for_each_matching(inst, max_states,
                    [&](const std::vector<long long>&, long long total) { seen[total] = 1; });
  std::vector<long long> out;
  for (long long f = 0; f <= inst.total_coins; ++f)
    if (seen[f]) out.push_back(f);
  return out;
}

bool oracle_is_discreet(const WeighingInstance& inst, long long fakes, long long max_states) {
  bool fake_everywhere = false;
  bool real_everywhere = false;
  const long long k = inst.coins_per_pile;
  for_each_matching(inst, max_states, [&](const std::vector<long long>& g, long long total) {
    if (total != fakes) return;
    fake_everywhere |= std::all_of(g.begin(), g.end(), [](long long c) { return c >= 1; });
    real_everywhere |= std::all_of(g.begin(), g.end(), [&](long long c) { return c <= k - 1; });
  });
  return fake_everywhere && real_everywhere;
}

OracleScan oracle_scan(const WeighingInstance& inst, long long max_states) {
  OracleScan scan;
  scan.possible.assign(inst.total_coins + 1, 0);
  scan.fake_everywhere.assign(inst.total_coins + 1, 0);
  scan.real_everywhere.assign(inst.total_coins + 1, 0);
  const long long k = inst.coins_per_pile;
  for_each_matching(inst, max_states, [&](const std::vector<long long>& g, long long total) {
    scan.possible[total] = 1;
    if (std::all_of(g.begin(), g.end(), [](long long c) { return c >= 1; }))
      scan.fake_everywhere[total] = 1;
    if (std::all_of(g.begin(), g.end(), [&](long long c) { return c <= k - 1; }))
      scan.real_everywhere[total] = 1;
  });
  return scan;
}

std::vector<char> oracle_bounded_totals(const PileProfile& prof, long long k) {
  std::vector<char> totals(prof.piles * k + 1, 0);
  const int r = prof.classes;
  if (k + 1 < r) return totals;  // no strictly increasing r-tuple fits in [0,k]
  std::vector<long long> v(r);
  std::iota(v.begin(), v.end(), 0);
  for (;;) {
    long long sum = 0;
    for (int i = 0; i < r; ++i) sum += prof.parts[i] * v[i];
    totals[sum] = 1;
    int i = r - 1;
    while (i >= 0 && v[i] == k - (r - 1 - i)) --i;
    if (i < 0) break;
    ++v[i];
    for (int j = i + 1; j < r; ++j) v[j] = v[j - 1] + 1;
  }
  return totals;
}

bool oracle_has_bounded_solution(const PileProfile& prof, long long k, long long fakes) {
  if (fakes < 0 || fakes > prof.piles * k) return false;
  return oracle_bounded_totals(prof, k)[fakes] != 0;
}

std::vector<ExceptionRow> oracle_exceptions(int max_piles) {
  if (max_piles < 1 || max_piles > 8)
    throw std::length_error("exception sweep is capped at 8 piles");
  std::vector<ExceptionRow> rows;
  for (int p = 1; p <= max_piles; ++p) {
    for (std::uint64_t index = 0; index < count_sequences(p); ++index) {
      const SortingSequence seq = SortingSequence::from_index(p, index);
      const PileProfile prof = profile(seq);
      if (prof.classes < 2) continue;
      const PileProfile rev_prof = profile(seq.reversed());
      const long long bound = range_threshold(prof);
      for (long long k = 1; k < bound; ++k) {
        const std::vector<char> achievable = oracle_bounded_totals(prof, k);
        std::vector<long long> bad;
        for (long long f = 0; f <= p * k; ++f) {
          if (achievable[f]) continue;
          if (has_general_solution(prof, f) && has_general_solution(rev_prof, p * k - f))
            bad.push_back(f);
        }
        if (!bad.empty())
          rows.push_back(ExceptionRow{p, k, seq, std::move(bad)});
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ExceptionRow& a, const ExceptionRow& b) {
    if (a.piles != b.piles) return a.piles < b.piles;
    if (a.coins_per_pile != b.coins_per_pile) return a.coins_per_pile < b.coins_per_pile;
    return a.sequence.index() < b.sequence.index();
  });
  return rows;
}

}  // namespace sortweigh
