#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sortweigh/redistribution.hpp"

#include <algorithm>

using namespace sortweigh;

namespace {

std::vector<long long> values(std::initializer_list<long long> init) { return init; }

Solution make_solution(const PileProfile& prof, std::vector<long long> fakes) {
  Solution sol;
  sol.total = 0;
  for (int i = 0; i < prof.classes; ++i) sol.total += prof.parts[i] * fakes[i];
  sol.fakes = std::move(fakes);
  return sol;
}

}  // namespace

TEST_CASE("applicable steps and single moves") {
  const PileProfile two = profile(SortingSequence::parse("(0,1,1,1)"));
  const Solution wide = make_solution(two, {0, 9});
  CHECK(applicable_steps(two, wide) == std::vector<int>{1});

  const Solution step1 = redistribution_step(two, wide, 1);
  CHECK(step1.fakes == values({3, 8}));
  CHECK(step1.total == wide.total);
  const Solution step2 = redistribution_step(two, step1, 1);
  CHECK(step2.fakes == values({6, 7}));
  CHECK(applicable_steps(two, step2).empty());
  CHECK_THROWS_AS(redistribution_step(two, step2, 1), std::invalid_argument);
  CHECK_THROWS_AS(redistribution_step(two, wide, 2), std::invalid_argument);

  const PileProfile pair = profile(SortingSequence::parse("(0,1)"));
  const Solution spreadout = make_solution(pair, {0, 5});
  CHECK(monovariant(pair, spreadout) == 10);
  const Solution closer = redistribution_step(pair, spreadout, 1);
  CHECK(closer.fakes == values({1, 4}));
  CHECK(monovariant(pair, closer) == 9);
  CHECK(normalize(pair, spreadout).fakes == values({2, 3}));
}

TEST_CASE("normalization reaches the spread bound") {
  const PileProfile prof = profile(SortingSequence::parse("(0,1,1,1)"));
  const Solution settled = normalize(prof, make_solution(prof, {0, 9}));
  CHECK(settled.fakes == values({6, 7}));
  CHECK(settled.total == 27);

  // Every general solution of every small sequence normalizes into the
  // spread bound with the total preserved, stepping down the monovariant
  // by exactly p_i * p_{i+1} / c each move.
  for (int p = 2; p <= 6; ++p)
    for (std::uint64_t idx = 0; idx < count_sequences(p); ++idx) {
      const SortingSequence seq = SortingSequence::from_index(p, idx);
      const PileProfile pf = profile(seq);
      if (pf.classes < 2) continue;
      const long long spread_bound = (2 * pf.piles - pf.parts.front() - pf.parts.back()) / pf.gcd;
      for (long long f = 0; f <= 12 * pf.piles; ++f) {
        if (!has_general_solution(pf, f)) continue;
        const WeighingInstance roomy(seq, f + p);  // cap high enough to reach every general solution
        for (const Solution& sol : enumerate_solutions(roomy, f, false)) {
          Solution current = sol;
          long long steps = 0;
          const long long start_m = monovariant(pf, current);
          for (;;) {
            const auto applicable = applicable_steps(pf, current);
            if (applicable.empty()) break;
            const int i = applicable.front();
            const long long before = monovariant(pf, current);
            current = redistribution_step(pf, current, i);
            CHECK(monovariant(pf, current) ==
                  before - pf.parts[i - 1] * pf.parts[i] / pf.gcd);
            CHECK(std::is_sorted(current.fakes.begin(), current.fakes.end()));
            CHECK(current.fakes.front() >= 0);
            ++steps;
          }
          CHECK(current.total == sol.total);
          CHECK(current.fakes.back() - current.fakes.front() <= spread_bound);
          CHECK(steps <= start_m / pf.gcd);
          CHECK(current.fakes == normalize(pf, sol).fakes);
        }
      }
      // Far beyond the exhaustive window, the most stretched (lexicographically
      // smallest) general solution still settles inside the spread bound.
      for (long long f = 12 * pf.piles + 1; f <= 24 * pf.piles; ++f) {
        const auto seed = first_general_solution(pf, f);
        if (!seed) continue;
        const Solution settled2 = normalize(pf, *seed);
        CHECK(settled2.total == f);
        CHECK(settled2.fakes.back() - settled2.fakes.front() <= spread_bound);
      }
    }
}

TEST_CASE("lifting a general solution under the height bound") {
  const WeighingInstance inst(SortingSequence::parse("(0,1,1,1)"), 7);
  const auto lifted = lift_to_height_bound(inst, 27);
  REQUIRE(lifted.has_value());
  CHECK(lifted->fakes == values({6, 7}));

  const auto none = lift_to_height_bound(WeighingInstance(SortingSequence::parse("(0,0,1,2)"), 1), 3);
  CHECK_FALSE(none.has_value());

  const auto pair = lift_to_height_bound(WeighingInstance(SortingSequence::parse("(0,1)"), 5), 5);
  REQUIRE(pair.has_value());
  CHECK(pair->fakes == values({2, 3}));

  // Whenever the total sits in the theorem's window, the lift must land.
  for (int p = 2; p <= 6; ++p)
    for (std::uint64_t idx = 0; idx < count_sequences(p); ++idx) {
      const SortingSequence seq = SortingSequence::from_index(p, idx);
      const PileProfile pf = profile(seq);
      if (pf.classes < 2) continue;
      for (long long k = 1; k <= 8; ++k) {
        const WeighingInstance inst2(seq, k);
        const long long window_top = inst2.total_coins
            - (2 * pf.piles * pf.piles - pf.parts.front() * pf.piles - pf.parts.back() * pf.piles)
              / pf.gcd + pf.min_fakes;
        for (long long f = 0; f <= std::min(inst2.total_coins, window_top); ++f) {
          if (!has_general_solution(pf, f)) continue;
          const auto sol = lift_to_height_bound(inst2, f);
          REQUIRE(sol.has_value());
          CHECK(sol->fakes.back() <= k);
          CHECK(sol->total == f);
          CHECK(has_solution(inst2, f, true));
        }
      }
    }
}
