#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sortweigh/solver.hpp"

#include <algorithm>
#include <set>

#include "sortweigh/oracle.hpp"

using namespace sortweigh;

namespace {

std::vector<long long> values(std::initializer_list<long long> init) { return init; }

}  // namespace

TEST_CASE("solution enumeration") {
  const WeighingInstance inst(SortingSequence::parse("(0,0,1,2)"), 5);
  const auto sols = enumerate_solutions(inst, 11, true);
  REQUIRE(!sols.empty());
  bool found = false;
  for (const Solution& s : sols) found |= (s.fakes == values({2, 3, 4}));
  CHECK(found);
  for (const Solution& s : sols) {
    CHECK(s.total == 11);
    long long acc = 0;
    for (std::size_t i = 0; i < s.fakes.size(); ++i) acc += profile(inst.sequence).parts[i] * s.fakes[i];
    CHECK(acc == 11);
    CHECK(std::is_sorted(s.fakes.begin(), s.fakes.end()));
    CHECK(s.fakes.front() >= 0);
    CHECK(s.fakes.back() <= 5);
  }

  const WeighingInstance small(SortingSequence::parse("(0,0,1,2)"), 2);
  const auto unique = enumerate_solutions(small, 3, true);
  REQUIRE(unique.size() == 1);
  CHECK(unique.front().fakes == values({0, 1, 2}));

  // Lexicographic output order.
  const WeighingInstance wide(SortingSequence::parse("(0,1,1,1)"), 7);
  const auto many = enumerate_solutions(wide, 21, true);
  CHECK(many.size() > 1);
  for (std::size_t i = 1; i < many.size(); ++i) CHECK(many[i - 1].fakes < many[i].fakes);

  CHECK_THROWS_AS(enumerate_solutions(inst, -1, true), std::out_of_range);
  CHECK_THROWS_AS(enumerate_solutions(inst, 21, true), std::out_of_range);
}

TEST_CASE("possible fake counts") {
  const WeighingInstance staircase(SortingSequence::parse("(0,1,2,3,4)"), 5);
  CHECK(possible_fakes(staircase) == values({10, 11, 12, 13, 14, 15}));

  const WeighingInstance flat(SortingSequence::parse("(0,0,0,0,0)"), 5);
  CHECK(possible_fakes(flat) == values({0, 5, 10, 15, 20, 25}));

  const WeighingInstance two(SortingSequence::parse("(0,1,1,1)"), 7);
  std::vector<long long> expected = {3, 6, 7};
  for (long long f = 9; f <= 27; ++f) expected.push_back(f);
  CHECK(possible_fakes(two) == expected);
}

TEST_CASE("discreetness decisions") {
  CHECK(is_discreet(WeighingInstance(SortingSequence::parse("(0,1,1,2)"), 5), 10));
  CHECK(is_discreet(WeighingInstance(SortingSequence::parse("(0,0,0,1,2)"), 5), 8));
  CHECK_FALSE(is_discreet(WeighingInstance(SortingSequence::parse("(0,1,1,1,2)"), 5), 12));
  CHECK_FALSE(is_discreet(WeighingInstance(SortingSequence::parse("(0,1,1,1,2)"), 5), 13));
  // f below p can never hide a fake in every pile.
  CHECK_FALSE(is_discreet(WeighingInstance(SortingSequence::parse("(0,1)"), 5), 1));

  const WeighingInstance row(SortingSequence::parse("(0,0,0,0,1)"), 5);
  CHECK(discreet_fakes(row) == values({6, 7, 8, 11, 12, 16}));
  CHECK(discreet_fakes(WeighingInstance(SortingSequence::parse("(0,1,2,3,4)"), 5)).empty());

  std::vector<long long> expected = {7, 10, 11};
  for (long long f = 13; f <= 31; ++f) expected.push_back(f);
  CHECK(discreet_fakes(WeighingInstance(SortingSequence::parse("(0,1,1,1)"), 9)) == expected);
}

TEST_CASE("discreetness requires k above the class count") {
  // With k <= r every matching configuration pins some pile completely.
  for (int p = 1; p <= 5; ++p)
    for (std::uint64_t i = 0; i < count_sequences(p); ++i) {
      const SortingSequence seq = SortingSequence::from_index(p, i);
      const PileProfile prof = profile(seq);
      for (long long k = 1; k <= prof.classes; ++k) {
        const WeighingInstance inst(seq, k);
        for (long long f = 0; f <= inst.total_coins; ++f) CHECK_FALSE(is_discreet(inst, f));
      }
    }
}

TEST_CASE("min and max achievable totals") {
  const auto mm = min_max_fakes(WeighingInstance(SortingSequence::parse("(0,0,1,2)"), 5));
  REQUIRE(mm.has_value());
  CHECK(mm->first == 3);
  CHECK(mm->second == 15);

  CHECK_FALSE(min_max_fakes(WeighingInstance(SortingSequence::parse("(0,0,1,2)"), 1)).has_value());

  const auto edge = min_max_fakes(WeighingInstance(SortingSequence::parse("(0,0,0,0,1)"), 5));
  REQUIRE(edge.has_value());
  CHECK(edge->first == 1);
  CHECK(edge->second == 21);

  // Against enumeration, wherever any total is achievable.
  for (int p = 1; p <= 5; ++p)
    for (std::uint64_t i = 0; i < count_sequences(p); ++i)
      for (long long k = 1; k <= 6; ++k) {
        const WeighingInstance inst(SortingSequence::from_index(p, i), k);
        const auto claimed = min_max_fakes(inst);
        const auto possible = possible_fakes(inst);
        if (claimed) {
          REQUIRE(!possible.empty());
          CHECK(possible.front() == claimed->first);
          CHECK(possible.back() == claimed->second);
        } else {
          CHECK(possible.empty());
        }
      }
}

TEST_CASE("possible counts respect divisibility and the min-max window") {
  for (int p = 1; p <= 5; ++p)
    for (std::uint64_t i = 0; i < count_sequences(p); ++i)
      for (long long k = 1; k <= 6; ++k) {
        const WeighingInstance inst(SortingSequence::from_index(p, i), k);
        const PileProfile prof = profile(inst.sequence);
        for (long long f : possible_fakes(inst)) {
          CHECK(f % prof.gcd == 0);
          CHECK(f >= prof.min_fakes);
          CHECK(f <= inst.total_coins - prof.min_fakes_rev);
        }
      }
}

TEST_CASE("reversal duality for possible and discreet counts") {
  for (int p = 1; p <= 5; ++p)
    for (std::uint64_t i = 0; i < count_sequences(p); ++i)
      for (long long k = 1; k <= 6; ++k) {
        const SortingSequence seq = SortingSequence::from_index(p, i);
        const WeighingInstance inst(seq, k);
        const WeighingInstance rev(seq.reversed(), k);
        const auto mirror = [&](std::vector<long long> fs) {
          for (long long& f : fs) f = inst.total_coins - f;
          std::sort(fs.begin(), fs.end());
          return fs;
        };
        CHECK(possible_fakes(inst) == mirror(possible_fakes(rev)));
        CHECK(discreet_fakes(inst) == mirror(discreet_fakes(rev)));
      }
}

TEST_CASE("discreet totals keep both neighbours possible, but not conversely") {
  for (int p = 1; p <= 5; ++p)
    for (std::uint64_t i = 0; i < count_sequences(p); ++i)
      for (long long k = 1; k <= 6; ++k) {
        const WeighingInstance inst(SortingSequence::from_index(p, i), k);
        const auto possible = possible_fakes(inst);
        const auto member = [&](long long f) {
          return std::binary_search(possible.begin(), possible.end(), f);
        };
        for (long long f : discreet_fakes(inst)) {
          CHECK(member(f - p));
          CHECK(member(f + p));
        }
      }

  // The known witnesses: both neighbours possible, still not discreet.
  const WeighingInstance witness(SortingSequence::parse("(0,1,1,1,2)"), 5);
  const auto possible = possible_fakes(witness);
  for (long long f : {12LL, 13LL}) {
    CHECK(std::binary_search(possible.begin(), possible.end(), f));
    CHECK(std::binary_search(possible.begin(), possible.end(), f - 5));
    CHECK(std::binary_search(possible.begin(), possible.end(), f + 5));
    CHECK_FALSE(is_discreet(witness, f));
  }
}

TEST_CASE("x-space change of variables") {
  const PileProfile prof = profile(SortingSequence::parse("(0,0,1,2)"));
  CHECK(suffix_coefficients(prof) == values({1, 2, 4}));

  const Solution sol{values({2, 3, 4}), 11};
  const XSolution x = to_x_space(prof, sol);
  CHECK(x.xs == values({0, 0, 2}));
  CHECK(x.target == 8);
  CHECK(from_x_space(prof, x).fakes == sol.fakes);

  const PileProfile two = profile(SortingSequence::parse("(0,1,1,1)"));
  CHECK(suffix_coefficients(two) == values({3, 4}));
  const XSolution x2 = to_x_space(two, Solution{values({0, 2}), 6});
  CHECK(x2.xs == values({1, 0}));
  CHECK(x2.target == 3);

  // Round-trip across every bounded solution, and the height-bound identity
  // f_r <= k iff sum x_i <= k - r + 1.
  for (int p = 1; p <= 5; ++p)
    for (std::uint64_t i = 0; i < count_sequences(p); ++i)
      for (long long k = 1; k <= 5; ++k) {
        const SortingSequence seq = SortingSequence::from_index(p, i);
        const WeighingInstance inst(seq, k);
        const PileProfile pf = profile(seq);
        for (long long f = 0; f <= inst.total_coins; ++f)
          for (const Solution& s : enumerate_solutions(inst, f, false)) {
            const XSolution xs = to_x_space(pf, s);
            long long combo = 0, spread = 0;
            for (int j = 0; j < pf.classes; ++j) {
              CHECK(xs.xs[j] >= 0);
              combo += xs.coeffs[j] * xs.xs[j];
              spread += xs.xs[j];
            }
            CHECK(combo == xs.target);
            CHECK(xs.target == f - pf.min_fakes);
            CHECK((s.fakes.back() <= k) == (spread <= k - pf.classes + 1));
            const Solution back = from_x_space(pf, xs);
            CHECK(back.fakes == s.fakes);
            CHECK(back.total == s.total);
          }
      }
}

TEST_CASE("general solutions ignore the height bound") {
  const PileProfile prof = profile(SortingSequence::parse("(0,1,1,1)"));
  CHECK(has_general_solution(prof, 27));
  CHECK_FALSE(has_general_solution(prof, 8));
  CHECK_FALSE(has_general_solution(prof, -1));
  const auto first = first_general_solution(prof, 27);
  REQUIRE(first.has_value());
  CHECK(first->fakes == values({0, 9}));

  // Bounded solvability implies general solvability.
  for (int p = 1; p <= 5; ++p)
    for (std::uint64_t i = 0; i < count_sequences(p); ++i)
      for (long long k = 1; k <= 5; ++k) {
        const SortingSequence seq = SortingSequence::from_index(p, i);
        const WeighingInstance inst(seq, k);
        const PileProfile pf = profile(seq);
        for (long long f = 0; f <= inst.total_coins; ++f)
          if (has_solution(inst, f, true)) CHECK(has_general_solution(pf, f));
      }
}

TEST_CASE("solver agrees with the configuration oracle") {
  for (int p = 1; p <= 4; ++p)
    for (std::uint64_t i = 0; i < count_sequences(p); ++i)
      for (long long k = 1; k <= 5; ++k) {
        const WeighingInstance inst(SortingSequence::from_index(p, i), k);
        CHECK(possible_fakes(inst) == oracle_possible_fakes(inst));
        for (long long f = 0; f <= inst.total_coins; ++f)
          CHECK(is_discreet(inst, f) == oracle_is_discreet(inst, f));
      }
}
