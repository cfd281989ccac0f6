#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sortweigh/sequence.hpp"

#include <vector>

using namespace sortweigh;

TEST_CASE("indexed construction matches the lexicographic order") {
  CHECK(SortingSequence::from_index(4, 3).entries() == std::vector<int>{0, 0, 1, 2});
  CHECK(SortingSequence::from_index(1, 0).entries() == std::vector<int>{0});
  CHECK(SortingSequence::from_index(5, 15).entries() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(SortingSequence::from_index(5, 0).entries() == std::vector<int>{0, 0, 0, 0, 0});

  // Lexicographic: increasing index gives strictly increasing entry vectors.
  for (int p = 1; p <= 10; ++p) {
    std::vector<int> prev;
    for (std::uint64_t i = 0; i < count_sequences(p); ++i) {
      const SortingSequence s = SortingSequence::from_index(p, i);
      if (i > 0) CHECK(prev < s.entries());
      CHECK(s.index() == i);
      prev = s.entries();
    }
  }
}

TEST_CASE("binary representation") {
  CHECK(SortingSequence::parse("(0,0,1,2)").binary() == "011");
  CHECK(SortingSequence::parse("(0)").binary() == "");
  CHECK(SortingSequence::parse("(0,1,1,1)").binary() == "100");
  CHECK(SortingSequence::from_binary("011").entries() == std::vector<int>{0, 0, 1, 2});
  CHECK(SortingSequence::from_binary("").entries() == std::vector<int>{0});

  // index() reads the binary form as a base-2 numeral, left bit most significant.
  for (int p = 1; p <= 10; ++p)
    for (std::uint64_t i = 0; i < count_sequences(p); ++i) {
      const SortingSequence s = SortingSequence::from_index(p, i);
      CHECK(SortingSequence::from_binary(s.binary()) == s);
      std::uint64_t value = 0;
      for (char bit : s.binary()) value = (value << 1) | (bit == '1');
      CHECK(value == i);
    }
}

TEST_CASE("reversal is an involution that reverses the binary form") {
  CHECK(SortingSequence::parse("(0,0,1,2)").reversed() == SortingSequence::parse("(0,1,2,2)"));
  CHECK(SortingSequence::parse("(0,0,0,0,1)").reversed() == SortingSequence::parse("(0,1,1,1,1)"));
  CHECK(SortingSequence::parse("(0,1,1,2)").reversed() == SortingSequence::parse("(0,1,1,2)"));

  for (int p = 1; p <= 10; ++p)
    for (std::uint64_t i = 0; i < count_sequences(p); ++i) {
      const SortingSequence s = SortingSequence::from_index(p, i);
      const SortingSequence r = s.reversed();
      std::string bits = s.binary();
      std::reverse(bits.begin(), bits.end());
      CHECK(r.binary() == bits);
      CHECK(r.reversed() == s);
    }
}

TEST_CASE("text form round-trips") {
  for (int p = 1; p <= 8; ++p)
    for (std::uint64_t i = 0; i < count_sequences(p); ++i) {
      const SortingSequence s = SortingSequence::from_index(p, i);
      CHECK(SortingSequence::parse(s.to_string()) == s);
    }
  CHECK(SortingSequence::parse(" ( 0 , 1 , 1 ) ").to_string() == "(0,1,1)");
  CHECK(SortingSequence::parse("0,1,2").to_string() == "(0,1,2)");
}

TEST_CASE("profile statistics") {
  const PileProfile a = profile(SortingSequence::parse("(0,0,1,2)"));
  CHECK(a.classes == 3);
  CHECK(a.parts == std::vector<long long>{2, 1, 1});
  CHECK(a.gcd == 1);
  CHECK(a.piles == 4);
  CHECK(a.min_fakes == 3);

  const PileProfile b = profile(SortingSequence::parse("(0,0,0,0,0)"));
  CHECK(b.classes == 1);
  CHECK(b.parts == std::vector<long long>{5});
  CHECK(b.gcd == 5);
  CHECK(b.min_fakes == 0);
  CHECK(b.min_fakes_rev == 0);

  const PileProfile c = profile(SortingSequence::parse("(0,1,1,1)"));
  CHECK(c.classes == 2);
  CHECK(c.parts == std::vector<long long>{1, 3});
  CHECK(c.min_fakes == 3);
  CHECK(c.min_fakes_rev == 1);

  // min_fakes + reversed min_fakes always equals p(r-1).
  for (int p = 1; p <= 10; ++p)
    for (std::uint64_t i = 0; i < count_sequences(p); ++i) {
      const PileProfile prof = profile(SortingSequence::from_index(p, i));
      CHECK(prof.min_fakes + prof.min_fakes_rev == prof.piles * (prof.classes - 1));
      long long total = 0;
      for (long long part : prof.parts) {
        CHECK(part % prof.gcd == 0);
        total += part;
      }
      CHECK(total == prof.piles);
    }
}

TEST_CASE("sequence counting") {
  CHECK(count_sequences(1) == 1);
  CHECK(count_sequences(4) == 8);
  CHECK(count_sequences(5) == 16);
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(SortingSequence(std::vector<int>{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SortingSequence(std::vector<int>{0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SortingSequence(std::vector<int>{0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SortingSequence(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(SortingSequence::from_index(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(SortingSequence::from_index(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(SortingSequence::from_index(kMaxPileCount + 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(SortingSequence::from_binary("012"), std::invalid_argument);
  CHECK_THROWS_AS(SortingSequence::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(SortingSequence::parse("(0,1,"), std::invalid_argument);
  CHECK_THROWS_AS(SortingSequence::parse("(0,x)"), std::invalid_argument);
  CHECK_THROWS_AS(WeighingInstance(SortingSequence::parse("(0,1)"), 0), std::invalid_argument);
}

TEST_CASE("weighing instance totals") {
  const WeighingInstance inst(SortingSequence::parse("(0,0,1,2)"), 5);
  CHECK(inst.coins_per_pile == 5);
  CHECK(inst.total_coins == 20);
}
