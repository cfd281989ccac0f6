#include "sortweigh/revealing.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#include "sortweigh/solver.hpp"

namespace sortweigh {

BigInt binomial(long long n, long long r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (long long i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;  // exact: the running product is always divisible
  }
  return result;
}

BigInt new_possibility_count(const WeighingInstance& inst, long long fakes) {
  if (fakes < 0 || fakes > inst.total_coins) return 0;
  const PileProfile prof = profile(inst.sequence);
  BigInt count = 0;
  for (const Solution& sol : enumerate_solutions(inst, fakes, /*height_bounded=*/true)) {
    BigInt term = 1;
    for (int i = 0; i < prof.classes; ++i)
      term *= boost::multiprecision::pow(binomial(inst.coins_per_pile, sol.fakes[i]),
                                         static_cast<unsigned>(prof.parts[i]));
    count += term;
  }
  return count;
}

RevealingFactor revealing_factor(const WeighingInstance& inst, long long fakes) {
  const BigInt fresh = new_possibility_count(inst, fakes);
  if (fresh == 0)
    throw std::domain_error("zero new possibilities: the total is not a possible fake count");
  RevealingFactor factor;
  factor.old_count = binomial(inst.total_coins, fakes);
  factor.new_count = fresh;
  factor.ratio = BigRational(factor.old_count, factor.new_count);
  factor.approx = approx_decimal(factor.ratio, 6);
  return factor;
}

std::vector<BigInt> coin_level_counts(const WeighingInstance& inst) {
  const long long total = inst.total_coins;
  if (total > 24) throw std::length_error("coin-level sweep is capped at p*k <= 24");
  const int p = inst.sequence.pile_count();
  const long long k = inst.coins_per_pile;
  const auto& entries = inst.sequence.entries();
  std::vector<BigInt> counts(total + 1, 0);
  const std::uint32_t pile_mask = (k == 32 ? ~0u : (1u << k) - 1);
  const std::uint64_t limit = std::uint64_t{1} << total;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    bool matches = true;
    int prev = 0;
    for (int j = 0; j < p && matches; ++j) {
      const int c = std::popcount(static_cast<std::uint32_t>(mask >> (j * k)) & pile_mask);
      if (j > 0) matches = (entries[j] == entries[j - 1]) ? (c == prev) : (c > prev);
      prev = c;
    }
    if (matches) ++counts[std::popcount(mask)];
  }
  return counts;
}

BigInt coin_level_count(const WeighingInstance& inst, long long fakes) {
  if (fakes < 0 || fakes > inst.total_coins) return 0;
  return coin_level_counts(inst)[fakes];
}

std::string approx_decimal(const BigRational& value, int significant) {
  assert(significant >= 1);
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (num == 0) return "0";
  const bool negative = num < 0;
  if (negative) num = -num;

  const auto pow10 = [](long long e) {
    BigInt r = 1;
    while (e-- > 0) r *= 10;
    return r;
  };

  // Scale so the integer quotient carries more digits than requested, then
  // round the surplus away.
  const long long num_digits = static_cast<long long>(num.str().size());
  const long long den_digits = static_cast<long long>(den.str().size());
  const long long shift = std::max<long long>(0, den_digits - num_digits + significant + 1);
  BigInt quotient = (num * pow10(shift)) / den;
  std::string digits = quotient.str();
  long long exponent = static_cast<long long>(digits.size()) - 1 - shift;
  assert(static_cast<long long>(digits.size()) > significant);
  const long long drop = static_cast<long long>(digits.size()) - significant;
  quotient = (quotient + 5 * pow10(drop - 1)) / pow10(drop);
  digits = quotient.str();
  if (static_cast<long long>(digits.size()) > significant) {  // 999... rolled over
    digits = digits.substr(0, significant);
    ++exponent;
  }

  std::string body;
  if (exponent >= -4 && exponent <= 14) {
    if (exponent >= 0) {
      if (exponent + 1 >= static_cast<long long>(digits.size()))
        body = digits + std::string(exponent + 1 - digits.size(), '0');
      else
        body = digits.substr(0, exponent + 1) + "." + digits.substr(exponent + 1);
    } else {
      body = "0." + std::string(-exponent - 1, '0') + digits;
    }
  } else {
    body = digits.substr(0, 1) + "." + digits.substr(1) + "e" +
           (exponent >= 0 ? "+" : "") + std::to_string(exponent);
  }
  return (negative ? "-" : "") + body;
}

}  // namespace sortweigh
