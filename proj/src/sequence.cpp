#include "sortweigh/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sortweigh {

namespace {

void check_pile_count(int pile_count) {
  if (pile_count < 1) throw std::invalid_argument("pile count must be at least 1");
  if (pile_count > kMaxPileCount)
    throw std::invalid_argument("pile count exceeds the cap of " + std::to_string(kMaxPileCount));
}

}  // namespace

SortingSequence::SortingSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  check_pile_count(static_cast<int>(entries_.size()));
  if (entries_.front() != 0) throw std::invalid_argument("sorting sequence must start at 0");
  for (std::size_t j = 1; j < entries_.size(); ++j) {
    const int step = entries_[j] - entries_[j - 1];
    if (step != 0 && step != 1)
      throw std::invalid_argument("sorting sequence steps must be 0 or +1");
  }
}

SortingSequence SortingSequence::from_index(int pile_count, std::uint64_t index) {
  check_pile_count(pile_count);
  if (index >= (std::uint64_t{1} << (pile_count - 1)))
    throw std::invalid_argument("sequence index out of range for this pile count");
  std::vector<int> entries(pile_count, 0);
  for (int j = 1; j < pile_count; ++j) {
    const int bit = static_cast<int>((index >> (pile_count - 1 - j)) & 1u);
    entries[j] = entries[j - 1] + bit;
  }
  return SortingSequence(std::move(entries));
}

SortingSequence SortingSequence::from_binary(std::string_view bits) {
  std::vector<int> entries(bits.size() + 1, 0);
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] != '0' && bits[j] != '1')
      throw std::invalid_argument("binary form may contain only 0 and 1");
    entries[j + 1] = entries[j] + (bits[j] == '1');
  }
  return SortingSequence(std::move(entries));
}

SortingSequence SortingSequence::parse(std::string_view text) {
  std::string body;
  body.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) body.push_back(ch);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw std::invalid_argument("unbalanced parentheses in sequence text");
    body = body.substr(1, body.size() - 2);
  }
  if (body.empty()) throw std::invalid_argument("empty sequence text");
  std::vector<int> entries;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string item = body.substr(pos, comma - pos);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("malformed sequence entry '" + item + "'");
    entries.push_back(std::stoi(item));
    pos = comma + 1;
  }
  return SortingSequence(std::move(entries));
}

std::string SortingSequence::binary() const {
  std::string bits;
  bits.reserve(entries_.size() - 1);
  for (std::size_t j = 1; j < entries_.size(); ++j)
    bits.push_back(entries_[j] > entries_[j - 1] ? '1' : '0');
  return bits;
}

SortingSequence SortingSequence::reversed() const {
  std::string bits = binary();
  std::reverse(bits.begin(), bits.end());
  return from_binary(bits);
}

std::uint64_t SortingSequence::index() const {
  std::uint64_t value = 0;
  for (std::size_t j = 1; j < entries_.size(); ++j)
    value = (value << 1) | static_cast<std::uint64_t>(entries_[j] > entries_[j - 1]);
  return value;
}

std::string SortingSequence::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j > 0) out << ',';
    out << entries_[j];
  }
  out << ')';
  return out.str();
}

std::uint64_t count_sequences(int pile_count) {
  check_pile_count(pile_count);
  return std::uint64_t{1} << (pile_count - 1);
}

PileProfile profile(const SortingSequence& s) {
  PileProfile prof;
  const auto& entries = s.entries();
  prof.classes = entries.back() + 1;
  prof.parts.assign(prof.classes, 0);
  for (int rank : entries) ++prof.parts[rank];
  prof.piles = static_cast<long long>(entries.size());
  prof.gcd = 0;
  for (long long part : prof.parts) prof.gcd = std::gcd(prof.gcd, part);
  const auto weighted_min = [](const std::vector<long long>& parts) {
    long long sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) sum += static_cast<long long>(i) * parts[i];
    return sum;
  };
  prof.min_fakes = weighted_min(prof.parts);
  const std::vector<long long> rev(prof.parts.rbegin(), prof.parts.rend());
  prof.min_fakes_rev = weighted_min(rev);
  return prof;
}

WeighingInstance::WeighingInstance(SortingSequence s, long long k)
    : sequence(std::move(s)), coins_per_pile(k) {
  if (k < 1) throw std::invalid_argument("pile size k must be at least 1");
  total_coins = static_cast<long long>(sequence.pile_count()) * k;
}

}  // namespace sortweigh
