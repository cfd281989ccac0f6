#pragma once
// Sorting sequences: the outcome encodings of the pile-sorting weighing
// strategy, their binary step representations, and derived pile statistics.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sortweigh {

/// Upper limit on the pile count p accepted anywhere; a full sweep over one
/// length visits 2^(p-1) sequences, so the cap keeps sweeps enumerable.
inline constexpr int kMaxPileCount = 24;

/// A sorting outcome for p piles: a non-decreasing sequence of class ranks
/// that starts at 0 and moves in steps of 0 or +1.  Rank 0 marks the class
/// with the fewest fake coins, rank r-1 the class with the most.
class SortingSequence {
 public:
  /// Validates the defining shape; throws std::invalid_argument otherwise.
  explicit SortingSequence(std::vector<int> entries);

  /// The index-th sequence of the given length, counting in lexicographic
  /// order from the all-zero sequence at index 0.
  static SortingSequence from_index(int pile_count, std::uint64_t index);

  /// Rebuilds a sequence from its step string; "" yields the length-1
  /// sequence (0).
  static SortingSequence from_binary(std::string_view bits);

  /// Parses the text form "(0,0,1,2)"; surrounding parentheses optional.
  static SortingSequence parse(std::string_view text);

  int pile_count() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }

  /// Step string of length p-1: character j is '1' exactly when entry j+1
  /// exceeds entry j.
  std::string binary() const;

  /// The sequence whose step string is this one's reversed.  Involutive.
  SortingSequence reversed() const;

  /// Lexicographic position: the step string read as a base-2 numeral.
  std::uint64_t index() const;

  /// Text form "(0,0,1,2)".
  std::string to_string() const;

  friend bool operator==(const SortingSequence&, const SortingSequence&) = default;

 private:
  std::vector<int> entries_;
};

/// Number of sorting sequences of the given length: 2^(p-1).
std::uint64_t count_sequences(int pile_count);

/// Class-level statistics of a sequence.
struct PileProfile {
  int classes = 0;               ///< number of distinct weight classes, r
  std::vector<long long> parts;  ///< piles per class, p_1..p_r
  long long gcd = 0;             ///< gcd of the parts, c
  long long piles = 0;           ///< total pile count, p
  long long min_fakes = 0;       ///< least fake total over general solutions
  long long min_fakes_rev = 0;   ///< the same for the reversed sequence
};

PileProfile profile(const SortingSequence& s);

/// A sorting outcome observed on piles of k coins each; t = p*k coins total.
struct WeighingInstance {
  SortingSequence sequence;
  long long coins_per_pile = 0;  ///< k, at least 1
  long long total_coins = 0;     ///< t = p*k

  WeighingInstance(SortingSequence s, long long k);
};

}  // namespace sortweigh
