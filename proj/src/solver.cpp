#include "sortweigh/solver.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sortweigh {

namespace {

// Depth-first descent over strictly increasing class counts.  The visitor
// receives each complete assignment in lexicographic order and returns false
// to stop the scan early.
template <typename Visit>
class SolutionScan {
 public:
  SolutionScan(const std::vector<long long>& parts, long long height_cap, Visit& visit)
      : parts_(parts), cap_(height_cap), visit_(visit) {
    const int r = static_cast<int>(parts_.size());
    suffix_piles_.assign(r + 1, 0);
    for (int i = r - 1; i >= 0; --i) suffix_piles_[i] = suffix_piles_[i + 1] + parts_[i];
    tail_offset_.assign(r, 0);
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) tail_offset_[i] += parts_[j] * (j - i);
  }

  void run(long long budget) {
    if (budget < 0) return;
    current_.clear();
    descend(0, -1, budget);
  }

 private:
  bool descend(int i, long long prev, long long budget) {
    const int r = static_cast<int>(parts_.size());
    if (i == r - 1) {
      if (budget % parts_[i] != 0) return true;
      const long long f = budget / parts_[i];
      if (f <= prev) return true;
      if (cap_ >= 0 && f > cap_) return true;
      current_.push_back(f);
      const bool keep_going = visit_(current_);
      current_.pop_back();
      return keep_going;
    }
    // Classes above i are forced to at least f+1, f+2, ...; the cheapest
    // completion therefore costs f * suffix_piles + tail_offset.
    if (budget < tail_offset_[i]) return true;
    long long hi = (budget - tail_offset_[i]) / suffix_piles_[i];
    if (cap_ >= 0) hi = std::min(hi, cap_ - (r - 1 - i));
    for (long long f = prev + 1; f <= hi; ++f) {
      current_.push_back(f);
      const bool keep_going = descend(i + 1, f, budget - parts_[i] * f);
      current_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const std::vector<long long>& parts_;
  long long cap_;
  Visit& visit_;
  std::vector<long long> suffix_piles_;
  std::vector<long long> tail_offset_;
  std::vector<long long> current_;
};

template <typename Visit>
void scan_solutions(const std::vector<long long>& parts, long long height_cap,
                    long long fakes, Visit visit) {
  SolutionScan<Visit> scan(parts, height_cap, visit);
  scan.run(fakes);
}

}  // namespace

std::vector<Solution> enumerate_solutions(const WeighingInstance& inst,
                                          long long fakes, bool height_bounded) {
  if (fakes < 0 || fakes > inst.total_coins)
    throw std::out_of_range("fake count outside [0, p*k]");
  const PileProfile prof = profile(inst.sequence);
  std::vector<Solution> out;
  scan_solutions(prof.parts, height_bounded ? inst.coins_per_pile : -1, fakes,
                 [&](const std::vector<long long>& fs) {
                   out.push_back(Solution{fs, fakes});
                   return true;
                 });
  return out;
}

bool has_solution(const WeighingInstance& inst, long long fakes, bool height_bounded) {
  if (fakes < 0 || fakes > inst.total_coins) return false;
  const PileProfile prof = profile(inst.sequence);
  bool found = false;
  scan_solutions(prof.parts, height_bounded ? inst.coins_per_pile : -1, fakes,
                 [&](const std::vector<long long>&) {
                   found = true;
                   return false;
                 });
  return found;
}

bool has_general_solution(const PileProfile& prof, long long fakes) {
  bool found = false;
  scan_solutions(prof.parts, -1, fakes, [&](const std::vector<long long>&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<Solution> first_general_solution(const PileProfile& prof, long long fakes) {
  std::optional<Solution> first;
  scan_solutions(prof.parts, -1, fakes, [&](const std::vector<long long>& fs) {
    first = Solution{fs, fakes};
    return false;
  });
  return first;
}

std::vector<long long> possible_fakes(const WeighingInstance& inst) {
  std::vector<long long> out;
  for (long long f = 0; f <= inst.total_coins; ++f)
    if (has_solution(inst, f, true)) out.push_back(f);
  return out;
}

bool is_discreet(const WeighingInstance& inst, long long fakes) {
  const PileProfile prof = profile(inst.sequence);
  if (fakes < prof.piles) return false;      // a fake in every pile is required
  if (inst.coins_per_pile < 2) return false; // and so is a real coin in every pile
  const WeighingInstance reduced(inst.sequence, inst.coins_per_pile - 1);
  return has_solution(reduced, fakes - prof.piles, true) &&
         has_solution(reduced, fakes, true);
}

std::vector<long long> discreet_fakes(const WeighingInstance& inst) {
  std::vector<long long> out;
  for (long long f : possible_fakes(inst))
    if (is_discreet(inst, f)) out.push_back(f);
  return out;
}

std::optional<std::pair<long long, long long>> min_max_fakes(const WeighingInstance& inst) {
  const PileProfile prof = profile(inst.sequence);
  if (inst.coins_per_pile < prof.classes - 1) return std::nullopt;
  return std::make_pair(prof.min_fakes, inst.total_coins - prof.min_fakes_rev);
}

std::vector<long long> suffix_coefficients(const PileProfile& prof) {
  std::vector<long long> coeffs(prof.classes, 0);
  long long acc = 0;
  for (int i = 0; i < prof.classes; ++i) {
    acc += prof.parts[prof.classes - 1 - i];
    coeffs[i] = acc;
  }
  return coeffs;
}

XSolution to_x_space(const PileProfile& prof, const Solution& sol) {
  const int r = prof.classes;
  if (static_cast<int>(sol.fakes.size()) != r)
    throw std::invalid_argument("solution class count does not match the profile");
  XSolution x;
  x.coeffs = suffix_coefficients(prof);
  x.xs.assign(r, 0);
  x.xs[r - 1] = sol.fakes[0];
  for (int i = 1; i <= r - 1; ++i)
    x.xs[i - 1] = sol.fakes[r - i] - sol.fakes[r - i - 1] - 1;
  x.target = sol.total - prof.min_fakes;
  long long recombined = 0;
  for (int i = 0; i < r; ++i) recombined += x.coeffs[i] * x.xs[i];
  assert(recombined == x.target);
  return x;
}

Solution from_x_space(const PileProfile& prof, const XSolution& x) {
  const int r = prof.classes;
  if (static_cast<int>(x.xs.size()) != r)
    throw std::invalid_argument("x-solution length does not match the profile");
  for (long long v : x.xs)
    if (v < 0) throw std::invalid_argument("x-solution entries must be non-negative");
  Solution sol;
  sol.fakes.assign(r, 0);
  long long suffix = 0;
  for (int i = 1; i <= r; ++i) {
    suffix += x.xs[r - i];
    sol.fakes[i - 1] = (i - 1) + suffix;
  }
  sol.total = 0;
  for (int i = 0; i < r; ++i) sol.total += prof.parts[i] * sol.fakes[i];
  return sol;
}

}  // namespace sortweigh
