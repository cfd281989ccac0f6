#include "sortweigh/redistribution.hpp"

#include <algorithm>
#include <stdexcept>

namespace sortweigh {

namespace {

bool step_applies(const PileProfile& prof, const Solution& sol, int i) {
  // 1-based class index; the move trades between classes i and i+1.
  const long long gap_bound = (prof.parts[i - 1] + prof.parts[i]) / prof.gcd;
  return sol.fakes[i] > sol.fakes[i - 1] + gap_bound;
}

}  // namespace

std::vector<int> applicable_steps(const PileProfile& prof, const Solution& sol) {
  std::vector<int> steps;
  for (int i = 1; i < prof.classes; ++i)
    if (step_applies(prof, sol, i)) steps.push_back(i);
  return steps;
}

Solution redistribution_step(const PileProfile& prof, const Solution& sol, int i) {
  if (i < 1 || i >= prof.classes || !step_applies(prof, sol, i))
    throw std::invalid_argument("redistribution step not applicable at class " + std::to_string(i));
  Solution next = sol;
  next.fakes[i - 1] += prof.parts[i] / prof.gcd;
  next.fakes[i] -= prof.parts[i - 1] / prof.gcd;
  return next;
}

long long monovariant(const PileProfile& prof, const Solution& sol) {
  long long m = 0;
  for (int i = 0; i < prof.classes; ++i)
    m += static_cast<long long>(i + 1) * prof.parts[i] * sol.fakes[i];
  return m;
}

Solution normalize(const PileProfile& prof, const Solution& sol) {
  Solution current = sol;
  for (;;) {
    const std::vector<int> steps = applicable_steps(prof, current);
    if (steps.empty()) return current;
    current = redistribution_step(prof, current, steps.front());
  }
}

std::optional<Solution> lift_to_height_bound(const WeighingInstance& inst, long long fakes) {
  const PileProfile prof = profile(inst.sequence);
  const std::optional<Solution> seed = first_general_solution(prof, fakes);
  if (!seed) return std::nullopt;
  Solution settled = normalize(prof, *seed);
  if (settled.fakes.back() > inst.coins_per_pile) return std::nullopt;
  return settled;
}

}  // namespace sortweigh
