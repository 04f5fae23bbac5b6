#pragma once

#include <functional>
#include <string>
#include <vector>

#include "expara/sampling.hpp"
#include "support/triangle_spec.hpp"

namespace expara::cli {

// One randomized invariant check.  `sample` draws inputs, `evaluate` turns a
// serialized sample back into a residual; pass means residual <= tolerance.
// Keeping the two halves separate makes every recorded sample replayable.
struct Invariant {
  std::string name;
  double tolerance = 0.0;
  int trial_divisor = 1; // expensive suites run trials / divisor
  std::function<json(Rng&)> sample;
  std::function<double(const json&)> evaluate;
};

const std::vector<Invariant>& invariant_suite();

// Runs every invariant on `trials` random samples (scaled per suite) and
// reports the worst residual, the worst sample, and any failures.
json run_verify(int trials, std::uint64_t seed);

// Re-evaluates the worst sample recorded for each invariant of a previous
// verify report; residuals reproduce bit for bit.
json run_replay(const json& report);

} // namespace expara::cli
