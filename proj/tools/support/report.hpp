#pragma once

#include <optional>

#include "support/triangle_spec.hpp"

namespace expara::cli {

struct Options {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int trials = 1000;
};

// Max-exparabola report: cubic, roots, tangency grid, foci, axes, and the
// per-input invariant table.
json run_max(const TriangleSpec& spec, const Options& opt);

// X-focal report: axis cubic, roots (flagged when complex), foci,
// orthocenter residual, admissibility verdict.
json run_xfocal(const TriangleSpec& spec, const Homogeneous3& x,
                const Options& opt);

// Iteration report: per-step table, contraction ratios, limit hexagon when
// the deviation converges below opt.tol within `steps`.  A non-centroid
// base point switches to the experimental mode without convergence
// bookkeeping.
json run_iterate(const TriangleSpec& spec, int steps, const Options& opt,
                 const std::optional<Homogeneous3>& base = std::nullopt);

} // namespace expara::cli
