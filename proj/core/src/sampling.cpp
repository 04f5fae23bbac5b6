#include "expara/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace expara {

Triangle random_triangle(Rng& rng) {
  for (;;) {
    const Triangle tri{{rng.uniform(), rng.uniform()},
                       {rng.uniform(), rng.uniform()},
                       {rng.uniform(), rng.uniform()}};
    if (is_degenerate(tri)) continue;
    const auto s = side_lengths(tri);
    const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    if (*hi / *lo > 50.0) continue;
    // The side-ratio cap alone admits needle shapes (all sides comparable,
    // tiny height); cap the thinness as well so conditioning outliers do
    // not dominate residuals.
    if (2.0 * std::abs(signed_area(tri)) < (*hi) * (*hi) / 50.0) continue;
    return tri;
  }
}

Homogeneous3 random_admissible_point(Rng& rng, double margin) {
  for (;;) {
    const double x0 = rng.uniform(-1.0, 1.0);
    const double x1 = rng.uniform(-1.0, 1.0);
    const double x2 = 1.0 - x0 - x1;
    const Homogeneous3 x{x0, x1, x2};
    // Unit-sum triples are admissible iff every coordinate is below 1;
    // the margin keeps the axis cubic away from its degeneration.
    if (std::max({x0, x1, x2}) > 1.0 - margin) continue;
    return x;
  }
}

double random_tangency_param(Rng& rng, double gap) {
  for (;;) {
    const double t = rng.uniform(-4.0, 5.0);
    if (std::abs(t) < gap || std::abs(t - 1.0) < gap) continue;
    return t;
  }
}

} // namespace expara
