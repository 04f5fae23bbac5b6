#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "expara/geometry.hpp"

namespace expara {

// Deterministic uniform doubles on top of mt19937_64.  The standard
// distributions are implementation-defined, so reports generated through
// this class are reproducible across platforms, not just across runs.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

private:
  std::mt19937_64 engine_;
};

// FNV-1a, used to derive per-suite seeds from names deterministically.
constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

// Three uniform points in the unit square, rejecting degenerate shapes and
// aspect ratios (longest/shortest side) above 50 so that conditioning
// outliers do not dominate residuals.
Triangle random_triangle(Rng& rng);

// Normalized barycentric point strictly inside the anticomplementary
// triangle (equivalently max(x0,x1,x2) <= 1 - margin with unit sum).
Homogeneous3 random_admissible_point(Rng& rng, double margin = 0.05);

// Tangency parameter in [-4, 5], at least `gap` away from 0 and 1.
double random_tangency_param(Rng& rng, double gap = 0.05);

} // namespace expara
