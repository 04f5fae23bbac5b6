#pragma once

#include <array>
#include <complex>
#include <optional>

#include "expara/geometry.hpp"

namespace expara {

// Coefficients of k3 t^3 + k2 t^2 + k1 t + k0.
struct CubicCoeffs {
  double k3 = 0.0;
  double k2 = 0.0;
  double k1 = 0.0;
  double k0 = 0.0;

  double eval(double t) const { return ((k3 * t + k2) * t + k1) * t + k0; }
  double derivative(double t) const { return (3.0 * k3 * t + 2.0 * k2) * t + k1; }
};

enum class RootKind { ThreeReal, OneRealOneComplexPair };

struct CubicRoots {
  RootKind kind = RootKind::ThreeReal;
  std::array<double, 3> reals{}; // ascending; only the first real_count are valid
  int real_count = 0;
  std::optional<std::complex<double>> complex_pair; // representative with Im > 0
  bool clustered = false;           // discriminant within 1e-12 of zero (relative)
  bool quadratic_fallback = false;  // leading coefficient vanished
};

// Solves the cubic; all real roots sorted ascending.  Uses the trigonometric
// branch when the discriminant is non-negative and Cardano's single-real
// branch otherwise, then polishes every root with two Newton steps on the
// original coefficients.  A near-zero leading coefficient
// (|k3| <= 1e-14 max|k_i|) degrades to the quadratic with a flag.
CubicRoots solve_cubic(const CubicCoeffs& c);

// Coefficient triple of the max-exparabola cubic for the requested side:
//   e_c = 2c^2 t^3 + (a^2-b^2-3c^2) t^2 - (3a^2+b^2-c^2) t + 2a^2
// and its cyclic images e_a, e_b.  Roots of e_c are the tangency parameters
// of the three max-exparabolas.
CubicCoeffs max_cubic_coeffs(const Triangle& tri, Side side);

// Coefficients of the cubic whose roots parametrize the exparabolas with
// axis through the point X (normalized internally):
//   f = c^2(x0+x1) t^3 + ((a^2-b^2)x2 - (2x0+x1)c^2) t^2
//     + ((c^2-b^2)x0 - (2x2+x1)a^2) t + a^2(x1+x2).
// Satisfies f(0) = a^2(x1+x2) and f(1) = -b^2(x0+x2).  The leading
// coefficient vanishes when x0 + x1 = 0 (X on an anticomplementary line);
// solve_cubic then reports the quadratic fallback.
CubicCoeffs axis_cubic_coeffs(const Triangle& tri, const Homogeneous3& x);

// The three real roots of e_c, sorted.  They interlace 0 and 1 as
// t0 < 0 < t1 < 1 < t2 for every non-degenerate triangle; a violation
// indicates numerical failure and throws NumericalError.
std::array<double, 3> max_exparabola_roots(const Triangle& tri);

} // namespace expara
