#pragma once

#include <array>

#include "expara/cubic.hpp"
#include "expara/exparabola.hpp"

namespace expara {

// Focus of the exparabola with parameter t, by the closed form in the
// canonical frame A = (0,0), B = (c,0), C = (c1,c2):
//   F = c t / ((c(1-t) - c1)^2 + c2^2) *
//       (c1^2 + c2^2 - c c1 (1-t), -c c2 (1-t)),
// mapped back to world coordinates.  Agrees with focus(curve) of
// make_exparabola to rounding; the two routes are independent checks of
// each other.
Point2 exparabola_focus(const Triangle& tri, double t);

// Axis direction (c(t-1) + c1, c2) of the t-exparabola, in world
// coordinates.
Vec2 exparabola_axis(const Triangle& tri, double t);

// The three exparabolas whose axes pass through an admissible point X,
// labeled by the vertex each one opposes.
struct XExparabolas {
  Exparabola opposite_a; // root t > 1
  Exparabola opposite_b; // root t < 0
  Exparabola opposite_c; // root t in (0, 1)
};

// Throws DomainError when X is not admissible (use focal_triangle for the
// general case, which handles complex roots).
XExparabolas x_exparabolas(const Triangle& tri, const Homogeneous3& x);

// Triangle of the foci of the three exparabolas with axes through X.  When
// the roots are real, the foci lie on the circumcircle of the source
// triangle and the orthocenter of the focal triangle is X itself.  When the
// axis cubic has a complex conjugate root pair, the focus expression is
// evaluated with complex arithmetic; the stored points are the real parts
// and max_focus_imag records the largest imaginary magnitude (relative to
// nothing; plain length units).
struct FocalResult {
  Point2 focus_a; // focus of the largest root (opposite A when interlaced)
  Point2 focus_b; // smallest root
  Point2 focus_c; // middle root
  CubicRoots roots;
  bool all_real = false;
  // |orthocenter(focal triangle) - X|, length units.  NaN when the
  // real-part triangle is degenerate (conjugate foci share real parts).
  double orthocenter_residual = 0.0;
  double max_focus_imag = 0.0;
};

FocalResult focal_triangle(const Triangle& tri, const Homogeneous3& x);

// The invariant whose vanishing is equivalent to the axes of the three
// exparabolas (u, v, w) being the altitudes of their focal triangle:
//   h = c^2((a^2+b^2)c^2 - (a^2-b^2)^2) uvw
//     + a^2 c^2 (a^2-b^2-c^2)(uv+vw+wu)
//     - a^2 c^2 (a^2+b^2-c^2)(u+v+w)
//     + a^2((b^2+c^2)a^2 - (b^2-c^2)^2),
// divided by a^2 c^2 s^2 (s the longest side) to be scale free.  It is 0
// exactly when (u, v, w) are the roots of the axis cubic of some point.
double h_invariant(const Triangle& tri, double u, double v, double w);

// Normalized perpendicularity residuals of each exparabola axis against the
// line joining the other two foci: <a_A, F_B - F_C> / (|a_A| |F_B - F_C|)
// and its two cyclic analogues (with F_A and a_A belonging to parameter w,
// F_B to u, F_C to v).  All three vanish together or none does.
std::array<double, 3> perpendicularity_check(const Triangle& tri, double u,
                                             double v, double w);

// The triangle of the three cevian points of the max-exparabolas; it is
// inscribed into the Steiner circumellipse.  x1/x2/x3 belong to the roots
// t2/t0/t1 respectively, matching the tangency-grid labels.
struct SteinerInscribed {
  Point2 x1;
  Point2 x2;
  Point2 x3;
  // Worst distance (relative to the circumradius) between the returned
  // point and the pairwise intersections of its three cevians.
  std::array<double, 3> concurrency_residuals{};
};

SteinerInscribed steiner_inscribed_triangle(const Triangle& tri);

} // namespace expara
