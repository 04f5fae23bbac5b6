#pragma once

#include "expara/bezier.hpp"
#include "expara/geometry.hpp"

namespace expara {

// Tolerance below which a tangency parameter counts as 0 or 1; the curve
// then collapses through a triangle vertex and downstream formulas divide
// by t and 1 - t.
inline constexpr double kTangencyParamTol = 1e-12;

void ensure_valid_tangency_param(double t);

// Points of tangency of the exparabola with parameter t, in homogeneous
// barycentric coordinates:
//   on BC: (0, 1, t-1),  on CA: (1, 0, -t),  on AB: (1-t, t, 0).
struct TangencyTriple {
  Homogeneous3 on_bc;
  Homogeneous3 on_ca;
  Homogeneous3 on_ab;
};
TangencyTriple tangency_points(double t);

// A parabola tangent to all three side lines of a triangle.  The curve's
// control points are the Cartesian tangency point on CA, the vertex C, and
// the tangency point on BC; the curve touches line AB at parameter u = t.
struct Exparabola {
  Triangle tri;
  double t = 0.0;
  BezierParabola curve;
};

Exparabola make_exparabola(const Triangle& tri, double t);

// Common point of the three cevians through the tangency points,
//   (t-1, -t, t(1-t));
// it lies on the Steiner circumellipse for every valid t.
Homogeneous3 cevian_point(double t);

// Which vertex the exparabola is opposite to (tangent to the opposite side
// strictly between its endpoints): C for t in (0,1), B for t < 0, A for
// t > 1.
Vertex opposite_vertex(double t);

// The nine tangency points of three exparabolas with parameters
// (t0, t1, t2), labeled so that the ti-exparabola touches AB at Ci.  The
// triples are stored in raw homogeneous form for reproducible reports:
//   A0 = (0,1,t1-1)   A1 = (0,1,t2-1)   A2 = (0,1,t0-1)      (on BC)
//   B0 = (1,0,-t2)    B1 = (1,0,-t0)    B2 = (1,0,-t1)       (on CA)
//   C0 = (1-t0,t0,0)  C1 = (1-t1,t1,0)  C2 = (1-t2,t2,0)     (on AB)
struct TangencyGrid {
  Homogeneous3 a0, a1, a2;
  Homogeneous3 b0, b1, b2;
  Homogeneous3 c0, c1, c2;
};
TangencyGrid tangency_grid(double t0, double t1, double t2);

} // namespace expara
