#pragma once

#include <vector>

#include "expara/focal.hpp"

namespace expara {

// One element of the iterated focal-triangle sequence.
struct FocalStep {
  int index = 0;
  Triangle tri;
  Point2 circumcenter;
  Point2 centroid;
  Point2 orthocenter;
  double circumradius = 0.0;
  // (max side - min side) / mean side; 0 for equilateral triangles.
  double equilateral_deviation = 0.0;
};

double equilateral_deviation(const Triangle& tri);

// Steps 0..n of the sequence where step i+1 is the focal triangle of step i
// with respect to `base` (default: the centroid, which is always
// admissible).  Along the sequence the circumcircle is constant, the next
// orthocenter equals the previous base point, and for the centroid the
// distance |G - O| contracts by exactly 1/3 per step.  Aborts with
// NumericalError if circumcenter or circumradius drift past 1e-6 R0.
std::vector<FocalStep> iterate(const Triangle& tri0, int n);
std::vector<FocalStep> iterate(const Triangle& tri0, int n,
                               const Homogeneous3& base);

// |G_{i+1} - O| / |G_i - O| for two consecutive steps.  Throws DomainError
// when the steps are not consecutive or the sequence has already converged
// (|G_i - O| <= 1e-12 R).
double contraction_ratio(const FocalStep& step_i, const FocalStep& step_j);

struct LimitHexagon {
  std::array<Point2, 6> vertices; // ordered by angle about the circumcenter
  Triangle even_limit;            // final even-index triangle
  Triangle odd_limit;             // final odd-index triangle
  int steps_used = 0;
  double max_radius_error = 0.0; // max | |v - O| - R0 | / R0
  double max_gap_error = 0.0;    // max |angular gap - pi/3|, radians
};

// Iterates until the equilateral deviation stays below tol on two
// consecutive steps, then interleaves the vertices of the last two
// triangles.  The six points lie on the circumcircle with 60 degree gaps.
// Throws IterationCapExceeded when `cap` steps do not suffice.
LimitHexagon limit_hexagon(const Triangle& tri0, double tol, int cap = 200);

} // namespace expara
