#pragma once

#include <complex>
#include <utility>

#include "expara/geometry.hpp"

namespace expara {

// Parabola arc in Bernstein form P(u) = (1-u)^2 P0 + 2(1-u)u P1 + u^2 P2.
// For non-collinear control points the curve extends to a full parabola as
// u ranges over all reals.
struct BezierParabola {
  Point2 p0;
  Point2 p1;
  Point2 p2;
};

// Oriented line through a point.
struct Line2 {
  Point2 point;
  Vec2 direction; // nonzero
};

// Twice the signed area of the control triangle,
//   x0 y1 - x0 y2 - x1 y0 + x1 y2 + x2 y0 - x2 y1;
// zero exactly when the control points are collinear and the parabola
// degenerates.
double control_net_area2(const BezierParabola& p);

bool is_degenerate(const BezierParabola& p);
void ensure_nondegenerate(const BezierParabola& p);

Point2 eval(const BezierParabola& p, double u);

// Tangent vector P'(u) = 2(P0 - 2P1 + P2) u + 2(P1 - P0).
Vec2 derivative(const BezierParabola& p, double u);

// One de Casteljau step at u; `point` is the curve point, q01 and q11 the
// intermediate legs whose connecting line is tangent to the curve there.
struct DeCasteljau {
  Point2 q01;
  Point2 q11;
  Point2 point;
};
DeCasteljau de_casteljau(const BezierParabola& p, double u);

// Axis direction P0 - 2 P1 + P2 (the leading coefficient of P(u)).
Vec2 axis_direction(const BezierParabola& p);

// Parameter of the vertex: u_V = -<a, P1 - P0> / |a|^2.  The tangent there
// is perpendicular to the axis.
double vertex_param(const BezierParabola& p);

Point2 vertex(const BezierParabola& p);

// Squared semi-latus rectum; equals the squared curvature radius at the
// vertex.  With D = control_net_area2 and N = |axis|^2,
//   rho^2 = 4 D^4 / N^3.
double squared_parameter(const BezierParabola& p);

// Parameter values of the two isotropic tangents (directions (1, i) and
// (1, -i) respectively):
//   u_+- = (y0 - y1 -+ (x0 - x1) i) / (y0 - 2y1 + y2 -+ (x0 - 2x1 + x2) i).
// The two values are complex conjugates for real control points.
std::pair<std::complex<double>, std::complex<double>>
isotropic_params(const BezierParabola& p);

// Focal point, the intersection of the two isotropic tangents.
Point2 focus(const BezierParabola& p);

// Directrix: perpendicular to the axis, at distance rho/2 from the vertex
// on the side opposite the focus.  Every curve point is equidistant from
// focus and directrix.
Line2 directrix(const BezierParabola& p);

// Unsigned distance from a point to a line.
double line_distance(const Line2& line, Point2 p);

} // namespace expara
