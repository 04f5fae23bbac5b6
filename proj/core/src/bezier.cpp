#include "expara/bezier.hpp"

#include <algorithm>
#include <cmath>

namespace expara {

namespace {

double control_net_diameter(const BezierParabola& p) {
  return std::max({distance(p.p0, p.p1), distance(p.p1, p.p2),
                   distance(p.p0, p.p2)});
}

// The focal-point numerators of the isotropic-tangent intersection, written
// out in full.  Callers shift the control net so that the coordinates stay
// small; the formula itself is translation equivariant.
Vec2 focus_numerators(double x0, double y0, double x1, double y1, double x2,
                      double y2) {
  auto sq = [](double v) { return v * v; };
  const double f1 =
      x0 * x0 * x2 - x0 * x1 * x1 - 2.0 * x0 * x1 * x2 + x0 * x2 * x2 +
      2.0 * x1 * x1 * x1 - x1 * x1 * x2 - x1 * y0 * y0 -
      2.0 * x1 * y0 * y1 + 4.0 * x1 * y0 * y2 + 2.0 * x1 * y1 * y1 -
      2.0 * x1 * y1 * y2 - x1 * y2 * y2 + x0 * sq(y1 - y2) +
      x1 * sq(y0 - y2) + x2 * sq(y0 - y1);
  const double f2 =
      -x0 * x0 * y1 - 2.0 * x0 * x1 * y1 + 4.0 * x0 * x2 * y1 +
      2.0 * x1 * x1 * y1 - 2.0 * x1 * x2 * y1 - x2 * x2 * y1 +
      y0 * y0 * y2 - y0 * y1 * y1 - 2.0 * y0 * y1 * y2 + y0 * y2 * y2 +
      2.0 * y1 * y1 * y1 - y1 * y1 * y2 + y0 * sq(x1 - x2) +
      y1 * sq(x0 - x2) + y2 * sq(x0 - x1);
  return {f1, f2};
}

} // namespace

double control_net_area2(const BezierParabola& p) {
  return cross(p.p1 - p.p0, p.p2 - p.p0);
}

bool is_degenerate(const BezierParabola& p) {
  const double diam = control_net_diameter(p);
  return std::abs(control_net_area2(p)) <= 1e-14 * diam * diam;
}

void ensure_nondegenerate(const BezierParabola& p) {
  if (is_degenerate(p)) {
    throw DegenerateInput("degenerate parabola: collinear control points");
  }
}

Point2 eval(const BezierParabola& p, double u) {
  const double w0 = (1.0 - u) * (1.0 - u);
  const double w1 = 2.0 * (1.0 - u) * u;
  const double w2 = u * u;
  return {w0 * p.p0.x + w1 * p.p1.x + w2 * p.p2.x,
          w0 * p.p0.y + w1 * p.p1.y + w2 * p.p2.y};
}

Vec2 derivative(const BezierParabola& p, double u) {
  return 2.0 * u * axis_direction(p) + 2.0 * (p.p1 - p.p0);
}

DeCasteljau de_casteljau(const BezierParabola& p, double u) {
  auto lerp = [u](Point2 a, Point2 b) {
    return Point2{(1.0 - u) * a.x + u * b.x, (1.0 - u) * a.y + u * b.y};
  };
  DeCasteljau out;
  out.q01 = lerp(p.p0, p.p1);
  out.q11 = lerp(p.p1, p.p2);
  out.point = lerp(out.q01, out.q11);
  return out;
}

Vec2 axis_direction(const BezierParabola& p) {
  return {p.p0.x - 2.0 * p.p1.x + p.p2.x, p.p0.y - 2.0 * p.p1.y + p.p2.y};
}

double vertex_param(const BezierParabola& p) {
  ensure_nondegenerate(p);
  const Vec2 a = axis_direction(p);
  return -dot(a, p.p1 - p.p0) / norm2(a);
}

Point2 vertex(const BezierParabola& p) { return eval(p, vertex_param(p)); }

double squared_parameter(const BezierParabola& p) {
  ensure_nondegenerate(p);
  const double d = control_net_area2(p);
  const double n = norm2(axis_direction(p));
  if (n <= 0.0) {
    throw NumericalError("squared_parameter: vanishing axis on input that "
                         "passed the degeneracy check");
  }
  const double d2 = d * d;
  return 4.0 * d2 * d2 / (n * n * n);
}

std::pair<std::complex<double>, std::complex<double>>
isotropic_params(const BezierParabola& p) {
  ensure_nondegenerate(p);
  const Vec2 a = axis_direction(p);
  const Vec2 d = p.p0 - p.p1;
  // u_+ carries the upper signs and belongs to tangent direction (1, i).
  const std::complex<double> u_plus =
      std::complex<double>(d.dy, -d.dx) / std::complex<double>(a.dy, -a.dx);
  const std::complex<double> u_minus =
      std::complex<double>(d.dy, d.dx) / std::complex<double>(a.dy, a.dx);
  return {u_plus, u_minus};
}

Point2 focus(const BezierParabola& p) {
  ensure_nondegenerate(p);
  const double den = norm2(axis_direction(p));
  // Evaluate with P1 shifted to the origin; the polynomial loses no terms
  // but the cancellation budget shrinks to the control-net size.
  const Vec2 r0 = p.p0 - p.p1;
  const Vec2 r2 = p.p2 - p.p1;
  const Vec2 f = focus_numerators(r0.dx, r0.dy, 0.0, 0.0, r2.dx, r2.dy);
  return p.p1 + f / den;
}

Line2 directrix(const BezierParabola& p) {
  const Point2 v = vertex(p);
  const Point2 f = focus(p);
  // Reflect the focus across the vertex; the directrix runs through that
  // point perpendicular to the axis.
  const Point2 foot = v - (f - v);
  return Line2{foot, perp(axis_direction(p))};
}

double line_distance(const Line2& line, Point2 p) {
  return std::abs(cross(line.direction, p - line.point)) /
         norm(line.direction);
}

} // namespace expara
