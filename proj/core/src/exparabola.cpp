#include "expara/exparabola.hpp"

#include <cmath>
#include <string>

namespace expara {

void ensure_valid_tangency_param(double t) {
  if (!std::isfinite(t)) {
    throw DomainError("tangency parameter must be finite");
  }
  if (std::abs(t) <= kTangencyParamTol || std::abs(t - 1.0) <= kTangencyParamTol) {
    throw DomainError("tangency parameter t = " + std::to_string(t) +
                      " collapses the exparabola through a vertex");
  }
}

TangencyTriple tangency_points(double t) {
  ensure_valid_tangency_param(t);
  return {Homogeneous3{0.0, 1.0, t - 1.0},
          Homogeneous3{1.0, 0.0, -t},
          Homogeneous3{1.0 - t, t, 0.0}};
}

Exparabola make_exparabola(const Triangle& tri, double t) {
  ensure_nondegenerate(tri);
  const TangencyTriple pts = tangency_points(t);
  Exparabola e;
  e.tri = tri;
  e.t = t;
  e.curve = BezierParabola{to_cartesian(tri, pts.on_ca), tri.c,
                           to_cartesian(tri, pts.on_bc)};
  return e;
}

Homogeneous3 cevian_point(double t) {
  ensure_valid_tangency_param(t);
  return {t - 1.0, -t, t * (1.0 - t)};
}

Vertex opposite_vertex(double t) {
  ensure_valid_tangency_param(t);
  if (t < 0.0) return Vertex::B;
  if (t > 1.0) return Vertex::A;
  return Vertex::C;
}

TangencyGrid tangency_grid(double t0, double t1, double t2) {
  ensure_valid_tangency_param(t0);
  ensure_valid_tangency_param(t1);
  ensure_valid_tangency_param(t2);
  const double sep = std::min({std::abs(t0 - t1), std::abs(t1 - t2),
                               std::abs(t0 - t2)});
  if (sep <= kTangencyParamTol) {
    throw DomainError("tangency_grid requires pairwise distinct parameters");
  }
  TangencyGrid g;
  g.a0 = {0.0, 1.0, t1 - 1.0};
  g.a1 = {0.0, 1.0, t2 - 1.0};
  g.a2 = {0.0, 1.0, t0 - 1.0};
  g.b0 = {1.0, 0.0, -t2};
  g.b1 = {1.0, 0.0, -t0};
  g.b2 = {1.0, 0.0, -t1};
  g.c0 = {1.0 - t0, t0, 0.0};
  g.c1 = {1.0 - t1, t1, 0.0};
  g.c2 = {1.0 - t2, t2, 0.0};
  return g;
}

} // namespace expara
