#include "expara/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace expara {

const char* to_string(Vertex v) {
  switch (v) {
  case Vertex::A: return "A";
  case Vertex::B: return "B";
  case Vertex::C: return "C";
  }
  return "?";
}

double signed_area(const Triangle& tri) {
  return 0.5 * cross(tri.b - tri.a, tri.c - tri.a);
}

double longest_side(const Triangle& tri) {
  return std::max({distance(tri.b, tri.c), distance(tri.c, tri.a),
                   distance(tri.a, tri.b)});
}

bool is_degenerate(const Triangle& tri) {
  const double l = longest_side(tri);
  return std::abs(signed_area(tri)) <= kDegeneracyTol * l * l;
}

void ensure_nondegenerate(const Triangle& tri) {
  if (is_degenerate(tri)) {
    throw DegenerateInput("degenerate triangle: |area| = " +
                          std::to_string(std::abs(signed_area(tri))) +
                          " with longest side " +
                          std::to_string(longest_side(tri)));
  }
}

std::array<double, 3> side_lengths(const Triangle& tri) {
  ensure_nondegenerate(tri);
  return {distance(tri.b, tri.c), distance(tri.c, tri.a),
          distance(tri.a, tri.b)};
}

double angle_cosine(const Triangle& tri, Vertex at_vertex) {
  const auto [a, b, c] = side_lengths(tri);
  switch (at_vertex) {
  case Vertex::A: return (b * b + c * c - a * a) / (2.0 * b * c);
  case Vertex::B: return (c * c + a * a - b * b) / (2.0 * c * a);
  case Vertex::C: return (a * a + b * b - c * c) / (2.0 * a * b);
  }
  throw DomainError("invalid vertex label");
}

TriangleCenters centers(const Triangle& tri) {
  ensure_nondegenerate(tri);

  TriangleCenters out;
  out.centroid = {(tri.a.x + tri.b.x + tri.c.x) / 3.0,
                  (tri.a.y + tri.b.y + tri.c.y) / 3.0};

  // Circumcenter from the perpendicular bisector equations, relative to A.
  const Vec2 ab = tri.b - tri.a;
  const Vec2 ac = tri.c - tri.a;
  const double d = 2.0 * cross(ab, ac);
  const double ab2 = norm2(ab);
  const double ac2 = norm2(ac);
  const Vec2 oa{(ac.dy * ab2 - ab.dy * ac2) / d,
                (ab.dx * ac2 - ac.dx * ab2) / d};
  if (!std::isfinite(oa.dx) || !std::isfinite(oa.dy)) {
    throw NumericalError("circumcenter overflow on near-degenerate triangle");
  }
  out.circumcenter = tri.a + oa;
  out.circumradius = norm(oa);

  // Orthocenter as the intersection of the altitudes from A and B; this
  // does not reuse the circumcenter, so H - O = 3(G - O) is a real check.
  const Vec2 na = perp(tri.c - tri.b);
  const double s = dot(tri.b - tri.a, tri.c - tri.a) / dot(na, tri.c - tri.a);
  out.orthocenter = tri.a + s * na;

  return out;
}

Homogeneous3 Homogeneous3::normalized() const {
  const double s = x0 + x1 + x2;
  const double scale = std::abs(x0) + std::abs(x1) + std::abs(x2);
  if (scale == 0.0) {
    throw DomainError("zero barycentric triple");
  }
  if (std::abs(s) <= 1e-14 * scale) {
    throw DomainError("cannot normalize barycentric point at infinity "
                      "(coordinate sum vanishes)");
  }
  return {x0 / s, x1 / s, x2 / s};
}

Point2 to_cartesian(const Triangle& tri, const Homogeneous3& h) {
  const Homogeneous3 n = h.normalized();
  return {n.x0 * tri.a.x + n.x1 * tri.b.x + n.x2 * tri.c.x,
          n.x0 * tri.a.y + n.x1 * tri.b.y + n.x2 * tri.c.y};
}

Homogeneous3 to_barycentric(const Triangle& tri, Point2 p) {
  ensure_nondegenerate(tri);
  const double full = cross(tri.b - tri.a, tri.c - tri.a);
  const double l0 = cross(tri.b - p, tri.c - p) / full;
  const double l1 = cross(tri.c - p, tri.a - p) / full;
  const double l2 = cross(tri.a - p, tri.b - p) / full;
  const double s = l0 + l1 + l2; // ~1 up to rounding
  return {l0 / s, l1 / s, l2 / s};
}

double affine_ratio(Point2 x, Point2 y, Point2 z) {
  const Vec2 d = y - x;
  const double len = norm(d);
  if (len == 0.0) {
    throw DomainError("affine_ratio: X and Y coincide, no line defined");
  }
  const double deviation = std::abs(cross(d, z - x)) / len;
  if (deviation > kCollinearityTol * len) {
    throw DomainError("affine_ratio: points not collinear (deviation " +
                      std::to_string(deviation) + ")");
  }
  const Vec2 u = d / len;
  const double xz = dot(z - x, u);
  const double zy = dot(y - z, u);
  if (std::abs(zy) <= 1e-12 * len) {
    throw DomainError("affine_ratio: Z = Y, ratio is infinite");
  }
  return xz / zy;
}

double steiner_residual(const Homogeneous3& h) {
  const double n2 = h.x0 * h.x0 + h.x1 * h.x1 + h.x2 * h.x2;
  if (n2 == 0.0) {
    throw DomainError("steiner_residual: zero triple");
  }
  return (h.x0 * h.x1 + h.x1 * h.x2 + h.x2 * h.x0) / n2;
}

bool is_admissible(const Homogeneous3& x) {
  const double s = x.x0 + x.x1 + x.x2;
  const double scale = std::abs(x.x0) + std::abs(x.x1) + std::abs(x.x2);
  if (scale == 0.0 || std::abs(s) <= 1e-14 * scale) {
    return false; // point at infinity
  }
  const Homogeneous3 n{x.x0 / s, x.x1 / s, x.x2 / s};
  const double s01 = n.x0 + n.x1;
  const double s12 = n.x1 + n.x2;
  const double s02 = n.x0 + n.x2;
  return s01 * s12 > 0.0 && s02 * s12 > 0.0 && s01 * s02 > 0.0;
}

CanonicalFrame CanonicalFrame::of(const Triangle& tri) {
  ensure_nondegenerate(tri);
  CanonicalFrame f;
  f.origin = tri.a;
  const Vec2 ab = tri.b - tri.a;
  f.c = norm(ab);
  f.ex = ab / f.c;
  f.ey = perp(f.ex);
  const Vec2 ac = tri.c - tri.a;
  f.c1 = dot(ac, f.ex);
  f.c2 = dot(ac, f.ey);
  return f;
}

} // namespace expara
