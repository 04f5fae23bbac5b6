#pragma once

#include <array>
#include <cmath>

#include "expara/errors.hpp"

namespace expara {

struct Vec2 {
  double dx = 0.0;
  double dy = 0.0;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 u, Vec2 v) { return {u.dx + v.dx, u.dy + v.dy}; }
inline Vec2 operator-(Vec2 u, Vec2 v) { return {u.dx - v.dx, u.dy - v.dy}; }
inline Vec2 operator-(Vec2 u) { return {-u.dx, -u.dy}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.dx, s * v.dy}; }
inline Vec2 operator*(Vec2 v, double s) { return s * v; }
inline Vec2 operator/(Vec2 v, double s) { return {v.dx / s, v.dy / s}; }

inline Point2 operator+(Point2 p, Vec2 v) { return {p.x + v.dx, p.y + v.dy}; }
inline Point2 operator-(Point2 p, Vec2 v) { return {p.x - v.dx, p.y - v.dy}; }
inline Vec2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }

inline double dot(Vec2 u, Vec2 v) { return u.dx * v.dx + u.dy * v.dy; }
inline double cross(Vec2 u, Vec2 v) { return u.dx * v.dy - u.dy * v.dx; }
inline double norm2(Vec2 v) { return dot(v, v); }
inline double norm(Vec2 v) { return std::hypot(v.dx, v.dy); }
inline Vec2 perp(Vec2 v) { return {-v.dy, v.dx}; }

inline double distance(Point2 p, Point2 q) { return norm(p - q); }

// Vertices and opposite sides of a triangle ABC.  Side a = BC is opposite
// vertex A, side b = CA opposite B, side c = AB opposite C.
enum class Vertex { A, B, C };
enum class Side { A, B, C };

const char* to_string(Vertex v);

struct Triangle {
  Point2 a;
  Point2 b;
  Point2 c;
};

// Homogeneous barycentric coordinates with respect to a triangle ABC.
// Scalar multiples describe the same point; the normalized form sums to 1.
struct Homogeneous3 {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  // Divides by the coordinate sum.  Throws DomainError when the sum
  // vanishes (a point at infinity).
  Homogeneous3 normalized() const;
};

struct TriangleCenters {
  Point2 centroid;
  Point2 circumcenter;
  Point2 orthocenter;
  double circumradius = 0.0;
};

// A triangle counts as degenerate when |signed area| <= 1e-12 * L^2 with L
// its longest side.  The bound is scale invariant and keeps the circumcenter
// solve conditioned.
inline constexpr double kDegeneracyTol = 1e-12;

// Collinearity tolerance for affine_ratio: perpendicular deviation relative
// to the segment length.
inline constexpr double kCollinearityTol = 1e-9;

double signed_area(const Triangle& tri);
double longest_side(const Triangle& tri);
bool is_degenerate(const Triangle& tri);
void ensure_nondegenerate(const Triangle& tri);

// Side lengths (a, b, c) = (|BC|, |CA|, |AB|).
std::array<double, 3> side_lengths(const Triangle& tri);

// Cosine of the interior angle; at A this is (b^2 + c^2 - a^2) / (2bc).
double angle_cosine(const Triangle& tri, Vertex at_vertex);

// Centroid, circumcenter, orthocenter and circumradius.  The three centers
// are computed independently of one another, so the Euler relation
// H - O = 3(G - O) holds only up to rounding and is a genuine consistency
// check on the output.
TriangleCenters centers(const Triangle& tri);

// Cartesian image (x0 A + x1 B + x2 C) / (x0 + x1 + x2).
Point2 to_cartesian(const Triangle& tri, const Homogeneous3& h);

// Normalized barycentric coordinates of p, via signed subtriangle areas.
Homogeneous3 to_barycentric(const Triangle& tri, Point2 p);

// Signed ratio XZ / ZY measured along the common line of three collinear
// points.  Throws DomainError for non-collinear input or Z = Y.
double affine_ratio(Point2 x, Point2 y, Point2 z);

// Residual of the Steiner circumellipse equation x0 x1 + x1 x2 + x2 x0 = 0,
// evaluated after scaling the triple to unit Euclidean norm so that the
// result is scale free.
double steiner_residual(const Homogeneous3& h);

// True iff the normalized coordinates satisfy the three strict inequalities
//   (x0+x1)(x1+x2) > 0, (x0+x2)(x1+x2) > 0, (x0+x1)(x0+x2) > 0,
// i.e. the point lies strictly inside the anticomplementary triangle.
// The input is normalized internally; boundary points are not admissible.
bool is_admissible(const Homogeneous3& x);

// Rigid frame with A at the origin and B on the positive x axis, so the
// triangle reads A = (0,0), B = (c,0), C = (c1,c2).  c2 is negative for
// clockwise triangles.  Used to evaluate per-triangle closed forms in a
// well-conditioned frame and map the results back.
struct CanonicalFrame {
  Point2 origin;
  Vec2 ex, ey; // unit axes in world coordinates
  double c = 0.0, c1 = 0.0, c2 = 0.0;

  static CanonicalFrame of(const Triangle& tri);

  Point2 to_world(double lx, double ly) const {
    return origin + lx * ex + ly * ey;
  }
  Vec2 dir_to_world(double lx, double ly) const { return lx * ex + ly * ey; }
};

} // namespace expara
