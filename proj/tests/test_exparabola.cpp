#include <doctest.h>

#include <cmath>

#include "expara/cubic.hpp"
#include "expara/exparabola.hpp"
#include "test_helpers.hpp"

using namespace expara;
using namespace expara::testing;

TEST_CASE("tangency points by direct substitution") {
  const TangencyTriple half = tangency_points(0.5);
  CHECK(half.on_bc.x0 == 0.0);
  CHECK(half.on_bc.x1 == 1.0);
  CHECK(half.on_bc.x2 == -0.5);
  CHECK(half.on_ca.x2 == -0.5);
  CHECK(half.on_ab.x0 == 0.5);
  CHECK(half.on_ab.x1 == 0.5);

  const TangencyTriple two = tangency_points(2.0);
  CHECK(two.on_ab.x0 == -1.0);
  CHECK(two.on_ab.x1 == 2.0);
  // Outside the segment AB: normalized first coordinate is negative.
  const Homogeneous3 n = two.on_ab.normalized();
  CHECK(n.x0 < 0.0);

  CHECK_THROWS_AS(tangency_points(0.0), DomainError);
  CHECK_THROWS_AS(tangency_points(1.0 + 1e-15), DomainError);
}

TEST_CASE("cevian product of affine ratios equals one") {
  Rng rng(401);
  for (double t : {-3.0, 0.3, 7.0}) {
    for (int i = 0; i < 50; ++i) {
      const Triangle tri = random_triangle(rng);
      const TangencyTriple pts = tangency_points(t);
      const Point2 a0 = to_cartesian(tri, pts.on_bc);
      const Point2 b2 = to_cartesian(tri, pts.on_ca);
      const Point2 c1 = to_cartesian(tri, pts.on_ab);
      const double prod = affine_ratio(tri.a, tri.b, c1) *
                          affine_ratio(tri.b, tri.c, a0) *
                          affine_ratio(tri.c, tri.a, b2);
      CHECK(std::abs(prod - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("equilateral exparabola at t = 1/2") {
  const Exparabola e = make_exparabola(equilateral_unit(), 0.5);
  const double r3 = std::sqrt(3.0);
  // Control points (B2, C, A0) in Cartesian form.
  CHECK(distance(e.curve.p0, {-0.5, -r3 / 2.0}) < 1e-14);
  CHECK(distance(e.curve.p1, {0.5, r3 / 2.0}) < 1e-14);
  CHECK(distance(e.curve.p2, {1.5, -r3 / 2.0}) < 1e-14);

  const Point2 f = focus(e.curve);
  CHECK(distance(f, {0.5, -r3 / 6.0}) < 1e-14);

  // The focus lies on the circumcircle, at distance R = 1/sqrt(3) from the
  // center (1/2, sqrt(3)/6).
  const TriangleCenters c = centers(e.tri);
  CHECK(std::abs(distance(f, c.circumcenter) - c.circumradius) < 1e-14);
}

TEST_CASE("focus lies on the circumcircle for random inputs") {
  Rng rng(402);
  for (int i = 0; i < 1000; ++i) {
    const Triangle tri = random_triangle(rng);
    const double t = random_tangency_param(rng);
    const Exparabola e = make_exparabola(tri, t);
    const TriangleCenters c = centers(tri);
    const double d = distance(focus(e.curve), c.circumcenter);
    CHECK(std::abs(d - c.circumradius) < 1e-10 * c.circumradius);
  }
}

TEST_CASE("control points are the barycentric tangency images") {
  Rng rng(403);
  for (int i = 0; i < 200; ++i) {
    const Triangle tri = random_triangle(rng);
    const double t = random_tangency_param(rng);
    const Exparabola e = make_exparabola(tri, t);
    const TangencyTriple pts = tangency_points(t);
    CHECK(distance(e.curve.p0, to_cartesian(tri, pts.on_ca)) == 0.0);
    CHECK(distance(e.curve.p1, tri.c) == 0.0);
    CHECK(distance(e.curve.p2, to_cartesian(tri, pts.on_bc)) == 0.0);
  }
}

TEST_CASE("de Casteljau at u = t recovers A, B and the AB tangency") {
  Rng rng(404);
  for (int i = 0; i < 300; ++i) {
    const Triangle tri = random_triangle(rng);
    const double t = random_tangency_param(rng);
    const Exparabola e = make_exparabola(tri, t);
    const DeCasteljau dc = de_casteljau(e.curve, t);
    const double scale = longest_side(tri) * std::max(1.0, std::abs(t));
    CHECK(distance(dc.q01, tri.a) < 1e-11 * scale);
    CHECK(distance(dc.q11, tri.b) < 1e-11 * scale);
    const Point2 c1 = to_cartesian(tri, tangency_points(t).on_ab);
    CHECK(distance(dc.point, c1) < 1e-11 * scale);
  }
}

TEST_CASE("line AB meets the curve with even multiplicity") {
  Rng rng(405);
  for (int i = 0; i < 300; ++i) {
    const Triangle tri = random_triangle(rng);
    const double t = random_tangency_param(rng);
    const Exparabola e = make_exparabola(tri, t);
    // Signed offset from line AB restricted to the curve is a quadratic in
    // u; tangency means a vanishing discriminant.
    const Vec2 n = perp(tri.b - tri.a);
    auto offset = [&](Point2 p) { return dot(n, p - tri.a); };
    const double g0 = offset(e.curve.p0);
    const double g1 = offset(e.curve.p1);
    const double g2 = offset(e.curve.p2);
    // Bernstein to monomial: g(u) = (g0 - 2g1 + g2) u^2 + 2(g1 - g0) u + g0.
    const double qa = g0 - 2.0 * g1 + g2;
    const double qb = 2.0 * (g1 - g0);
    const double qc = g0;
    const double disc = qb * qb - 4.0 * qa * qc;
    const double scale = std::max(qb * qb, std::abs(4.0 * qa * qc));
    CHECK(std::abs(disc) < 1e-10 * scale);
  }
}

TEST_CASE("cevian point substitution and Steiner membership") {
  const Homogeneous3 h = cevian_point(0.5);
  CHECK(h.x0 == doctest::Approx(-0.5));
  CHECK(h.x1 == doctest::Approx(-0.5));
  CHECK(h.x2 == doctest::Approx(0.25));

  const Homogeneous3 h2 = cevian_point(2.0);
  CHECK(h2.x0 == doctest::Approx(1.0));
  CHECK(h2.x1 == doctest::Approx(-2.0));
  CHECK(h2.x2 == doctest::Approx(-2.0));

  for (double t : {-5.0, 0.25, 0.75, 3.0}) {
    CHECK(std::abs(steiner_residual(cevian_point(t))) < 1e-12);
  }
}

TEST_CASE("opposite vertex classification") {
  CHECK(opposite_vertex(0.5) == Vertex::C);
  CHECK(opposite_vertex(-1.0) == Vertex::B);
  CHECK(opposite_vertex(2.0) == Vertex::A);

  // Segment-membership oracle: the tangency point on the opposite side has
  // normalized coordinates strictly inside (0, 1).
  Rng rng(406);
  for (int i = 0; i < 500; ++i) {
    const double t = random_tangency_param(rng);
    const TangencyTriple pts = tangency_points(t);
    const Vertex v = opposite_vertex(t);
    Homogeneous3 touch{};
    switch (v) {
    case Vertex::A: touch = pts.on_bc.normalized(); break;
    case Vertex::B: touch = pts.on_ca.normalized(); break;
    case Vertex::C: touch = pts.on_ab.normalized(); break;
    }
    // All three coordinates in [0, 1] (one is zero by construction).
    CHECK(touch.x0 > -1e-12);
    CHECK(touch.x1 > -1e-12);
    CHECK(touch.x2 > -1e-12);
    CHECK(touch.x0 < 1.0 + 1e-12);
    CHECK(touch.x1 < 1.0 + 1e-12);
    CHECK(touch.x2 < 1.0 + 1e-12);
  }
}

TEST_CASE("tangency grid layout") {
  const TangencyGrid g = tangency_grid(-1.0, 0.5, 2.0);
  CHECK(g.c0.x0 == doctest::Approx(2.0));
  CHECK(g.c0.x1 == doctest::Approx(-1.0));
  CHECK(g.c1.x0 == doctest::Approx(0.5));
  CHECK(g.c1.x1 == doctest::Approx(0.5));
  CHECK(g.c2.x0 == doctest::Approx(-1.0));
  CHECK(g.c2.x1 == doctest::Approx(2.0));
  CHECK(g.b1.x0 == doctest::Approx(1.0));
  CHECK(g.b1.x2 == doctest::Approx(1.0));

  CHECK_THROWS_AS(tangency_grid(0.5, 0.5, 2.0), DomainError);
}

TEST_CASE("grid labels match the t1 exparabola tangencies") {
  Rng rng(407);
  for (int i = 0; i < 100; ++i) {
    const Triangle tri = random_triangle(rng);
    const auto [t0, t1, t2] = max_exparabola_roots(tri);
    const TangencyGrid g = tangency_grid(t0, t1, t2);
    const Exparabola e = make_exparabola(tri, t1);
    const double scale = longest_side(tri) * std::max(1.0, std::abs(t1));
    CHECK(distance(eval(e.curve, 1.0), to_cartesian(tri, g.a0)) <
          1e-11 * scale);
    CHECK(distance(eval(e.curve, 0.0), to_cartesian(tri, g.b2)) <
          1e-11 * scale);
    CHECK(distance(eval(e.curve, t1), to_cartesian(tri, g.c1)) <
          1e-11 * scale);
  }
}
