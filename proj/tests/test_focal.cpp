#include <doctest.h>

#include <cmath>

#include "expara/focal.hpp"
#include "test_helpers.hpp"

using namespace expara;
using namespace expara::testing;

namespace {

// Perpendicular distance of x from the axis line of an exparabola, relative
// to the circumradius.
double axis_incidence_residual(const Exparabola& e, Point2 x, double r) {
  const Vec2 a = axis_direction(e.curve);
  const Point2 v = vertex(e.curve);
  return std::abs(cross(v - x, a)) / (norm(a) * r);
}

} // namespace

TEST_CASE("closed-form focus agrees with the control-point focus") {
  Rng rng(501);
  for (int i = 0; i < 1000; ++i) {
    const Triangle tri = random_triangle(rng);
    const double t = random_tangency_param(rng);
    const Point2 f1 = exparabola_focus(tri, t);
    const Point2 f2 = focus(make_exparabola(tri, t).curve);
    const double r = centers(tri).circumradius;
    CHECK(distance(f1, f2) < 1e-10 * r);
  }
}

TEST_CASE("closed-form axis matches the control-point axis direction") {
  Rng rng(502);
  for (int i = 0; i < 300; ++i) {
    const Triangle tri = random_triangle(rng);
    const double t = random_tangency_param(rng);
    const Vec2 a1 = exparabola_axis(tri, t);
    const Vec2 a2 = axis_direction(make_exparabola(tri, t).curve);
    CHECK(std::abs(cross(a1, a2)) < 1e-10 * norm(a1) * norm(a2));
  }
}

TEST_CASE("x-exparabolas at the centroid are the max-exparabolas") {
  Rng rng(503);
  for (int i = 0; i < 100; ++i) {
    const Triangle tri = random_triangle(rng);
    const XExparabolas xs = x_exparabolas(tri, {1, 1, 1});
    const auto [t0, t1, t2] = max_exparabola_roots(tri);
    CHECK(xs.opposite_b.t == doctest::Approx(t0).epsilon(1e-12));
    CHECK(xs.opposite_c.t == doctest::Approx(t1).epsilon(1e-12));
    CHECK(xs.opposite_a.t == doctest::Approx(t2).epsilon(1e-12));
  }
}

TEST_CASE("equilateral t = 1/2 max-exparabola has a vertical axis through G") {
  const Triangle tri = equilateral_unit();
  const XExparabolas xs = x_exparabolas(tri, {1, 1, 1});
  const Vec2 a = axis_direction(xs.opposite_c.curve);
  CHECK(std::abs(a.dx) < 1e-13 * norm(a));
  const Point2 v = vertex(xs.opposite_c.curve);
  CHECK(v.x == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("axes of the x-exparabolas pass through x") {
  Rng rng(504);
  for (int i = 0; i < 1000; ++i) {
    const Triangle tri = random_triangle(rng);
    const Homogeneous3 x = random_admissible_point(rng);
    const XExparabolas xs = x_exparabolas(tri, x);
    const Point2 xc = to_cartesian(tri, x);
    const double r = centers(tri).circumradius;
    CHECK(axis_incidence_residual(xs.opposite_a, xc, r) < 1e-9);
    CHECK(axis_incidence_residual(xs.opposite_b, xc, r) < 1e-9);
    CHECK(axis_incidence_residual(xs.opposite_c, xc, r) < 1e-9);
  }
}

TEST_CASE("x_exparabolas rejects inadmissible points") {
  CHECK_THROWS_AS(x_exparabolas(right_isoceles(), {3, -1, -1}), DomainError);
  CHECK_THROWS_AS(x_exparabolas(right_isoceles(), {1, 1, -1}), DomainError);
}

TEST_CASE("equilateral focal triangle is the 60-degree rotation") {
  const Triangle tri = equilateral_unit();
  const FocalResult fr = focal_triangle(tri, {1, 1, 1});
  REQUIRE(fr.all_real);
  const double r3 = std::sqrt(3.0);
  CHECK(distance(fr.focus_c, {0.5, -r3 / 6.0}) < 1e-13);
  CHECK(distance(fr.focus_a, {1.0, r3 / 3.0}) < 1e-13);
  CHECK(distance(fr.focus_b, {0.0, r3 / 3.0}) < 1e-13);

  // Rotating the source triangle by +60 degrees about the circumcenter
  // maps (A, B, C) to (F_C, F_A, F_B).
  const TriangleCenters c = centers(tri);
  auto rot60 = [&](Point2 p) {
    const Vec2 d = p - c.circumcenter;
    const double ca = 0.5, sa = r3 / 2.0;
    return c.circumcenter + Vec2{ca * d.dx - sa * d.dy, sa * d.dx + ca * d.dy};
  };
  CHECK(distance(rot60(tri.a), fr.focus_c) < 1e-13);
  CHECK(distance(rot60(tri.b), fr.focus_a) < 1e-13);
  CHECK(distance(rot60(tri.c), fr.focus_b) < 1e-13);

  CHECK(fr.orthocenter_residual < 1e-13);
}

TEST_CASE("orthocenter of the focal triangle is x itself") {
  Rng rng(505);
  for (int i = 0; i < 1000; ++i) {
    const Triangle tri = random_triangle(rng);
    const Homogeneous3 x = random_admissible_point(rng);
    const FocalResult fr = focal_triangle(tri, x);
    REQUIRE(fr.all_real);
    const double r = centers(tri).circumradius;
    CHECK(fr.orthocenter_residual < 1e-9 * r);
  }
}

TEST_CASE("all three foci lie on the circumcircle") {
  Rng rng(506);
  for (int i = 0; i < 1000; ++i) {
    const Triangle tri = random_triangle(rng);
    const Homogeneous3 x = random_admissible_point(rng);
    const FocalResult fr = focal_triangle(tri, x);
    const TriangleCenters c = centers(tri);
    for (Point2 f : {fr.focus_a, fr.focus_b, fr.focus_c}) {
      CHECK(std::abs(distance(f, c.circumcenter) - c.circumradius) <
            1e-10 * c.circumradius);
    }
  }
}

TEST_CASE("complex regime reports real parts and the imaginary magnitude") {
  const Triangle tri = right_isoceles();
  const FocalResult fr = focal_triangle(tri, {3, -1, -1});
  CHECK_FALSE(fr.all_real);
  CHECK(fr.roots.kind == RootKind::OneRealOneComplexPair);
  CHECK(fr.max_focus_imag > 0.0);
  // Conjugate roots give conjugate foci: two real parts coincide and the
  // orthocenter is unavailable.
  CHECK(std::isnan(fr.orthocenter_residual));
}

TEST_CASE("h invariant vanishes exactly on root triples") {
  const Triangle eq = equilateral_unit();
  CHECK(std::abs(h_invariant(eq, -1.0, 0.5, 2.0)) < 1e-12);

  Rng rng(507);
  for (int i = 0; i < 200; ++i) {
    const Triangle tri = random_triangle(rng);
    const Homogeneous3 x = random_admissible_point(rng);
    const CubicRoots r = solve_cubic(axis_cubic_coeffs(tri, x));
    REQUIRE(r.real_count == 3);
    CHECK(std::abs(h_invariant(tri, r.reals[0], r.reals[1], r.reals[2])) <
          1e-9);
  }

  // Non-root witness: the equilateral root triple on a scalene triangle.
  const Triangle scalene{{0, 0}, {4, 0}, {1, 2.5}};
  CHECK(std::abs(h_invariant(scalene, 0.5, 2.0, -1.0)) > 1e-4);
}

TEST_CASE("Vieta forms of the axis cubic match the closed expressions") {
  Rng rng(508);
  for (int i = 0; i < 200; ++i) {
    const Triangle tri = random_triangle(rng);
    const Homogeneous3 x = random_admissible_point(rng);
    const CubicRoots r = solve_cubic(axis_cubic_coeffs(tri, x));
    REQUIRE(r.real_count == 3);
    const double u = r.reals[0], v = r.reals[1], w = r.reals[2];
    const auto [a, b, c] = side_lengths(tri);
    const double a2 = a * a, b2 = b * b, c2 = c * c;
    const Homogeneous3 n = x.normalized();
    const double den = c2 * (n.x0 + n.x1);

    const double e3 = -a2 * (n.x1 + n.x2) / den;
    const double e2 = -(a2 * (n.x1 + 2.0 * n.x2) + (b2 - c2) * n.x0) / den;
    const double e1 = (c2 * (2.0 * n.x0 + n.x1) + (b2 - a2) * n.x2) / den;

    CHECK(std::abs(u * v * w - e3) < 1e-9 * std::max(1.0, std::abs(e3)));
    CHECK(std::abs(u * v + v * w + w * u - e2) <
          1e-9 * std::max(1.0, std::abs(e2)));
    CHECK(std::abs(u + v + w - e1) < 1e-9 * std::max(1.0, std::abs(e1)));
  }
}

TEST_CASE("perpendicularity residuals vanish simultaneously on roots") {
  const Triangle eq = equilateral_unit();
  const auto r_eq = perpendicularity_check(eq, -1.0, 0.5, 2.0);
  for (double r : r_eq) CHECK(std::abs(r) < 1e-12);

  Rng rng(509);
  for (int i = 0; i < 200; ++i) {
    const Triangle tri = random_triangle(rng);
    const Homogeneous3 x = random_admissible_point(rng);
    const CubicRoots roots = solve_cubic(axis_cubic_coeffs(tri, x));
    REQUIRE(roots.real_count == 3);
    const auto res =
        perpendicularity_check(tri, roots.reals[0], roots.reals[1],
                               roots.reals[2]);
    for (double r : res) CHECK(std::abs(r) < 1e-9);
  }

  // A generic triple fails all three conditions at once.
  const Triangle scalene{{0, 0}, {4, 0}, {1, 2.5}};
  const auto res = perpendicularity_check(scalene, 0.5, 2.0, -1.0);
  for (double r : res) CHECK(std::abs(r) > 1e-6);
}

TEST_CASE("axes are the altitudes of the focal triangle") {
  Rng rng(510);
  for (int i = 0; i < 300; ++i) {
    const Triangle tri = random_triangle(rng);
    const Homogeneous3 x = random_admissible_point(rng);
    const XExparabolas xs = x_exparabolas(tri, x);
    const FocalResult fr = focal_triangle(tri, x);
    const double r = centers(tri).circumradius;

    struct Pair { const Exparabola* e; Point2 self; Point2 o1; Point2 o2; };
    const Pair pairs[3] = {
        {&xs.opposite_a, fr.focus_a, fr.focus_b, fr.focus_c},
        {&xs.opposite_b, fr.focus_b, fr.focus_c, fr.focus_a},
        {&xs.opposite_c, fr.focus_c, fr.focus_a, fr.focus_b},
    };
    for (const Pair& p : pairs) {
      const Vec2 a = axis_direction(p.e->curve);
      // The axis passes through its focus, which is the focal-triangle
      // vertex...
      CHECK(distance(focus(p.e->curve), p.self) < 1e-9 * r);
      // ...and is perpendicular to the opposite side.
      const Vec2 side = p.o1 - p.o2;
      CHECK(std::abs(dot(a, side)) / (norm(a) * norm(side)) < 1e-9);
    }
  }
}

TEST_CASE("source and centroid-focal triangle share the Euler line") {
  Rng rng(511);
  for (int i = 0; i < 300; ++i) {
    const Triangle tri = random_triangle(rng);
    const TriangleCenters c = centers(tri);
    if (distance(c.centroid, c.circumcenter) < 1e-6 * c.circumradius) {
      continue; // Euler line undefined for (near-)equilateral input
    }
    const FocalResult fr = focal_triangle(tri, {1, 1, 1});
    const Triangle focal{fr.focus_a, fr.focus_b, fr.focus_c};
    const TriangleCenters cf = centers(focal);

    const Vec2 dir = c.centroid - c.circumcenter;
    auto off_line = [&](Point2 p) {
      return std::abs(cross(dir, p - c.circumcenter)) /
             (norm(dir) * c.circumradius);
    };
    CHECK(off_line(cf.circumcenter) < 1e-9);
    CHECK(off_line(cf.centroid) < 1e-9);
    CHECK(off_line(cf.orthocenter) < 1e-9);
  }
}

TEST_CASE("Steiner-inscribed triangle") {
  const SteinerInscribed s = steiner_inscribed_triangle(equilateral_unit());
  // X3 belongs to the root 1/2 exparabola: barycentrics (-2, -2, 1)/(-3).
  const Point2 x3 =
      to_cartesian(equilateral_unit(), Homogeneous3{-2, -2, 1});
  CHECK(distance(s.x3, x3) < 1e-13);
  for (double r : s.concurrency_residuals) CHECK(r < 1e-12);

  Rng rng(512);
  for (int i = 0; i < 200; ++i) {
    const Triangle tri = random_triangle(rng);
    const SteinerInscribed si = steiner_inscribed_triangle(tri);
    for (double r : si.concurrency_residuals) CHECK(r < 1e-9);
    // Each vertex lies on the Steiner circumellipse.
    for (Point2 p : {si.x1, si.x2, si.x3}) {
      CHECK(std::abs(steiner_residual(to_barycentric(tri, p))) < 1e-10);
    }
  }
}

TEST_CASE("focal triangle rejects coincident exparabolas") {
  // Roots collide only in degenerate configurations; synthesize one by
  // feeding the cevian-line boundary point directly.
  const Triangle tri = right_isoceles();
  CHECK_THROWS_AS(focal_triangle(tri, {1, -1, 1}), DomainError);
}
