#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "expara/iteration.hpp"
#include "test_helpers.hpp"

using namespace expara;
using namespace expara::testing;

namespace {

// Compare two triangles as unordered vertex sets.
double set_distance(const Triangle& s, const Triangle& t) {
  const Point2 sv[3] = {s.a, s.b, s.c};
  const Point2 tv[3] = {t.a, t.b, t.c};
  double worst = 0.0;
  for (const Point2& p : sv) {
    double best = 1e300;
    for (const Point2& q : tv) best = std::min(best, distance(p, q));
    worst = std::max(worst, best);
  }
  return worst;
}

} // namespace

TEST_CASE("equilateral input alternates between two rotated copies") {
  const Triangle tri = equilateral_unit();
  const auto steps = iterate(tri, 6);
  REQUIRE(steps.size() == 7);
  const Point2 o = steps[0].circumcenter;
  for (const FocalStep& s : steps) {
    CHECK(s.equilateral_deviation < 1e-13);
    CHECK(distance(s.centroid, o) < 1e-13);
  }
  for (std::size_t i = 2; i < steps.size(); ++i) {
    CHECK(set_distance(steps[i].tri, steps[i - 2].tri) < 1e-12);
  }
  CHECK(set_distance(steps[1].tri, steps[0].tri) > 0.1);
}

TEST_CASE("next orthocenter equals the previous centroid") {
  Rng rng(601);
  for (int i = 0; i < 100; ++i) {
    const Triangle tri = random_triangle(rng);
    const auto steps = iterate(tri, 10);
    const double r0 = steps[0].circumradius;
    for (std::size_t k = 1; k < steps.size(); ++k) {
      CHECK(distance(steps[k].orthocenter, steps[k - 1].centroid) <
            1e-9 * r0);
    }
  }
}

TEST_CASE("circumcenter and circumradius stay constant over 50 steps") {
  Rng rng(602);
  for (int i = 0; i < 25; ++i) {
    const Triangle tri = random_triangle(rng);
    const auto steps = iterate(tri, 50);
    const double r0 = steps[0].circumradius;
    for (const FocalStep& s : steps) {
      CHECK(distance(s.circumcenter, steps[0].circumcenter) < 1e-9 * r0);
      CHECK(std::abs(s.circumradius - r0) < 1e-9 * r0);
    }
  }
}

TEST_CASE("centroid distance contracts by one third per step") {
  // The ratio is measured on computed centroids, so it is only meaningful
  // while |G_i - O| stays well above the rounding floor of the focal map
  // (about 1e-16 R per step).  1e-6 R keeps the quotient accurate to 1e-9.
  Rng rng(603);
  for (int i = 0; i < 100; ++i) {
    const Triangle tri = random_triangle(rng);
    const auto steps = iterate(tri, 12);
    const double r0 = steps[0].circumradius;
    for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
      const double d = distance(steps[k].centroid, steps[k].circumcenter);
      if (d < 1e-6 * r0) break;
      const double ratio = contraction_ratio(steps[k], steps[k + 1]);
      CHECK(std::abs(ratio - 1.0 / 3.0) < 1e-8);
    }
  }
}

TEST_CASE("orthocenter distance contracts by one third as well") {
  Rng rng(604);
  for (int i = 0; i < 50; ++i) {
    const Triangle tri = random_triangle(rng);
    const auto steps = iterate(tri, 10);
    const double r0 = steps[0].circumradius;
    const Point2 o = steps[0].circumcenter;
    for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
      const double d = distance(steps[k].orthocenter, o);
      if (d < 1e-5 * r0) break;
      const double ratio = distance(steps[k + 1].orthocenter, o) / d;
      CHECK(std::abs(ratio - 1.0 / 3.0) < 1e-8);
    }
  }
}

TEST_CASE("geometric decay of |G_i - O|") {
  Rng rng(605);
  for (int i = 0; i < 50; ++i) {
    const Triangle tri = random_triangle(rng);
    const auto steps = iterate(tri, 12);
    const double r0 = steps[0].circumradius;
    const double d0 = distance(steps[0].centroid, steps[0].circumcenter);
    for (std::size_t k = 1; k < steps.size(); ++k) {
      const double expected = d0 / std::pow(3.0, static_cast<double>(k));
      if (expected < 1e-6 * r0) break;
      const double d = distance(steps[k].centroid, steps[0].circumcenter);
      CHECK(std::abs(d - expected) < 1e-7 * expected);
    }
  }
}

TEST_CASE("equilateral deviation dies out") {
  Rng rng(606);
  for (int i = 0; i < 25; ++i) {
    const Triangle tri = random_triangle(rng);
    const auto steps = iterate(tri, 40);
    CHECK(steps[40].equilateral_deviation < 1e-10);
  }
}

TEST_CASE("contraction_ratio input validation") {
  const auto steps = iterate(equilateral_unit(), 2);
  CHECK_THROWS_AS(contraction_ratio(steps[0], steps[1]), DomainError);

  const auto sc = iterate(Triangle{{0, 0}, {4, 0}, {1, 2.5}}, 3);
  CHECK_THROWS_AS(contraction_ratio(sc[0], sc[2]), DomainError);
  CHECK(contraction_ratio(sc[0], sc[1]) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("parity subsequences converge to two fixed triangles") {
  Rng rng(607);
  for (int i = 0; i < 10; ++i) {
    const Triangle tri = random_triangle(rng);
    const auto steps = iterate(tri, 44);
    const double r0 = steps[0].circumradius;
    CHECK(set_distance(steps[44].tri, steps[42].tri) < 1e-10 * r0);
    CHECK(set_distance(steps[43].tri, steps[41].tri) < 1e-10 * r0);
    CHECK(equilateral_deviation(steps[44].tri) < 1e-10);
    CHECK(equilateral_deviation(steps[43].tri) < 1e-10);
  }
}

TEST_CASE("limit hexagon of an equilateral input needs two steps") {
  const LimitHexagon h = limit_hexagon(equilateral_unit(), 1e-9);
  CHECK(h.steps_used == 1);
  CHECK(h.max_radius_error < 1e-12);
  CHECK(h.max_gap_error < 1e-12);
}

TEST_CASE("limit hexagon of scalene inputs") {
  Rng rng(608);
  for (int i = 0; i < 25; ++i) {
    const Triangle tri = random_triangle(rng);
    const LimitHexagon h = limit_hexagon(tri, 1e-9);
    CHECK(h.max_radius_error < 1e-8);
    CHECK(h.max_gap_error < 1e-8);

    // Vertices alternate between the even and the odd limit triangle.
    const Point2 ev[3] = {h.even_limit.a, h.even_limit.b, h.even_limit.c};
    auto in_even = [&](Point2 p) {
      for (const Point2& q : ev) {
        if (distance(p, q) < 1e-9) return true;
      }
      return false;
    };
    for (int k = 0; k < 6; ++k) {
      CHECK(in_even(h.vertices[k]) != in_even(h.vertices[(k + 1) % 6]));
    }
  }
}

TEST_CASE("limit hexagon cap") {
  CHECK_THROWS_AS(limit_hexagon(Triangle{{0, 0}, {4, 0}, {1, 2.5}}, 1e-18, 60),
                  IterationCapExceeded);
}

TEST_CASE("iteration about a non-centroid admissible base point") {
  // Circumcircle constancy and the orthocenter identity hold for any fixed
  // admissible base; convergence is not asserted here.
  Rng rng(609);
  const Homogeneous3 base{0.4, 0.35, 0.25};
  for (int i = 0; i < 10; ++i) {
    const Triangle tri = random_triangle(rng);
    const auto steps = iterate(tri, 8, base);
    const double r0 = steps[0].circumradius;
    for (const FocalStep& s : steps) {
      CHECK(distance(s.circumcenter, steps[0].circumcenter) < 1e-9 * r0);
      CHECK(std::abs(s.circumradius - r0) < 1e-9 * r0);
    }
    for (std::size_t k = 1; k < steps.size(); ++k) {
      const Point2 x_prev = to_cartesian(steps[k - 1].tri, base);
      CHECK(distance(steps[k].orthocenter, x_prev) < 1e-8 * r0);
    }
  }
}
