#include "support/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "expara/focal.hpp"
#include "expara/iteration.hpp"
#include "expara/version.hpp"

namespace expara::cli {

namespace {

Triangle tri_from_json(const json& j) {
  return {{j[0][0].get<double>(), j[0][1].get<double>()},
          {j[1][0].get<double>(), j[1][1].get<double>()},
          {j[2][0].get<double>(), j[2][1].get<double>()}};
}

BezierParabola parabola_from_json(const json& j) {
  return {{j[0][0].get<double>(), j[0][1].get<double>()},
          {j[1][0].get<double>(), j[1][1].get<double>()},
          {j[2][0].get<double>(), j[2][1].get<double>()}};
}

json parabola_json(const BezierParabola& p) {
  return json::array({point_json(p.p0), point_json(p.p1), point_json(p.p2)});
}

// Shape-bounded parabola sampler; rejects nets whose parameter sits at the
// rounding floor relative to the coordinate size.
BezierParabola sample_parabola(Rng& rng) {
  for (;;) {
    const BezierParabola p{{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)},
                           {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)},
                           {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)}};
    const double diam = std::max({distance(p.p0, p.p1), distance(p.p1, p.p2),
                                  distance(p.p0, p.p2)});
    if (std::abs(control_net_area2(p)) < 1e-3 * diam * diam) continue;
    if (squared_parameter(p) < 1e-6 * diam * diam) continue;
    return p;
  }
}

json tri_sample(Rng& rng) { return json{{"tri", triangle_json(random_triangle(rng))}}; }

json tri_point_sample(Rng& rng) {
  return json{{"tri", triangle_json(random_triangle(rng))},
              {"x", triple_json(random_admissible_point(rng))}};
}

json tri_param_sample(Rng& rng) {
  return json{{"tri", triangle_json(random_triangle(rng))},
              {"t", random_tangency_param(rng)}};
}

double euler_line_residual(const json& s) {
  const TriangleCenters c = centers(tri_from_json(s.at("tri")));
  const Vec2 lhs = c.orthocenter - c.circumcenter;
  const Vec2 rhs = 3.0 * (c.centroid - c.circumcenter);
  return norm(lhs - rhs) / c.circumradius;
}

double bary_roundtrip_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  const Point2 p{s.at("p")[0].get<double>(), s.at("p")[1].get<double>()};
  const Homogeneous3 h = to_barycentric(tri, p);
  const Point2 back = to_cartesian(tri, h);
  const double mag =
      std::max({std::abs(h.x0), std::abs(h.x1), std::abs(h.x2), 1.0});
  return distance(back, p) / (mag * longest_side(tri));
}

double cevian_steiner_residual(const json& s) {
  return std::abs(steiner_residual(cevian_point(s.at("t").get<double>())));
}

double admissible_centroid_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  const Homogeneous3 g = to_barycentric(tri, centers(tri).centroid);
  return is_admissible(g) ? 0.0 : 1.0;
}

double affine_ratio_residual(const json& s) {
  const Point2 x{s.at("x0")[0].get<double>(), s.at("x0")[1].get<double>()};
  const Vec2 d{s.at("dir")[0].get<double>(), s.at("dir")[1].get<double>()};
  const double sy = s.at("sy").get<double>();
  const double sz = s.at("sz").get<double>();
  const auto& m = s.at("map");
  const Point2 y = x + sy * d;
  const Point2 z = x + sz * d;
  auto map = [&](Point2 p) {
    return Point2{m[0].get<double>() * p.x + m[1].get<double>() * p.y +
                      m[4].get<double>(),
                  m[2].get<double>() * p.x + m[3].get<double>() * p.y +
                      m[5].get<double>()};
  };
  const double r1 = affine_ratio(x, y, z);
  const double r2 = affine_ratio(map(x), map(y), map(z));
  return std::abs(r1 - r2) / (1.0 + std::abs(r1));
}

double eval_de_casteljau_residual(const json& s) {
  const BezierParabola p = parabola_from_json(s.at("ctrl"));
  const double u = s.at("u").get<double>();
  const Point2 a = eval(p, u);
  const Point2 b = de_casteljau(p, u).point;
  return distance(a, b) / (1.0 + norm(a - Point2{}));
}

double vertex_orthogonality_residual(const json& s) {
  const BezierParabola p = parabola_from_json(s.at("ctrl"));
  const Vec2 a = axis_direction(p);
  const Vec2 d = derivative(p, vertex_param(p));
  return std::abs(dot(a, d)) / (norm(a) * (1.0 + norm(d)));
}

double curvature_radius_residual(const json& s) {
  const BezierParabola p = parabola_from_json(s.at("ctrl"));
  const Vec2 d1 = derivative(p, vertex_param(p));
  const Vec2 d2 = 2.0 * axis_direction(p);
  const double speed = norm(d1);
  const double kappa = std::abs(cross(d1, d2)) / (speed * speed * speed);
  return std::abs(squared_parameter(p) * kappa * kappa - 1.0);
}

double semi_latus_residual(const json& s) {
  const BezierParabola p = parabola_from_json(s.at("ctrl"));
  const double rho = std::sqrt(squared_parameter(p));
  return std::abs(distance(focus(p), vertex(p)) - 0.5 * rho) / rho;
}

double focus_directrix_residual(const json& s) {
  const BezierParabola p = parabola_from_json(s.at("ctrl"));
  const Point2 f = focus(p);
  const Line2 d = directrix(p);
  double worst = 0.0;
  for (double u : {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0}) {
    const Point2 q = eval(p, u);
    worst = std::max(worst, std::abs(distance(q, f) - line_distance(d, q)) /
                                (1.0 + distance(q, f)));
  }
  return worst;
}

double isometry_equivariance_residual(const json& s) {
  const BezierParabola p = parabola_from_json(s.at("ctrl"));
  const double ca = std::cos(s.at("angle").get<double>());
  const double sa = std::sin(s.at("angle").get<double>());
  const Vec2 shift{s.at("shift")[0].get<double>(), s.at("shift")[1].get<double>()};
  auto mp = [&](Point2 q) {
    return Point2{ca * q.x - sa * q.y + shift.dx, sa * q.x + ca * q.y + shift.dy};
  };
  auto mv = [&](Vec2 v) {
    return Vec2{ca * v.dx - sa * v.dy, sa * v.dx + ca * v.dy};
  };
  const BezierParabola q{mp(p.p0), mp(p.p1), mp(p.p2)};
  double worst = distance(focus(q), mp(focus(p)));
  worst = std::max(worst, distance(vertex(q), mp(vertex(p))));
  worst = std::max(worst, norm(axis_direction(q) - mv(axis_direction(p))));
  worst = std::max(worst, std::abs(squared_parameter(q) - squared_parameter(p)) /
                              squared_parameter(p));
  return worst;
}

double control_reversal_residual(const json& s) {
  const BezierParabola p = parabola_from_json(s.at("ctrl"));
  const BezierParabola r{p.p2, p.p1, p.p0};
  double worst = distance(focus(r), focus(p));
  worst = std::max(worst, distance(vertex(r), vertex(p)));
  worst = std::max(worst, std::abs(squared_parameter(r) - squared_parameter(p)) /
                              squared_parameter(p));
  return worst;
}

double exfocus_circumcircle_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  const Exparabola e = make_exparabola(tri, s.at("t").get<double>());
  const TriangleCenters c = centers(tri);
  return std::abs(distance(focus(e.curve), c.circumcenter) - c.circumradius) /
         c.circumradius;
}

double ceva_product_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  const TangencyTriple pts = tangency_points(s.at("t").get<double>());
  const double prod = affine_ratio(tri.a, tri.b, to_cartesian(tri, pts.on_ab)) *
                      affine_ratio(tri.b, tri.c, to_cartesian(tri, pts.on_bc)) *
                      affine_ratio(tri.c, tri.a, to_cartesian(tri, pts.on_ca));
  return std::abs(prod - 1.0);
}

double ab_tangency_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  const Exparabola e = make_exparabola(tri, s.at("t").get<double>());
  const Vec2 n = perp(tri.b - tri.a);
  auto offset = [&](Point2 p) { return dot(n, p - tri.a); };
  const double g0 = offset(e.curve.p0);
  const double g1 = offset(e.curve.p1);
  const double g2 = offset(e.curve.p2);
  const double qa = g0 - 2.0 * g1 + g2;
  const double qb = 2.0 * (g1 - g0);
  const double qc = g0;
  const double disc = qb * qb - 4.0 * qa * qc;
  return std::abs(disc) / std::max(qb * qb, std::abs(4.0 * qa * qc));
}

double cubic_roots_residual(const json& s) {
  const auto& k = s.at("coeffs");
  const CubicCoeffs c{k[0].get<double>(), k[1].get<double>(),
                      k[2].get<double>(), k[3].get<double>()};
  const CubicRoots r = solve_cubic(c);
  const double maxk = std::max({std::abs(c.k3), std::abs(c.k2),
                                std::abs(c.k1), std::abs(c.k0)});
  double worst = 0.0;
  for (int i = 0; i < r.real_count; ++i) {
    const double m = std::max(1.0, std::abs(r.reals[i]));
    worst = std::max(worst, std::abs(c.eval(r.reals[i])) / (maxk * m * m * m));
  }
  return worst;
}

double interlacing_residual(const json& s) {
  const auto r = max_exparabola_roots(tri_from_json(s.at("tri")));
  const double violation =
      std::max({r[0], -r[1], r[1] - 1.0, 1.0 - r[2]});
  return violation < 0.0 ? 0.0 : 1.0;
}

double local_maximality_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  auto rho2 = [&](double t) {
    return squared_parameter(make_exparabola(tri, t).curve);
  };
  for (double t : max_exparabola_roots(tri)) {
    const double h = 1e-4 * std::max(1.0, std::abs(t));
    if (!(rho2(t + h) < rho2(t) && rho2(t - h) < rho2(t))) return 1.0;
  }
  return 0.0;
}

double stationarity_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  auto rho2 = [&](double t) {
    return squared_parameter(make_exparabola(tri, t).curve);
  };
  double worst = 0.0;
  for (double t : max_exparabola_roots(tri)) {
    const double h = 1e-6;
    const double d = (rho2(t + h) - rho2(t - h)) / (2.0 * h);
    worst = std::max(worst,
                     std::abs(d) / (rho2(t) * std::max(1.0, std::abs(t))));
  }
  return worst;
}

double centroid_coincidence_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  const auto ec = max_exparabola_roots(tri);
  const CubicRoots f = solve_cubic(axis_cubic_coeffs(tri, {1, 1, 1}));
  if (f.real_count != 3) return 1.0;
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, std::abs(f.reals[i] - ec[i]) /
                                std::max(1.0, std::abs(ec[i])));
  }
  return worst;
}

double axis_incidence_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  const XExparabolas xs = x_exparabolas(tri, parse_barycentric(s.at("x")));
  const Point2 xc = to_cartesian(tri, parse_barycentric(s.at("x")));
  const double r = centers(tri).circumradius;
  double worst = 0.0;
  for (const Exparabola* e : {&xs.opposite_a, &xs.opposite_b, &xs.opposite_c}) {
    const Vec2 a = axis_direction(e->curve);
    worst = std::max(worst,
                     std::abs(cross(vertex(e->curve) - xc, a)) / (norm(a) * r));
  }
  return worst;
}

double orthocenter_identity_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  const FocalResult fr = focal_triangle(tri, parse_barycentric(s.at("x")));
  return fr.orthocenter_residual / centers(tri).circumradius;
}

double foci_circumcircle_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  const FocalResult fr = focal_triangle(tri, parse_barycentric(s.at("x")));
  const TriangleCenters c = centers(tri);
  double worst = 0.0;
  for (Point2 f : {fr.focus_a, fr.focus_b, fr.focus_c}) {
    worst = std::max(worst, std::abs(distance(f, c.circumcenter) -
                                     c.circumradius) /
                                c.circumradius);
  }
  return worst;
}

double axes_altitudes_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  const Homogeneous3 x = parse_barycentric(s.at("x"));
  const CubicRoots r = solve_cubic(axis_cubic_coeffs(tri, x));
  if (r.real_count != 3) return 1.0;
  const auto res =
      perpendicularity_check(tri, r.reals[0], r.reals[1], r.reals[2]);
  return std::max({std::abs(res[0]), std::abs(res[1]), std::abs(res[2])});
}

double euler_line_shared_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  const TriangleCenters c = centers(tri);
  const FocalResult fr = focal_triangle(tri, {1, 1, 1});
  const TriangleCenters cf =
      centers(Triangle{fr.focus_a, fr.focus_b, fr.focus_c});
  const Vec2 dir = c.centroid - c.circumcenter;
  double worst = 0.0;
  for (Point2 p : {cf.circumcenter, cf.centroid, cf.orthocenter}) {
    worst = std::max(worst, std::abs(cross(dir, p - c.circumcenter)) /
                                (norm(dir) * c.circumradius));
  }
  return worst;
}

double h_on_roots_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  const CubicRoots r =
      solve_cubic(axis_cubic_coeffs(tri, parse_barycentric(s.at("x"))));
  if (r.real_count != 3) return 1.0;
  return std::abs(h_invariant(tri, r.reals[0], r.reals[1], r.reals[2]));
}

double focus_cross_check_residual(const json& s) {
  const Triangle tri = tri_from_json(s.at("tri"));
  const double t = s.at("t").get<double>();
  const Point2 f1 = exparabola_focus(tri, t);
  const Point2 f2 = focus(make_exparabola(tri, t).curve);
  return distance(f1, f2) / centers(tri).circumradius;
}

double iteration_circle_residual(const json& s) {
  const auto steps = iterate(tri_from_json(s.at("tri")), 50);
  const double r0 = steps[0].circumradius;
  double worst = 0.0;
  for (const FocalStep& st : steps) {
    worst = std::max(worst, distance(st.circumcenter, steps[0].circumcenter) / r0);
    worst = std::max(worst, std::abs(st.circumradius - r0) / r0);
  }
  return worst;
}

double iteration_h_residual(const json& s) {
  const auto steps = iterate(tri_from_json(s.at("tri")), 10);
  const double r0 = steps[0].circumradius;
  double worst = 0.0;
  for (std::size_t k = 1; k < steps.size(); ++k) {
    worst = std::max(worst,
                     distance(steps[k].orthocenter, steps[k - 1].centroid) / r0);
  }
  return worst;
}

double iteration_contraction_residual(const json& s) {
  // Ratios are measured while |G - O| stays above 1e-6 R0; below that the
  // quotient of rounded centroids no longer resolves 1e-8.
  const auto steps = iterate(tri_from_json(s.at("tri")), 12);
  const double r0 = steps[0].circumradius;
  double worst = 0.0;
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    if (distance(steps[k].centroid, steps[k].circumcenter) < 1e-6 * r0) break;
    worst = std::max(worst, std::abs(contraction_ratio(steps[k], steps[k + 1]) -
                                     1.0 / 3.0));
  }
  return worst;
}

double hexagon_residual(const json& s) {
  const LimitHexagon h = limit_hexagon(tri_from_json(s.at("tri")), 1e-9);
  return std::max(h.max_radius_error, h.max_gap_error);
}

std::vector<Invariant> build_suite() {
  std::vector<Invariant> v;

  auto add = [&](std::string name, double tol, int divisor,
                 std::function<json(Rng&)> sample,
                 std::function<double(const json&)> evaluate) {
    v.push_back({std::move(name), tol, divisor, std::move(sample),
                 std::move(evaluate)});
  };

  auto parabola_sample = [](Rng& rng) {
    return json{{"ctrl", parabola_json(sample_parabola(rng))}};
  };

  add("euler_line", 1e-12, 1, tri_sample, euler_line_residual);
  add("bary_roundtrip", 1e-12, 1,
      [](Rng& rng) {
        json s = tri_sample(rng);
        s["p"] = json::array({rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)});
        return s;
      },
      bary_roundtrip_residual);
  add("cevian_on_steiner", 1e-12, 1,
      [](Rng& rng) { return json{{"t", random_tangency_param(rng, 1e-3)}}; },
      cevian_steiner_residual);
  add("admissible_centroid", 0.5, 1, tri_sample, admissible_centroid_residual);
  add("affine_ratio_invariance", 1e-9, 1,
      [](Rng& rng) {
        for (;;) {
          const double dx = rng.uniform(-1, 1), dy = rng.uniform(-1, 1);
          if (std::hypot(dx, dy) < 0.1) continue;
          const double sy = rng.uniform(0.3, 2.0);
          const double sz = rng.uniform(-2.0, 2.0);
          if (std::abs(sy - sz) < 1e-3 || std::abs(sz) < 1e-3) continue;
          const double m00 = rng.uniform(-2, 2), m01 = rng.uniform(-2, 2);
          const double m10 = rng.uniform(-2, 2), m11 = rng.uniform(-2, 2);
          if (std::abs(m00 * m11 - m01 * m10) < 0.1) continue;
          return json{{"x0", json::array({rng.uniform(-2, 2), rng.uniform(-2, 2)})},
                      {"dir", json::array({dx, dy})},
                      {"sy", sy},
                      {"sz", sz},
                      {"map", json::array({m00, m01, m10, m11,
                                           rng.uniform(-2, 2),
                                           rng.uniform(-2, 2)})}};
        }
      },
      affine_ratio_residual);

  add("eval_de_casteljau", 1e-13, 1,
      [parabola_sample](Rng& rng) {
        json s = parabola_sample(rng);
        s["u"] = rng.uniform(-3.0, 4.0);
        return s;
      },
      eval_de_casteljau_residual);
  add("vertex_tangent_orthogonal", 1e-10, 1, parabola_sample,
      vertex_orthogonality_residual);
  add("curvature_radius", 1e-10, 1, parabola_sample, curvature_radius_residual);
  add("semi_latus_rectum", 1e-10, 1, parabola_sample, semi_latus_residual);
  add("focus_directrix", 1e-10, 1, parabola_sample, focus_directrix_residual);
  add("isometry_equivariance", 1e-10, 1,
      [parabola_sample](Rng& rng) {
        json s = parabola_sample(rng);
        s["angle"] = rng.uniform(0.0, 6.283185307179586);
        s["shift"] = json::array({rng.uniform(-5, 5), rng.uniform(-5, 5)});
        return s;
      },
      isometry_equivariance_residual);
  add("control_reversal", 1e-10, 1, parabola_sample, control_reversal_residual);

  add("exparabola_focus_on_circumcircle", 1e-10, 1, tri_param_sample,
      exfocus_circumcircle_residual);
  add("ceva_product", 1e-10, 1, tri_param_sample, ceva_product_residual);
  add("ab_tangency", 1e-10, 1, tri_param_sample, ab_tangency_residual);

  add("cubic_root_residuals", 1e-9, 1,
      [](Rng& rng) {
        for (;;) {
          const double k3 = rng.uniform(-5, 5);
          if (std::abs(k3) < 0.05) continue;
          return json{{"coeffs", json::array({k3, rng.uniform(-5, 5),
                                              rng.uniform(-5, 5),
                                              rng.uniform(-5, 5)})}};
        }
      },
      cubic_roots_residual);
  add("root_interlacing", 0.5, 1, tri_sample, interlacing_residual);
  add("local_maximality", 0.5, 1, tri_sample, local_maximality_residual);
  add("root_stationarity", 1e-6, 1, tri_sample, stationarity_residual);
  add("centroid_root_coincidence", 1e-10, 1, tri_sample,
      centroid_coincidence_residual);

  add("axis_incidence", 1e-9, 1, tri_point_sample, axis_incidence_residual);
  add("orthocenter_identity", 1e-9, 1, tri_point_sample,
      orthocenter_identity_residual);
  add("foci_on_circumcircle", 1e-10, 1, tri_point_sample,
      foci_circumcircle_residual);
  add("axes_are_altitudes", 1e-9, 1, tri_point_sample, axes_altitudes_residual);
  add("shared_euler_line", 1e-9, 1,
      [](Rng& rng) {
        for (;;) {
          const Triangle tri = random_triangle(rng);
          const TriangleCenters c = centers(tri);
          if (distance(c.centroid, c.circumcenter) < 1e-3 * c.circumradius) {
            continue; // the Euler line needs a direction
          }
          return json{{"tri", triangle_json(tri)}};
        }
      },
      euler_line_shared_residual);
  add("h_vanishes_on_roots", 1e-9, 1, tri_point_sample, h_on_roots_residual);
  add("focus_cross_check", 1e-10, 1, tri_param_sample,
      focus_cross_check_residual);

  add("iteration_constant_circumcircle", 1e-9, 20, tri_sample,
      iteration_circle_residual);
  add("iteration_orthocenter_tracks_centroid", 1e-9, 10, tri_sample,
      iteration_h_residual);
  add("iteration_contraction_one_third", 1e-8, 10, tri_sample,
      iteration_contraction_residual);
  add("limit_hexagon_regular", 1e-8, 20, tri_sample, hexagon_residual);

  return v;
}

} // namespace

const std::vector<Invariant>& invariant_suite() {
  static const std::vector<Invariant> suite = build_suite();
  return suite;
}

json run_verify(int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("verify needs trials >= 1");

  json invariants = json::array();
  json failures = json::array();
  bool all_pass = true;

  for (const Invariant& inv : invariant_suite()) {
    // Per-suite seed derived from the name: results do not depend on suite
    // order and independent suites could run concurrently.
    Rng rng(seed ^ fnv1a(inv.name));
    const int n = std::max(1, trials / inv.trial_divisor);

    double worst = -1.0;
    json worst_sample;
    int fail_count = 0;
    for (int i = 0; i < n; ++i) {
      const json sample = inv.sample(rng);
      const double residual = inv.evaluate(sample);
      if (residual > worst) {
        worst = residual;
        worst_sample = sample;
      }
      if (residual > inv.tolerance) {
        ++fail_count;
        if (failures.size() < 25) {
          failures.push_back(json{{"invariant", inv.name},
                                  {"sample", sample},
                                  {"residual", residual}});
        }
      }
    }
    const bool pass = fail_count == 0;
    all_pass = all_pass && pass;
    invariants.push_back(json{{"name", inv.name},
                              {"trials", n},
                              {"tolerance", inv.tolerance},
                              {"worst_residual", worst},
                              {"pass", pass},
                              {"worst_sample", worst_sample}});
  }

  return json{{"tool", "exparabola"},
              {"version", std::string(kVersion)},
              {"command", "verify"},
              {"seed", seed},
              {"trials", trials},
              {"pass", all_pass},
              {"invariants", invariants},
              {"failures", failures}};
}

json run_replay(const json& report) {
  if (!report.contains("invariants")) {
    throw DomainError("replay input is not a verify report");
  }
  json rows = json::array();
  for (const json& row : report.at("invariants")) {
    const std::string name = row.at("name").get<std::string>();
    const auto& suite = invariant_suite();
    const auto it = std::find_if(suite.begin(), suite.end(),
                                 [&](const Invariant& i) { return i.name == name; });
    if (it == suite.end()) {
      throw DomainError("unknown invariant in replay input: " + name);
    }
    const double residual = it->evaluate(row.at("worst_sample"));
    rows.push_back(json{{"invariant", name},
                        {"residual", residual},
                        {"matches_report",
                         residual == row.at("worst_residual").get<double>()}});
  }
  return json{{"tool", "exparabola"},
              {"version", std::string(kVersion)},
              {"command", "replay"},
              {"results", rows}};
}

} // namespace expara::cli
