#include "support/report.hpp"

#include <algorithm>
#include <cmath>

#include "expara/focal.hpp"
#include "expara/iteration.hpp"
#include "expara/version.hpp"

namespace expara::cli {

namespace {

json report_header(const char* command, const TriangleSpec& spec,
                   const Options& opt) {
  return json{{"tool", "exparabola"},
              {"version", std::string(kVersion)},
              {"command", command},
              {"seed", opt.seed},
              {"inputs", spec.echo}};
}

json invariant_row(const char* name, double residual, double tolerance) {
  return json{{"name", name},
              {"residual", residual},
              {"tolerance", tolerance},
              {"pass", residual <= tolerance}};
}

json centers_json(const TriangleCenters& c) {
  return json{{"G", point_json(c.centroid)},
              {"O", point_json(c.circumcenter)},
              {"H", point_json(c.orthocenter)},
              {"R", c.circumradius}};
}

json grid_json(const TangencyGrid& g) {
  return json{{"A0", triple_json(g.a0)}, {"A1", triple_json(g.a1)},
              {"A2", triple_json(g.a2)}, {"B0", triple_json(g.b0)},
              {"B1", triple_json(g.b1)}, {"B2", triple_json(g.b2)},
              {"C0", triple_json(g.c0)}, {"C1", triple_json(g.c1)},
              {"C2", triple_json(g.c2)}};
}

json exparabola_json(const Triangle& tri, double t) {
  const Exparabola e = make_exparabola(tri, t);
  const Point2 f = exparabola_focus(tri, t);
  const Vec2 axis = exparabola_axis(tri, t);
  return json{{"t", t},
              {"opposite", to_string(opposite_vertex(t))},
              {"control_points",
               json::array({point_json(e.curve.p0), point_json(e.curve.p1),
                            point_json(e.curve.p2)})},
              {"focus", point_json(f)},
              {"vertex", point_json(vertex(e.curve))},
              {"axis", json{{"point", point_json(f)}, {"direction", vec_json(axis)}}},
              {"squared_parameter", squared_parameter(e.curve)}};
}

} // namespace

json run_max(const TriangleSpec& spec, const Options& opt) {
  const Triangle& tri = spec.tri;
  const TriangleCenters cen = centers(tri);
  const CubicCoeffs ec = max_cubic_coeffs(tri, Side::C);
  const auto [t0, t1, t2] = max_exparabola_roots(tri);
  const TangencyGrid grid = tangency_grid(t0, t1, t2);

  json report = report_header("max", spec, opt);
  json results;
  results["cubic"] = json{{"k3", ec.k3}, {"k2", ec.k2}, {"k1", ec.k1},
                          {"k0", ec.k0}};
  results["roots"] = json{{"t0", t0}, {"t1", t1}, {"t2", t2},
                          {"interlaced", t0 < 0.0 && 0.0 < t1 && t1 < 1.0 &&
                                             1.0 < t2}};
  results["tangency_grid"] = grid_json(grid);
  results["exparabolas"] = json::array(
      {exparabola_json(tri, t0), exparabola_json(tri, t1),
       exparabola_json(tri, t2)});
  results["centers"] = centers_json(cen);
  report["results"] = results;

  // Per-input invariant table.
  const double interlace_violation =
      std::max({t0, -t1, t1 - 1.0, 1.0 - t2});
  double circum = 0.0, through_g = 0.0, ceva = 0.0, steiner = 0.0,
         stationary = 0.0;
  for (double t : {t0, t1, t2}) {
    const Exparabola e = make_exparabola(tri, t);
    const Point2 f = focus(e.curve);
    circum = std::max(circum,
                      std::abs(distance(f, cen.circumcenter) -
                               cen.circumradius) /
                          cen.circumradius);
    const Vec2 a = axis_direction(e.curve);
    through_g = std::max(through_g,
                         std::abs(cross(vertex(e.curve) - cen.centroid, a)) /
                             (norm(a) * cen.circumradius));
    const TangencyTriple pts = tangency_points(t);
    const double prod =
        affine_ratio(tri.a, tri.b, to_cartesian(tri, pts.on_ab)) *
        affine_ratio(tri.b, tri.c, to_cartesian(tri, pts.on_bc)) *
        affine_ratio(tri.c, tri.a, to_cartesian(tri, pts.on_ca));
    ceva = std::max(ceva, std::abs(prod - 1.0));
    steiner = std::max(steiner, std::abs(steiner_residual(cevian_point(t))));

    auto rho2 = [&](double s) {
      return squared_parameter(make_exparabola(tri, s).curve);
    };
    const double h = 1e-6;
    const double d = (rho2(t + h) - rho2(t - h)) / (2.0 * h);
    stationary = std::max(stationary,
                          std::abs(d) / (rho2(t) * std::max(1.0, std::abs(t))));
  }
  report["invariants"] = json::array(
      {invariant_row("root_interlacing", interlace_violation, 0.0),
       invariant_row("focus_on_circumcircle", circum, 1e-10),
       invariant_row("axis_through_centroid", through_g, 1e-9),
       invariant_row("ceva_product", ceva, 1e-10),
       invariant_row("cevian_on_steiner", steiner, 1e-12),
       invariant_row("root_stationarity", stationary, 1e-6)});
  return report;
}

json run_xfocal(const TriangleSpec& spec, const Homogeneous3& x,
                const Options& opt) {
  const Triangle& tri = spec.tri;
  const TriangleCenters cen = centers(tri);
  const CubicCoeffs f = axis_cubic_coeffs(tri, x);
  const bool admissible = is_admissible(x);
  const FocalResult fr = focal_triangle(tri, x);

  json report = report_header("xfocal", spec, opt);
  report["inputs"]["x"] = triple_json(x);

  json roots;
  roots["kind"] = fr.all_real ? "three_real" : "one_real_one_complex_pair";
  json reals = json::array();
  for (int i = 0; i < fr.roots.real_count; ++i) {
    reals.push_back(fr.roots.reals[i]);
  }
  roots["reals"] = reals;
  if (fr.roots.complex_pair) {
    roots["complex_pair"] = json{{"re", fr.roots.complex_pair->real()},
                                 {"im", fr.roots.complex_pair->imag()}};
  }
  roots["clustered"] = fr.roots.clustered;
  roots["quadratic_fallback"] = fr.roots.quadratic_fallback;

  json results;
  results["cubic"] = json{{"k3", f.k3}, {"k2", f.k2}, {"k1", f.k1},
                          {"k0", f.k0}};
  results["admissible"] = admissible;
  results["roots"] = roots;
  results["foci"] = json{{"F_A", point_json(fr.focus_a)},
                         {"F_B", point_json(fr.focus_b)},
                         {"F_C", point_json(fr.focus_c)}};
  results["all_real"] = fr.all_real;
  results["max_focus_imag"] = fr.max_focus_imag;
  results["orthocenter_residual"] =
      std::isnan(fr.orthocenter_residual) ? json(nullptr)
                                          : json(fr.orthocenter_residual);
  results["centers"] = centers_json(cen);
  report["results"] = results;

  json table = json::array();
  if (fr.all_real) {
    table.push_back(invariant_row("orthocenter_identity",
                                  fr.orthocenter_residual / cen.circumradius,
                                  1e-9));
    double circum = 0.0;
    for (Point2 p : {fr.focus_a, fr.focus_b, fr.focus_c}) {
      circum = std::max(circum, std::abs(distance(p, cen.circumcenter) -
                                         cen.circumradius) /
                                    cen.circumradius);
    }
    table.push_back(invariant_row("foci_on_circumcircle", circum, 1e-10));
    table.push_back(invariant_row(
        "h_vanishes_on_roots",
        std::abs(h_invariant(tri, fr.roots.reals[0], fr.roots.reals[1],
                             fr.roots.reals[2])),
        1e-9));
    if (admissible) {
      const XExparabolas xs = x_exparabolas(tri, x);
      const Point2 xc = to_cartesian(tri, x);
      double incid = 0.0;
      for (const Exparabola* e :
           {&xs.opposite_a, &xs.opposite_b, &xs.opposite_c}) {
        const Vec2 a = axis_direction(e->curve);
        incid = std::max(incid, std::abs(cross(vertex(e->curve) - xc, a)) /
                                    (norm(a) * cen.circumradius));
      }
      table.push_back(invariant_row("axis_incidence", incid, 1e-9));
    }
  }
  report["invariants"] = table;
  return report;
}

json run_iterate(const TriangleSpec& spec, int steps, const Options& opt,
                 const std::optional<Homogeneous3>& base) {
  if (steps < 1) throw DomainError("iterate needs at least one step");
  const bool experimental = base.has_value();
  const auto seq = experimental ? iterate(spec.tri, steps, *base)
                                : iterate(spec.tri, steps);
  const double r0 = seq[0].circumradius;

  json report = report_header("iterate", spec, opt);
  report["inputs"]["steps"] = steps;
  report["inputs"]["tol"] = opt.tol;
  if (experimental) report["inputs"]["base"] = triple_json(*base);

  json rows = json::array();
  double worst_h = 0.0, worst_circle = 0.0, worst_ratio = 0.0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const FocalStep& s = seq[k];
    json row{{"index", s.index},
             {"O", point_json(s.circumcenter)},
             {"G", point_json(s.centroid)},
             {"H", point_json(s.orthocenter)},
             {"R", s.circumradius},
             {"deviation", s.equilateral_deviation}};
    const double d = distance(s.centroid, s.circumcenter);
    const bool converged_row = d <= 1e-12 * r0;
    row["converged"] = converged_row;
    if (k + 1 < seq.size() && !converged_row) {
      const double ratio = contraction_ratio(seq[k], seq[k + 1]);
      row["ratio"] = ratio;
      // Below 1e-6 R0 the quotient of rounded centroids cannot resolve the
      // exact 1/3 any more; keep those rows out of the aggregate.
      if (d >= 1e-6 * r0) {
        worst_ratio = std::max(worst_ratio, std::abs(ratio - 1.0 / 3.0));
      }
    } else {
      row["ratio"] = nullptr;
    }
    rows.push_back(row);

    worst_circle = std::max(
        {worst_circle, distance(s.circumcenter, seq[0].circumcenter) / r0,
         std::abs(s.circumradius - r0) / r0});
    if (k > 0 && !experimental) {
      worst_h = std::max(worst_h, distance(s.orthocenter,
                                           seq[k - 1].centroid) / r0);
    }
  }

  json results;
  results["steps"] = rows;

  bool converged = false;
  if (!experimental) {
    for (std::size_t k = 1; k < seq.size(); ++k) {
      if (seq[k - 1].equilateral_deviation < opt.tol &&
          seq[k].equilateral_deviation < opt.tol) {
        converged = true;
        break;
      }
    }
    if (converged) {
      const LimitHexagon h = limit_hexagon(spec.tri, opt.tol, steps);
      json verts = json::array();
      for (const Point2& p : h.vertices) verts.push_back(point_json(p));
      results["hexagon"] = json{{"vertices", verts},
                                {"steps_used", h.steps_used},
                                {"max_radius_error", h.max_radius_error},
                                {"max_gap_error", h.max_gap_error}};
    } else {
      results["hexagon"] = nullptr;
    }
  }
  results["converged"] = converged;
  report["results"] = results;

  json table = json::array();
  table.push_back(invariant_row("circumcircle_constant", worst_circle, 1e-9));
  if (!experimental) {
    table.push_back(
        invariant_row("orthocenter_tracks_centroid", worst_h, 1e-9));
    table.push_back(
        invariant_row("contraction_one_third", worst_ratio, 1e-8));
  }
  report["invariants"] = table;
  return report;
}

} // namespace expara::cli
