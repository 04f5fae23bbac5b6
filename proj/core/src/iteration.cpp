#include "expara/iteration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace expara {

namespace {

constexpr Homogeneous3 kCentroid{1.0, 1.0, 1.0};

FocalStep make_step(int index, const Triangle& tri) {
  const TriangleCenters c = centers(tri);
  return FocalStep{index,        tri,           c.circumcenter,
                   c.centroid,   c.orthocenter, c.circumradius,
                   equilateral_deviation(tri)};
}

FocalStep advance(const FocalStep& step, const Homogeneous3& base) {
  const FocalResult fr = focal_triangle(step.tri, base);
  return make_step(step.index + 1,
                   Triangle{fr.focus_a, fr.focus_b, fr.focus_c});
}

void check_drift(const FocalStep& step, const FocalStep& step0) {
  const double r0 = step0.circumradius;
  const double o_drift = distance(step.circumcenter, step0.circumcenter);
  const double r_drift = std::abs(step.circumradius - r0);
  if (o_drift > 1e-6 * r0 || r_drift > 1e-6 * r0) {
    throw NumericalError(
        "focal iteration blew up at step " + std::to_string(step.index) +
        ": circumcenter drift " + std::to_string(o_drift) +
        ", radius drift " + std::to_string(r_drift));
  }
}

} // namespace

double equilateral_deviation(const Triangle& tri) {
  const auto s = side_lengths(tri);
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  const double mean = (s[0] + s[1] + s[2]) / 3.0;
  return (*hi - *lo) / mean;
}

std::vector<FocalStep> iterate(const Triangle& tri0, int n) {
  return iterate(tri0, n, kCentroid);
}

std::vector<FocalStep> iterate(const Triangle& tri0, int n,
                               const Homogeneous3& base) {
  if (n < 0) throw DomainError("iterate: negative step count");
  std::vector<FocalStep> steps;
  steps.reserve(static_cast<std::size_t>(n) + 1);
  steps.push_back(make_step(0, tri0));
  for (int i = 0; i < n; ++i) {
    steps.push_back(advance(steps.back(), base));
    check_drift(steps.back(), steps.front());
  }
  return steps;
}

double contraction_ratio(const FocalStep& step_i, const FocalStep& step_j) {
  if (step_j.index != step_i.index + 1) {
    throw DomainError("contraction_ratio expects consecutive steps");
  }
  const Point2 o = step_i.circumcenter;
  const double d_i = distance(step_i.centroid, o);
  if (d_i <= 1e-12 * step_i.circumradius) {
    throw DomainError("contraction_ratio: centroid already at the "
                      "circumcenter (converged)");
  }
  return distance(step_j.centroid, o) / d_i;
}

LimitHexagon limit_hexagon(const Triangle& tri0, double tol, int cap) {
  if (tol <= 0.0) throw DomainError("limit_hexagon: tolerance must be > 0");

  FocalStep prev = [&] {
    FocalStep s = make_step(0, tri0);
    return s;
  }();
  const FocalStep step0 = prev;

  FocalStep cur = prev;
  for (int i = 1; i <= cap; ++i) {
    cur = advance(prev, kCentroid);
    check_drift(cur, step0);
    if (prev.equilateral_deviation < tol &&
        cur.equilateral_deviation < tol) {
      LimitHexagon out;
      out.steps_used = i;
      const bool cur_even = (cur.index % 2 == 0);
      out.even_limit = cur_even ? cur.tri : prev.tri;
      out.odd_limit = cur_even ? prev.tri : cur.tri;

      const Point2 o = step0.circumcenter;
      const double r0 = step0.circumradius;
      std::array<Point2, 6> vs{prev.tri.a, prev.tri.b, prev.tri.c,
                               cur.tri.a,  cur.tri.b,  cur.tri.c};
      std::sort(vs.begin(), vs.end(), [&](Point2 p, Point2 q) {
        return std::atan2(p.y - o.y, p.x - o.x) <
               std::atan2(q.y - o.y, q.x - o.x);
      });
      out.vertices = vs;

      for (int k = 0; k < 6; ++k) {
        out.max_radius_error =
            std::max(out.max_radius_error,
                     std::abs(distance(vs[k], o) - r0) / r0);
        const Point2 p = vs[k];
        const Point2 q = vs[(k + 1) % 6];
        const double gap =
            std::remainder(std::atan2(q.y - o.y, q.x - o.x) -
                               std::atan2(p.y - o.y, p.x - o.x),
                           2.0 * std::numbers::pi);
        out.max_gap_error = std::max(
            out.max_gap_error, std::abs(std::abs(gap) - std::numbers::pi / 3.0));
      }
      return out;
    }
    prev = cur;
  }
  throw IterationCapExceeded(
      "no convergence within " + std::to_string(cap) +
      " steps; last equilateral deviation " +
      std::to_string(cur.equilateral_deviation));
}

} // namespace expara
