#include "expara/focal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace expara {

namespace {

// Focus of the t-exparabola in the canonical frame, shared between the real
// and the complex evaluation path.
template <typename S>
std::pair<S, S> focus_local(double c, double c1, double c2, S t) {
  const S w = S(c) * (S(1.0) - t) - S(c1);
  const S den = w * w + S(c2) * S(c2);
  const S k = S(c) * t / den;
  return {k * (S(c1 * c1 + c2 * c2) - S(c * c1) * (S(1.0) - t)),
          k * (S(-c * c2) * (S(1.0) - t))};
}

struct LabeledRoots {
  // Ascending real parts; complex member (if any) listed by its real part
  // with the +Im representative.
  std::array<std::complex<double>, 3> values;
  bool all_real = false;
};

LabeledRoots ordered_roots(const CubicRoots& r) {
  LabeledRoots out;
  if (r.kind == RootKind::ThreeReal && r.real_count == 3) {
    out.all_real = true;
    out.values = {std::complex<double>(r.reals[0]),
                  std::complex<double>(r.reals[1]),
                  std::complex<double>(r.reals[2])};
    return out;
  }
  if (r.kind == RootKind::OneRealOneComplexPair && r.real_count == 1 &&
      r.complex_pair) {
    const std::complex<double> z = *r.complex_pair;
    std::array<std::complex<double>, 3> vals{std::complex<double>(r.reals[0]),
                                             z, std::conj(z)};
    std::sort(vals.begin(), vals.end(), [](auto lhs, auto rhs) {
      if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
      return lhs.imag() > rhs.imag();
    });
    out.values = vals;
    return out;
  }
  throw DomainError("axis cubic degenerated below three roots "
                    "(X on an anticomplementary line)");
}

void ensure_distinct(const LabeledRoots& r) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double gap = std::abs(r.values[i] - r.values[j]);
      const double mag = std::max({1.0, std::abs(r.values[i]),
                                   std::abs(r.values[j])});
      if (gap <= 1e-10 * mag) {
        throw DomainError("two exparabolas coincide; the focal triangle is "
                          "undefined");
      }
    }
  }
}

} // namespace

Point2 exparabola_focus(const Triangle& tri, double t) {
  ensure_valid_tangency_param(t);
  const CanonicalFrame f = CanonicalFrame::of(tri);
  const auto [fx, fy] = focus_local<double>(f.c, f.c1, f.c2, t);
  return f.to_world(fx, fy);
}

Vec2 exparabola_axis(const Triangle& tri, double t) {
  ensure_valid_tangency_param(t);
  const CanonicalFrame f = CanonicalFrame::of(tri);
  return f.dir_to_world(f.c * (t - 1.0) + f.c1, f.c2);
}

XExparabolas x_exparabolas(const Triangle& tri, const Homogeneous3& x) {
  ensure_nondegenerate(tri);
  if (!is_admissible(x)) {
    throw DomainError("point is not admissible (outside the open "
                      "anticomplementary triangle); use focal_triangle for "
                      "the complex-root regime");
  }
  const CubicRoots roots = solve_cubic(axis_cubic_coeffs(tri, x));
  if (roots.kind != RootKind::ThreeReal || roots.real_count != 3) {
    throw NumericalError("axis cubic of an admissible point must have three "
                         "real roots");
  }
  const auto& r = roots.reals;
  if (!(r[0] < 0.0 && 0.0 < r[1] && r[1] < 1.0 && 1.0 < r[2])) {
    throw NumericalError("axis-cubic roots violate t0 < 0 < t1 < 1 < t2");
  }
  if (roots.clustered) {
    throw DomainError("axis-cubic roots are clustered; exparabolas nearly "
                      "coincide");
  }
  return {make_exparabola(tri, r[2]), make_exparabola(tri, r[0]),
          make_exparabola(tri, r[1])};
}

FocalResult focal_triangle(const Triangle& tri, const Homogeneous3& x) {
  ensure_nondegenerate(tri);
  const CanonicalFrame frame = CanonicalFrame::of(tri);
  const Homogeneous3 xn = x.normalized();

  FocalResult out;
  out.roots = solve_cubic(axis_cubic_coeffs(tri, xn));
  const LabeledRoots roots = ordered_roots(out.roots);
  ensure_distinct(roots);
  out.all_real = roots.all_real;

  std::array<Point2, 3> foci;
  double max_imag = 0.0;
  for (int i = 0; i < 3; ++i) {
    const std::complex<double> t = roots.values[i];
    if (t.imag() == 0.0) {
      const auto [fx, fy] =
          focus_local<double>(frame.c, frame.c1, frame.c2, t.real());
      foci[i] = frame.to_world(fx, fy);
    } else {
      const auto [fx, fy] =
          focus_local<std::complex<double>>(frame.c, frame.c1, frame.c2, t);
      foci[i] = frame.to_world(fx.real(), fy.real());
      max_imag = std::max({max_imag, std::abs(fx.imag()), std::abs(fy.imag())});
    }
  }
  // Ascending root order maps to (B, C, A): for admissible X the roots
  // interlace 0 and 1 and each exparabola opposes a distinct vertex.
  out.focus_b = foci[0];
  out.focus_c = foci[1];
  out.focus_a = foci[2];
  out.max_focus_imag = max_imag;

  const Triangle focal{out.focus_a, out.focus_b, out.focus_c};
  const Point2 x_cart = to_cartesian(tri, xn);
  if (is_degenerate(focal)) {
    // Conjugate roots give conjugate foci whose real parts coincide; there
    // is no orthocenter to measure in that regime.
    out.orthocenter_residual = std::numeric_limits<double>::quiet_NaN();
  } else {
    out.orthocenter_residual =
        distance(centers(focal).orthocenter, x_cart);
  }
  return out;
}

double h_invariant(const Triangle& tri, double u, double v, double w) {
  const auto [a, b, c] = side_lengths(tri);
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  const double e1 = u + v + w;
  const double e2 = u * v + v * w + w * u;
  const double e3 = u * v * w;
  const double h = c2 * ((a2 + b2) * c2 - (a2 - b2) * (a2 - b2)) * e3 +
                   a2 * c2 * (a2 - b2 - c2) * e2 -
                   a2 * c2 * (a2 + b2 - c2) * e1 +
                   a2 * ((b2 + c2) * a2 - (b2 - c2) * (b2 - c2));
  const double s = std::max({a, b, c});
  return h / (a2 * c2 * s * s);
}

std::array<double, 3> perpendicularity_check(const Triangle& tri, double u,
                                             double v, double w) {
  const Point2 fa = exparabola_focus(tri, w);
  const Point2 fb = exparabola_focus(tri, u);
  const Point2 fc = exparabola_focus(tri, v);
  const Vec2 aa = exparabola_axis(tri, w);
  const Vec2 ab = exparabola_axis(tri, u);
  const Vec2 ac = exparabola_axis(tri, v);
  auto residual = [](Vec2 axis, Vec2 chord) {
    return dot(axis, chord) / (norm(axis) * norm(chord));
  };
  return {residual(aa, fb - fc), residual(ab, fc - fa), residual(ac, fa - fb)};
}

SteinerInscribed steiner_inscribed_triangle(const Triangle& tri) {
  const auto [t0, t1, t2] = max_exparabola_roots(tri);
  const double r = centers(tri).circumradius;

  auto line_intersection = [](Point2 p, Vec2 dp, Point2 q, Vec2 dq) {
    const double den = cross(dp, dq);
    const double s = cross(q - p, dq) / den;
    return p + s * dp;
  };

  auto build = [&](double t) {
    const TangencyTriple pts = tangency_points(t);
    const Point2 a0 = to_cartesian(tri, pts.on_bc);
    const Point2 b2 = to_cartesian(tri, pts.on_ca);
    const Point2 c1 = to_cartesian(tri, pts.on_ab);
    const Point2 x = to_cartesian(tri, cevian_point(t));
    // Concurrency witness: AA0 meets CC1 where the cevian point says, and
    // BB2 passes through it as well.
    const Point2 meet =
        line_intersection(tri.a, a0 - tri.a, tri.c, c1 - tri.c);
    const double spread = distance(meet, x);
    const Vec2 db = b2 - tri.b;
    const double off_b = std::abs(cross(db, x - tri.b)) / norm(db);
    return std::pair<Point2, double>{x, std::max(spread, off_b) / r};
  };

  SteinerInscribed out;
  const auto [x1, r1] = build(t2);
  const auto [x2, r2] = build(t0);
  const auto [x3, r3] = build(t1);
  out.x1 = x1;
  out.x2 = x2;
  out.x3 = x3;
  out.concurrency_residuals = {r1, r2, r3};
  return out;
}

} // namespace expara
