#include "expara/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace expara {

namespace {

constexpr double kLeadingTol = 1e-14;

double max_abs_coeff(const CubicCoeffs& c) {
  return std::max({std::abs(c.k3), std::abs(c.k2), std::abs(c.k1),
                   std::abs(c.k0)});
}

// Two Newton steps on the original coefficients; a step is kept only when
// it reduces the residual.
double polish_real(const CubicCoeffs& c, double t) {
  for (int i = 0; i < 2; ++i) {
    const double f = c.eval(t);
    const double df = c.derivative(t);
    if (df == 0.0) break;
    const double next = t - f / df;
    if (!std::isfinite(next)) break;
    if (std::abs(c.eval(next)) <= std::abs(f)) t = next;
  }
  return t;
}

std::complex<double> polish_complex(const CubicCoeffs& c,
                                    std::complex<double> z) {
  auto f = [&](std::complex<double> t) {
    return ((c.k3 * t + c.k2) * t + c.k1) * t + c.k0;
  };
  auto df = [&](std::complex<double> t) {
    return (3.0 * c.k3 * t + 2.0 * c.k2) * t + c.k1;
  };
  for (int i = 0; i < 2; ++i) {
    const std::complex<double> d = df(z);
    if (d == 0.0) break;
    const std::complex<double> next = z - f(z) / d;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
    if (std::abs(f(next)) <= std::abs(f(z))) z = next;
  }
  return z;
}

CubicRoots solve_quadratic(const CubicCoeffs& c, double scale) {
  CubicRoots out;
  out.quadratic_fallback = true;
  const double a = c.k2, b = c.k1, k = c.k0;
  if (std::abs(a) <= kLeadingTol * scale) {
    // Linear (or constant) remainder.
    out.kind = RootKind::ThreeReal;
    if (std::abs(b) > kLeadingTol * scale) {
      out.reals[out.real_count++] = polish_real(c, -k / b);
    }
    return out;
  }
  const double disc = b * b - 4.0 * a * k;
  if (disc >= 0.0) {
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    double r0 = q / a;
    double r1 = (q != 0.0) ? k / q : 0.0;
    if (r0 > r1) std::swap(r0, r1);
    out.kind = RootKind::ThreeReal;
    out.reals[0] = polish_real(c, r0);
    out.reals[1] = polish_real(c, r1);
    out.real_count = 2;
  } else {
    out.kind = RootKind::OneRealOneComplexPair;
    std::complex<double> z{-b / (2.0 * a), std::sqrt(-disc) / (2.0 * a)};
    z = polish_complex(c, z);
    out.complex_pair = {z.real(), std::abs(z.imag())};
  }
  return out;
}

} // namespace

CubicRoots solve_cubic(const CubicCoeffs& c) {
  const double scale = max_abs_coeff(c);
  if (scale == 0.0) {
    throw DomainError("solve_cubic: all coefficients vanish");
  }
  if (std::abs(c.k3) <= kLeadingTol * scale) {
    return solve_quadratic(c, scale);
  }

  // Monic then depressed form s^3 + p s + q with t = s - a2/3.
  const double a2 = c.k2 / c.k3;
  const double a1 = c.k1 / c.k3;
  const double a0 = c.k0 / c.k3;
  const double shift = a2 / 3.0;
  const double p = a1 - a2 * a2 / 3.0;
  const double q = (2.0 * a2 * a2 * a2 / 27.0) - a2 * a1 / 3.0 + a0;

  const double disc = -4.0 * p * p * p - 27.0 * q * q;
  const double disc_scale = 4.0 * std::abs(p * p * p) + 27.0 * q * q;

  CubicRoots out;
  if (disc_scale == 0.0) {
    // p = q = 0: triple root.
    out.kind = RootKind::ThreeReal;
    out.clustered = true;
    const double r = polish_real(c, -shift);
    out.reals = {r, r, r};
    out.real_count = 3;
    return out;
  }

  out.clustered = std::abs(disc / disc_scale) < 1e-12;

  if (disc >= 0.0 || out.clustered) {
    // Three real roots (possibly nearly coincident).  disc >= 0 forces
    // p <= 0; clamp in the clustered borderline case.
    const double pm = std::min(p, 0.0);
    const double s = std::sqrt(-pm / 3.0);
    double ct = (s > 0.0) ? -q / (2.0 * s * s * s) : 0.0;
    ct = std::clamp(ct, -1.0, 1.0);
    const double theta = std::acos(ct) / 3.0;
    constexpr double tau = 2.0 * std::numbers::pi / 3.0;
    out.kind = RootKind::ThreeReal;
    out.real_count = 3;
    out.reals = {polish_real(c, 2.0 * s * std::cos(theta) - shift),
                 polish_real(c, 2.0 * s * std::cos(theta - tau) - shift),
                 polish_real(c, 2.0 * s * std::cos(theta + tau) - shift)};
    std::sort(out.reals.begin(), out.reals.end());
    return out;
  }

  // One real root via Cardano; pick the cube root with no cancellation.
  const double h = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  const double u3 = -q / 2.0 - std::copysign(h, q);
  const double u = std::cbrt(u3);
  const double v = (u != 0.0) ? -p / (3.0 * u) : 0.0;
  const double s1 = u + v;
  out.kind = RootKind::OneRealOneComplexPair;
  out.reals[0] = polish_real(c, s1 - shift);
  out.real_count = 1;

  const double im2 = 3.0 * s1 * s1 + 4.0 * p;
  const double im = (im2 > 0.0) ? 0.5 * std::sqrt(im2) : 0.0;
  std::complex<double> z{-s1 / 2.0 - shift, im};
  z = polish_complex(c, z);
  out.complex_pair = {z.real(), std::abs(z.imag())};
  return out;
}

CubicCoeffs max_cubic_coeffs(const Triangle& tri, Side side) {
  const auto [a, b, c] = side_lengths(tri);
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  // Template of e_c with (a^2, b^2, c^2); e_a and e_b are its cyclic images.
  auto coeffs = [](double A, double B, double C) {
    return CubicCoeffs{2.0 * C, A - B - 3.0 * C, -(3.0 * A + B - C), 2.0 * A};
  };
  switch (side) {
  case Side::A: return coeffs(b2, c2, a2);
  case Side::B: return coeffs(c2, a2, b2);
  case Side::C: return coeffs(a2, b2, c2);
  }
  throw DomainError("invalid side label");
}

CubicCoeffs axis_cubic_coeffs(const Triangle& tri, const Homogeneous3& x) {
  const auto [a, b, c] = side_lengths(tri);
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  const Homogeneous3 n = x.normalized();
  return CubicCoeffs{
      c2 * (n.x0 + n.x1),
      (a2 - b2) * n.x2 - (2.0 * n.x0 + n.x1) * c2,
      (c2 - b2) * n.x0 - (2.0 * n.x2 + n.x1) * a2,
      a2 * (n.x1 + n.x2),
  };
}

std::array<double, 3> max_exparabola_roots(const Triangle& tri) {
  const CubicRoots roots = solve_cubic(max_cubic_coeffs(tri, Side::C));
  if (roots.kind != RootKind::ThreeReal || roots.real_count != 3) {
    throw NumericalError("max-exparabola cubic lost its three real roots");
  }
  const auto& r = roots.reals;
  if (!(r[0] < 0.0 && 0.0 < r[1] && r[1] < 1.0 && 1.0 < r[2])) {
    throw NumericalError("max-exparabola roots violate t0 < 0 < t1 < 1 < t2");
  }
  return r;
}

} // namespace expara
