#pragma once

// Generating functions for the even-dimensional kernels: closed form, 2x2
// matrix-exponential form over the plane algebra, Taylor-coefficient
// extraction (which reproduces every even-dimensional kernel), and the
// integral representation at the standard angle p = pi/2.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "cfk/clifford.hpp"
#include "cfk/jet.hpp"
#include "cfk/quadrature.hpp"
#include "cfk/special.hpp"

namespace cfk {

// G_p(x,y,a) = e^{-c} (cos d + (x^y - i a e^{ip}) sin p * sin(d)/d) with
// c = (iu - a e^{ip}) cos p and d^2 = sin^2 p (t^2 + (iu - a e^{ip})^2),
// evaluated through the even entire functions of z = d^2.
inline PlaneValue genfun_closed(double p, const GeometricFrame& f, cplx a) {
  cplx eip = std::exp(cplx(0.0, p));
  cplx q = cplx(0.0, f.u) - a * eip;
  cplx c = q * std::cos(p);
  double sp = std::sin(p);
  cplx z = sp * sp * (f.t * f.t + q * q);
  cplx C = cos_sqrt(z), S = sinc_sqrt(z);
  cplx e = std::exp(-c);
  cplx scalar = e * (C + (cplx(0.0, -1.0) * a * eip) * sp * S);
  cplx biv = e * sp * S;
  return PlaneValue{scalar, biv, f};
}

namespace detail {

using PlaneMat2 = std::array<PlaneValue, 4>;  // row-major 2x2 over the plane ring

inline PlaneMat2 mat_mul(const PlaneMat2& a, const PlaneMat2& b) {
  return {plane_mul(a[0], b[0]) + plane_mul(a[1], b[2]),
          plane_mul(a[0], b[1]) + plane_mul(a[1], b[3]),
          plane_mul(a[2], b[0]) + plane_mul(a[3], b[2]),
          plane_mul(a[2], b[1]) + plane_mul(a[3], b[3])};
}

inline double plane_abs(const PlaneValue& x) {
  return std::abs(x.scalar) + std::abs(x.bivector_coeff) * std::max(1.0, x.frame.v);
}

// Scaling-and-squaring exponential of a 2x2 matrix over the commutative
// plane algebra.
inline PlaneMat2 plane_expm(const PlaneMat2& a) {
  const GeometricFrame f = a[0].frame;
  const PlaneValue zero{0.0, 0.0, f}, one{1.0, 0.0, f};
  double nrm = std::max(plane_abs(a[0]) + plane_abs(a[1]), plane_abs(a[2]) + plane_abs(a[3]));
  int s = 0;
  while (nrm > 0.25 && s < 60) {
    nrm *= 0.5;
    ++s;
  }
  double scale = std::ldexp(1.0, -s);
  PlaneMat2 b{a[0] * scale, a[1] * scale, a[2] * scale, a[3] * scale};
  PlaneMat2 term{one, zero, zero, one};
  PlaneMat2 sum = term;
  for (int j = 1; j <= 16; ++j) {
    term = mat_mul(term, b);
    cplx inv(1.0 / j);
    for (int i = 0; i < 4; ++i) term[i] = term[i] * inv;
    for (int i = 0; i < 4; ++i) sum[i] += term[i];
  }
  for (int j = 0; j < s; ++j) sum = mat_mul(sum, sum);
  return sum;
}

}  // namespace detail

// Matrix-exponential form: (0 1) e^{-M} (1 1)^T with M the 2x2 companion of
// the Laplace-domain denominator; equals genfun_closed.
inline PlaneValue genfun_matrix(double p, const GeometricFrame& f, cplx a) {
  const PlaneValue zero{0.0, 0.0, f};
  detail::PlaneMat2 mat{zero, zero, zero, zero};
  if (std::abs(p - M_PI / 2) < 1e-14) {
    // diag(a-u, u-a) plus the off-diagonal pair (-xy, yx) where
    // xy = -u + x^y and yx = -u - x^y
    PlaneValue xy{-f.u, 1.0, f}, yx{-f.u, -1.0, f};
    mat[0] = PlaneValue{a - f.u, 0.0, f};
    mat[1] = zero - xy;
    mat[2] = yx;
    mat[3] = PlaneValue{f.u - a, 0.0, f};
  } else {
    cplx eip = std::exp(cplx(0.0, p));
    cplx q = cplx(0.0, f.u) - a * eip;
    double sp = std::sin(p), cp = std::cos(p);
    cplx root = std::sqrt(-f.t * f.t - q * q);
    cplx beta_p = -q * cp + sp * root;
    cplx beta_m = -q * cp - sp * root;
    // nu = -yx sin p + i u e^{ip} - a e^{2ip}
    PlaneValue yx{-f.u, -1.0, f};
    PlaneValue nu = zero - yx * cplx(sp);
    nu.scalar += cplx(0.0, f.u) * eip - a * eip * eip;
    mat[0] = PlaneValue{-beta_p, 0.0, f};
    mat[2] = zero - (nu + PlaneValue{beta_p, 0.0, f});
    mat[3] = PlaneValue{-beta_m, 0.0, f};
  }
  for (int i = 0; i < 4; ++i) mat[i] = mat[i] * cplx(-1.0);
  auto e = detail::plane_expm(mat);
  return e[2] + e[3];
}

// Taylor coefficients in a of the closed form, rescaled into kernels:
// entry j is K_m for m = 2j + 2, i.e. Gamma(m/2) times the a^{m/2-1}
// coefficient of G_p.
inline std::vector<PlaneValue> genfun_coeffs(double p, const GeometricFrame& f, int N) {
  if (N < 0 || N > 20) throw std::domain_error("genfun_coeffs: N out of range");
  using Jet = TaylorJet<PlaneValue>;
  const PlaneValue zero{0.0, 0.0, f}, one{1.0, 0.0, f};
  cplx eip = std::exp(cplx(0.0, p));
  double sp = std::sin(p), cp = std::cos(p);

  // exp(-c) with c = (iu - a e^{ip}) cos p: coefficients in closed form
  Jet expj(N, zero);
  cplx e0 = std::exp(-cplx(0.0, f.u) * cp);
  cplx c1 = eip * cp;  // -c = -iu cos p + a e^{ip} cos p
  cplx pw = 1.0;
  double fact = 1.0;
  for (int n = 0; n <= N; ++n) {
    expj.c[n] = one * (e0 * pw / fact);
    pw *= c1;
    fact *= n + 1.0;
  }

  // z = sin^2 p (t^2 + (iu - a e^{ip})^2), a quadratic jet
  Jet zj(N, zero);
  double s2 = sp * sp;
  zj.c[0] = one * cplx(s2 * (f.t * f.t - f.u * f.u));
  if (N >= 1) zj.c[1] = one * (s2 * cplx(0.0, -2.0 * f.u) * eip);
  if (N >= 2) zj.c[2] = one * (s2 * eip * eip);

  // series length: factorial decay beats |z0|^j quickly
  double z0 = std::abs(zj.c[0].scalar);
  int terms = N + 8;
  double bound = 1.0;
  for (int j = 1; j < 200; ++j) {
    bound *= z0 / (2.0 * j * (2.0 * j - 1.0));
    if (bound < 1e-18 && j >= N + 8) {
      terms = j;
      break;
    }
    terms = j + 1;
  }
  auto cosj = entire_series_on_jet(
      zj, [](int j) { double c = 1.0; for (int i = 1; i <= 2 * j; ++i) c /= i; return (j % 2 ? -c : c); },
      terms, one);
  auto sincj = entire_series_on_jet(
      zj, [](int j) { double c = 1.0; for (int i = 1; i <= 2 * j + 1; ++i) c /= i; return (j % 2 ? -c : c); },
      terms, one);

  // (x^y - i a e^{ip}) sin p as a linear jet
  Jet wj(N, zero);
  wj.c[0] = PlaneValue{0.0, sp, f};
  if (N >= 1) wj.c[1] = one * (cplx(0.0, -1.0) * eip * sp);

  Jet g = expj * (cosj + wj * sincj);

  std::vector<PlaneValue> out;
  out.reserve(N + 1);
  for (int j = 0; j <= N; ++j) out.push_back(g.c[j] * cplx(gamma_fn(j + 1.0)));
  return out;
}

// Integral representation of G_{pi/2} for real a (the only case printed):
// boundary exponential, two J_1 integrals, and the wedge J_0 integral with
// yx = -u - x^y.
inline PlaneValue genfun_integral(const GeometricFrame& f, double a, const QuadratureRule& rule) {
  double u = f.u, t = f.t;
  auto theta = gauss_legendre_ab(rule.size(), 0.0, M_PI / 2);
  // -t * int_0^1 (1-w^2)^{-1/2} J_1(t sqrt(1-w^2)) cosh((u-a)w) dw, w = sin(theta)
  double term_cosh = theta.integrate([&](double th) {
    return bessel_j(1.0, t * std::cos(th)) * std::cosh((u - a) * std::sin(th));
  });
  // +t * int_0^1 sinh((u-a) sqrt(1-w^2)) J_1(t w) dw, w = cos(phi)
  double term_sinh = theta.integrate([&](double ph) {
    return std::sinh((u - a) * std::sin(ph)) * bessel_j(1.0, t * std::cos(ph)) * std::sin(ph);
  });
  // int_0^1 J_0(t sqrt(1-w^2)) cosh((u-a)w) dw (smooth; plain rule on [0,1])
  auto unit = gauss_legendre_ab(rule.size(), 0.0, 1.0);
  double term_j0 = unit.integrate([&](double w) {
    return bessel_j(0.0, t * std::sqrt(std::max(0.0, 1.0 - w * w))) * std::cosh((u - a) * w);
  });
  // the wedge block enters as -yx = u + x^y
  PlaneValue minus_yx{u, 1.0, f};
  PlaneValue r{std::exp(a - u) - t * term_cosh + t * term_sinh, 0.0, f};
  return r + minus_yx * cplx(term_j0);
}

// Convenience wrapper with a nested-rule error estimate.
inline PlaneValue genfun_integral(const GeometricFrame& f, double a, int n = 64,
                                  double* err_est = nullptr, double tol = 1e-6) {
  auto coarse = genfun_integral(f, a, gauss_legendre(n));
  auto fine = genfun_integral(f, a, gauss_legendre(n + 16));
  double est = fine.dist(coarse);
  if (err_est) *err_est = est;
  if (est > tol) throw std::runtime_error("genfun_integral: quadrature error estimate exceeds tolerance");
  return fine;
}

}  // namespace cfk
