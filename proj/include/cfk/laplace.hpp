#pragma once

// Laplace-domain closed forms of the kernel: the two-term expression in the
// auxiliary time variable, in both the exponential (e^{t(x,y)}) and
// oscillatory (e^{-it(x,y)}) variants, together with a forward-quadrature
// round-trip check.

#include <cmath>
#include <complex>
#include <stdexcept>

#include "cfk/clifford.hpp"
#include "cfk/kernel.hpp"
#include "cfk/quadrature.hpp"
#include "cfk/special.hpp"

namespace cfk {

enum class LaplaceVariant { oscillatory, exponential };

struct LaplaceDomainValue {
  cplx s;
  PlaneValue value;
};

namespace detail {

// Exponential-variant evaluator over a complexified frame: u, t^2 and the
// wedge coefficient w may all be complex, which is what the -ix substitution
// produces. yx = -u - w * (x^y); all complex powers are principal.
inline PlaneValue laplace_exponential_c(int m, double p, cplx s, cplx u, cplx t2, cplx w,
                                        const GeometricFrame& f) {
  double q = 0.5 * m;
  cplx rt = std::sqrt(s * s - t2);
  cplx eip = std::exp(cplx(0.0, p)), emip = std::exp(cplx(0.0, -p));
  double cp = std::cos(p), sp = std::sin(p);
  cplx i(0.0, 1.0);
  cplx n1s = s + rt - emip * u, n2s = s - rt - emip * u;
  cplx nw = -emip * w;
  cplx d1 = std::pow(emip * (s * cp + i * rt * sp - u), q);
  cplx d2 = std::pow(eip * (s * cp - i * rt * sp - u), q);
  cplx phase = std::exp(cplx(0.0, m * p));
  cplx pref = gamma_fn(q) / (2.0 * rt);
  return PlaneValue{pref * (n1s / d1 - phase * n2s / d2), pref * (nw / d1 - phase * nw / d2), f};
}

}  // namespace detail

// Two-term Laplace-domain kernel. The oscillatory variant transforms
// t^{m/2-1} K_m^p at the frame scaled by t; the exponential variant carries
// e^{t(x,y)} instead of the plane wave. Odd m needs a half-integer principal
// power, which is flagged through branch_warning and validated only
// empirically by numeric_laplace_check.
inline PlaneValue laplace_kernel(int m, double p, cplx s, const GeometricFrame& f,
                                 LaplaceVariant variant, bool* branch_warning = nullptr) {
  if (m < 2) throw std::invalid_argument("laplace_kernel: m >= 2 required");
  if (s.real() <= f.t)
    throw std::domain_error("laplace_kernel: abscissa guard Re(s) > t violated");
  if (branch_warning) *branch_warning = (m % 2 != 0);
  double q = 0.5 * m;
  if (variant == LaplaceVariant::exponential)
    return detail::laplace_exponential_c(m, p, s, f.u, f.t * f.t, 1.0, f);
  cplx rt = std::sqrt(s * s + f.t * f.t);
  cplx eip = std::exp(cplx(0.0, p)), emip = std::exp(cplx(0.0, -p));
  double cp = std::cos(p), sp = std::sin(p);
  cplx i(0.0, 1.0);
  // -i e^{-ip} yx with yx = -u - x^y
  cplx n1s = s + rt + i * emip * f.u, n2s = s - rt + i * emip * f.u;
  cplx nw = i * emip;
  cplx d1 = std::pow(emip * (s * cp + i * rt * sp + i * f.u), q);
  cplx d2 = std::pow(eip * (s * cp - i * rt * sp + i * f.u), q);
  cplx phase = std::exp(cplx(0.0, m * p));
  cplx pref = gamma_fn(q) / (2.0 * rt);
  return PlaneValue{pref * (n1s / d1 - phase * n2s / d2), pref * (nw / d1 - phase * nw / d2), f};
}

// Forward transform of the time-domain kernel by quadrature:
// int_0^T e^{-st} t^{m/2-1} K_m^p(t * frame) dt with t = tau^2 so the
// half-integer powers of odd m stay smooth at the origin. The returned
// bivector coefficient is relative to the unscaled wedge, matching
// laplace_kernel. T <= 0 picks the horizon (30+m)/(Re(s)-t).
inline PlaneValue numeric_laplace_check(int m, double p, cplx s, const GeometricFrame& f,
                                        double T = 0.0, int n = 160) {
  if (m < 2) throw std::invalid_argument("numeric_laplace_check: m >= 2 required");
  double gap = s.real() - f.t;
  if (gap <= 0.0)
    throw std::domain_error("numeric_laplace_check: abscissa guard Re(s) > t violated");
  if (T <= 0.0) T = (30.0 + m) / gap;
  if (std::exp(-gap * T) >= 1e-12)
    throw std::domain_error("numeric_laplace_check: horizon too short for the tail bound");
  auto rule = gauss_legendre_ab(n, 0.0, std::sqrt(T));
  cplx sc = 0.0, bv = 0.0;
  for (int j = 0; j < rule.size(); ++j) {
    double tau = rule.nodes[j], tt = tau * tau;
    KernelRequest req;
    req.m = m;
    req.p = p;
    req.frame = GeometricFrame{f.u * tt, f.v * tt, f.t * tt};
    auto kr = kernel(req);
    cplx common = rule.weights[j] * 2.0 * std::pow(tau, m - 1) * std::exp(-s * tt);
    sc += common * kr.value.scalar;
    bv += common * kr.value.bivector_coeff * tt;
  }
  return PlaneValue{sc, bv, f};
}

}  // namespace cfk
