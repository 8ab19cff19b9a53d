#pragma once

// Self-contained special functions: Gamma, Bessel J_nu for real order
// nu >= 0, the regularized ratio J_nu(z)/z^nu, and Gegenbauer polynomials.

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cfk {

// Gamma function. Half-integer and integer arguments go through exact
// recursion from Gamma(1)=1, Gamma(1/2)=sqrt(pi); general real arguments
// use Lanczos (g=7, 9 terms).
inline double gamma_fn(double x) {
  constexpr double kSqrtPi = 1.7724538509055160273;
  double two_x = 2.0 * x;
  if (x > 0 && std::abs(two_x - std::round(two_x)) < 1e-12 && x < 170.0) {
    long n2 = static_cast<long>(std::round(two_x));
    double g, z;
    if (n2 % 2 == 0) {
      g = 1.0;
      z = 1.0;  // Gamma(1)
    } else {
      g = kSqrtPi;
      z = 0.5;  // Gamma(1/2)
    }
    while (z + 0.5 < x) {
      g *= z;
      z += 1.0;
    }
    return g;
  }
  static const double lanczos[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
  x -= 1.0;
  double a = lanczos[0];
  double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += lanczos[i] / (x + i);
  return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

inline double lgamma_fn(double x) { return std::lgamma(x); }

namespace detail {

// Power series of J_nu(z)/z^nu (finite at z=0). Safe where the terms do not
// grow, i.e. z^2/4 <~ nu+1.
inline double bessel_ratio_series(double nu, double z) {
  double q = 0.25 * z * z;
  double term = std::exp(-nu * std::log(2.0) - lgamma_fn(nu + 1.0));
  double sum = term;
  for (int j = 1; j < 600; ++j) {
    term *= -q / (j * (nu + j));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
  }
  return sum;
}

// Steed/Temme continued-fraction evaluation of J_nu(x) for x >= 2 or so.
// CF1 gives J'/J at order nu, downward recurrence moves to mu = nu - nl,
// CF2 at mu fixes the normalization through the Wronskian. Runs in extended
// precision: near the turning point x ~ nu the method loses about a digit,
// which double alone cannot spare.
inline double bessel_j_cf(double nu_in, double x_in) {
  using real = long double;
  constexpr real EPS = 1e-18L;
  constexpr real FPMIN = 1e-300L;
  constexpr int MAXIT = 20000;
  const real nu = nu_in, x = x_in;
  // Recurse all the way down to the fractional order: CF2 is most accurate
  // at small mu, and the scaled downward recurrence is stable.
  int nl = static_cast<int>(nu_in);
  real xmu = nu - nl;
  real xi = 1.0L / x, xi2 = 2.0L * xi;
  // CF1
  int isign = 1;
  real h = nu * xi;
  if (h < FPMIN) h = FPMIN;
  real b = xi2 * nu, c = h, d = 0.0L;
  for (int i = 1; i <= MAXIT; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < FPMIN) d = FPMIN;
    c = b - 1.0L / c;
    if (std::abs(c) < FPMIN) c = FPMIN;
    d = 1.0L / d;
    real del = c * d;
    h *= del;
    if (d < 0.0L) isign = -isign;
    if (std::abs(del - 1.0L) < EPS) break;
    if (i == MAXIT) throw std::runtime_error("bessel_j: CF1 failed to converge");
  }
  real rjl = isign * FPMIN, rjpl = h * rjl;
  real rjl1 = rjl;
  real fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    real rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
  }
  if (rjl == 0.0L) rjl = EPS;
  real f = rjpl / rjl;  // J'_mu / J_mu (scaled)
  // CF2
  real a = 0.25L - xmu * xmu;
  real p = -0.5L * xi, q = 1.0L;
  real br = 2.0L * x, bi = 2.0L;
  fact = a * xi / (p * p + q * q);
  real cr = br + q * fact, ci = bi + p * fact;
  real den = br * br + bi * bi;
  real dr = br / den, di = -bi / den;
  real dlr = cr * dr - ci * di, dli = cr * di + ci * dr;
  real temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  for (int i = 2; i <= MAXIT; ++i) {
    a += 2 * (i - 1);
    bi += 2.0L;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < FPMIN) dr = FPMIN;
    fact = a / (cr * cr + ci * ci);
    cr = br + cr * fact;
    ci = bi - ci * fact;
    if (std::abs(cr) + std::abs(ci) < FPMIN) cr = FPMIN;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::abs(dlr - 1.0L) + std::abs(dli) < EPS) break;
    if (i == MAXIT) throw std::runtime_error("bessel_j: CF2 failed to converge");
  }
  real gam = (p - f) / q;
  real w = 2.0L / (M_PI * x);
  real rjmu = std::sqrt(w / ((p - f) * gam + q));
  rjmu = (rjl >= 0.0L ? std::abs(rjmu) : -std::abs(rjmu));
  return static_cast<double>(rjl1 * (rjmu / rjl));
}

}  // namespace detail

// J_nu(z), nu in [0, 60] (plus nu = -1/2 in closed form), z in [0, 200].
inline double bessel_j(double nu, double z) {
  if (nu == -0.5) {
    if (z <= 0 || z > 200.0)
      throw std::domain_error("bessel_j: (nu, z) outside implementation envelope");
    return std::sqrt(2.0 / (M_PI * z)) * std::cos(z);
  }
  if (nu < 0 || nu > 60.0 || z < 0 || z > 200.0)
    throw std::domain_error("bessel_j: (nu, z) outside implementation envelope");
  if (z == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  double series_cut = std::max(7.0, 2.0 * std::sqrt(nu + 1.0));
  if (z <= series_cut)
    return detail::bessel_ratio_series(nu, z) * std::pow(z, nu);
  return detail::bessel_j_cf(nu, z);
}

// J_nu(z)/z^nu with the removable singularity filled.
inline double bessel_ratio(double nu, double z) {
  if (nu < 0 || nu > 60.0 || z < 0 || z > 200.0)
    throw std::domain_error("bessel_ratio: (nu, z) outside implementation envelope");
  double series_cut = std::max(7.0, 2.0 * std::sqrt(nu + 1.0));
  if (z <= series_cut) return detail::bessel_ratio_series(nu, z);
  return detail::bessel_j_cf(nu, z) / std::pow(z, nu);
}

// Gegenbauer C_k^{(lambda)}(x) by the three-term recurrence. For lambda = 0
// returns the Chebyshev limit 2 T_k(x)/k for k >= 1.
inline double gegenbauer(int k, double lambda, double x) {
  if (k < 0 || k > 2000) throw std::domain_error("gegenbauer: k out of range");
  if (k == 0) return 1.0;
  if (lambda == 0.0) {
    // lim_{l->0} C_k^l / l = 2 T_k / k; return that normalization.
    return 2.0 * std::cos(k * std::acos(std::clamp(x, -1.0, 1.0))) / k;
  }
  double cm2 = 1.0, cm1 = 2.0 * lambda * x;
  if (k == 1) return cm1;
  double c = 0;
  for (int j = 2; j <= k; ++j) {
    c = (2.0 * (j + lambda - 1.0) * x * cm1 - (j + 2.0 * lambda - 2.0) * cm2) / j;
    cm2 = cm1;
    cm1 = c;
  }
  return c;
}

// C_k^{(lambda)}(1) = binom(k + 2*lambda - 1, k); used for series tail bounds.
inline double gegenbauer_at_one(int k, double lambda) {
  if (k == 0) return 1.0;
  return std::exp(lgamma_fn(k + 2.0 * lambda) - lgamma_fn(2.0 * lambda) - lgamma_fn(k + 1.0));
}

}  // namespace cfk
