#pragma once

// Brute-force oracle for the kernel e^{ip Gamma_y} e^{-i(x,y)}: expand the
// plane wave in homogeneous degrees of y, apply the Gamma-exponential per
// degree on the Krylov (cyclic) subspace of (x,y)^k, sum, and project onto
// the commutative plane span{1, x^y}.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "cfk/clifford.hpp"
#include "cfk/expm.hpp"
#include "cfk/polyfield.hpp"

namespace cfk {

namespace detail {

inline double field_dot(const PolyField<double>& f, const PolyField<double>& g) {
  double s = 0;
  auto it = f.terms().begin();
  auto jt = g.terms().begin();
  GradedLex less;
  while (it != f.terms().end() && jt != g.terms().end()) {
    if (less(it->first, jt->first)) {
      ++it;
    } else if (less(jt->first, it->first)) {
      ++jt;
    } else {
      for (std::size_t b = 0; b < it->second.size(); ++b) s += it->second[b] * jt->second[b];
      ++it;
      ++jt;
    }
  }
  return s;
}

inline double field_norm(const PolyField<double>& f) { return std::sqrt(field_dot(f, f)); }

// Applies exp(ip Gamma) to a homogeneous field by Arnoldi on its cyclic
// subspace, then evaluates the result at the point y.
inline Multivector<cplx> gamma_exp_evaluate(const PolyField<double>& f, double p,
                                            const std::vector<double>& y) {
  int m = f.dim();
  double f0 = field_norm(f);
  if (f0 == 0.0) return Multivector<cplx>(m);
  std::vector<PolyField<double>> basis;
  std::vector<Multivector<double>> basis_at_y;
  basis.push_back(f * (1.0 / f0));
  basis_at_y.push_back(basis[0].evaluate(y));
  int cap = 2 * f.degree() + 6;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(cap + 1, cap + 1);
  int dim = 1;
  for (int j = 0; j < cap; ++j) {
    auto v = gamma_apply(basis[j]);
    double scale = std::max(1.0, field_norm(v));
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < dim; ++i) {
        double hij = field_dot(basis[i], v);
        if (pass == 0) h(i, j) = hij;
        else h(i, j) += hij;
        v -= basis[i] * hij;
        v.prune();
      }
    }
    double hnext = field_norm(v);
    if (hnext <= 1e-11 * scale) break;
    if (j + 1 == cap)
      throw std::runtime_error("kernel_bruteforce: cyclic subspace did not close");
    h(j + 1, j) = hnext;
    basis.push_back(v * (1.0 / hnext));
    basis_at_y.push_back(basis.back().evaluate(y));
    ++dim;
  }
  Eigen::MatrixXcd hs = h.topLeftCorner(dim, dim).cast<cplx>() * cplx(0.0, p);
  Eigen::VectorXcd coeff = expm(hs).col(0) * f0;
  Multivector<cplx> out(m);
  for (int i = 0; i < dim; ++i) {
    for (std::size_t b = 0; b < out.size(); ++b) out[b] += coeff(i) * basis_at_y[i][b];
  }
  return out;
}

}  // namespace detail

// Degree-truncated evaluation of e^{ip Gamma_y} e^{-i(x,y)} at (x, y); the
// residual outside span{1, x^y} is written to *residual_out when given and
// must stay below 1e-10.
inline PlaneValue kernel_bruteforce(int m, double p, const std::vector<double>& x,
                                    const std::vector<double>& y, int N,
                                    double* residual_out = nullptr) {
  if (static_cast<int>(x.size()) != m || static_cast<int>(y.size()) != m)
    throw std::invalid_argument("kernel_bruteforce: vector arity mismatch");
  auto frame = frame_of(x, y);
  double t = frame.t;
  // Taylor tail guard for the plane wave.
  double tail = 1.0;
  for (int j = 1; j <= N + 1; ++j) tail *= t / j;
  if (tail >= 1e-12)
    throw std::domain_error("kernel_bruteforce: truncation degree too small for this t");
  if (t == 0.0) {
    if (residual_out) *residual_out = 0.0;
    return PlaneValue{1.0, 0.0, frame};
  }

  // w = (x, y) as a scalar polynomial field in y.
  PolyField<double> w1(m);
  for (int j = 0; j < m; ++j) {
    std::vector<int> mono(m, 0);
    mono[j] = 1;
    w1.add_term(mono, Multivector<double>::scalar(m, x[j]));
  }
  auto scalar_poly_mul = [m](const PolyField<double>& a, const PolyField<double>& b) {
    PolyField<double> r(m);
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) {
        auto mono = ma;
        for (int j = 0; j < m; ++j) mono[j] += mb[j];
        r.add_term(mono, Multivector<double>::scalar(m, ca[0] * cb[0]));
      }
    return r;
  };

  Multivector<cplx> total(m);
  PolyField<double> wk = PolyField<double>::constant(m, Multivector<double>::scalar(m, 1.0));
  cplx phase_over_fact(1.0, 0.0);  // (-i)^k / k!
  double term_bound = 1.0;         // t^k / k!, bounds the degree-k contribution
  for (int k = 0; k <= N; ++k) {
    if (k > 0) {
      wk = scalar_poly_mul(wk, w1);
      phase_over_fact *= cplx(0.0, -1.0) / double(k);
      term_bound *= t / k;
      if (term_bound < 1e-13) break;
    }
    auto vk = detail::gamma_exp_evaluate(wk, p, y);
    for (std::size_t b = 0; b < total.size(); ++b) total[b] += phase_over_fact * vk[b];
  }

  // Project onto span{1, x^y}.
  Mv w = wedge(x, y);
  double w2 = 0;
  for (std::size_t b = 0; b < w.size(); ++b) w2 += std::norm(w[b]);
  cplx alpha = total[0];
  cplx beta = 0.0;
  if (w2 > 0) {
    for (std::size_t b = 0; b < w.size(); ++b) beta += total[b] * w[b].real();
    beta /= w2;
  }
  Mv remainder = total;
  remainder[0] -= alpha;
  remainder -= w * beta;
  double residual = remainder.norm();
  if (residual_out) *residual_out = residual;
  if (residual > 1e-10)
    throw std::runtime_error("kernel_bruteforce: out-of-plane residual exceeds tolerance");
  // Normalize the bivector coefficient to the frame's unit: x^y has norm v,
  // so beta already multiplies the geometric wedge. PlaneValue stores the
  // coefficient of x^y itself.
  return PlaneValue{alpha, beta, frame};
}

}  // namespace cfk
