#pragma once

// Truncated power-series (Taylor jet) arithmetic over a commutative ring.
// Ring multiplication is looked up through ring_mul so the same template
// serves complex scalars and the plane algebra.

#include <complex>
#include <stdexcept>
#include <vector>

#include "cfk/clifford.hpp"

namespace cfk {

inline cplx ring_mul(const cplx& a, const cplx& b) { return a * b; }
inline PlaneValue ring_mul(const PlaneValue& a, const PlaneValue& b) { return plane_mul(a, b); }

template <class R>
struct TaylorJet {
  std::vector<R> c;  // coefficient of a^0 .. a^N

  TaylorJet() = default;
  explicit TaylorJet(int order, const R& zero = R{}) : c(order + 1, zero) {}

  int order() const { return static_cast<int>(c.size()) - 1; }

  static TaylorJet constant(int order, const R& v, const R& zero = R{}) {
    TaylorJet j(order, zero);
    j.c[0] = v;
    return j;
  }

  TaylorJet& operator+=(const TaylorJet& o) {
    check(o);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  TaylorJet& operator-=(const TaylorJet& o) {
    check(o);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend TaylorJet operator+(TaylorJet a, const TaylorJet& b) { return a += b; }
  friend TaylorJet operator-(TaylorJet a, const TaylorJet& b) { return a -= b; }

  friend TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
    a.check(b);
    int n = a.order();
    TaylorJet r(n, a.c[0] - a.c[0]);  // zero of the ring at the right frame
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) r.c[i + j] += ring_mul(a.c[i], b.c[j]);
    return r;
  }

  TaylorJet scaled(cplx s) const {
    TaylorJet r = *this;
    for (auto& v : r.c) v = v * s;
    return r;
  }

 private:
  void check(const TaylorJet& o) const {
    if (c.size() != o.c.size()) throw std::invalid_argument("TaylorJet: order mismatch");
  }
};

// Evaluates an even entire function given by sum_j coeff(j) z^j on a jet by
// direct series summation; converges for any z0 because the coefficients
// decay factorially.
template <class R, class CoeffFn>
TaylorJet<R> entire_series_on_jet(const TaylorJet<R>& z, CoeffFn&& coeff, int max_terms,
                                  const R& one) {
  int n = z.order();
  R zero = one - one;
  TaylorJet<R> pow = TaylorJet<R>::constant(n, one, zero);
  TaylorJet<R> acc(n, zero);
  for (int j = 0; j < max_terms; ++j) {
    double cj = coeff(j);
    if (cj != 0.0) {
      TaylorJet<R> t = pow.scaled(cj);
      acc += t;
    }
    if (j + 1 < max_terms) pow = pow * z;
  }
  return acc;
}

// cos(sqrt(z)) as an entire function of z.
inline cplx cos_sqrt(cplx z) {
  cplx w = std::sqrt(z);  // either branch: cos is even
  return std::cos(w);
}

// sin(sqrt(z))/sqrt(z), entire, value 1 at z=0.
inline cplx sinc_sqrt(cplx z) {
  if (std::abs(z) < 1e-12) return 1.0 - z / 6.0 + z * z / 120.0;
  cplx w = std::sqrt(z);
  return std::sin(w) / w;
}

}  // namespace cfk
