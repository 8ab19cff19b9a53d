#pragma once

// Gauss-Legendre and Gauss-Hermite rules by Newton iteration on the
// orthogonal-polynomial recurrences, plus a mapped half-line rule.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cfk {

enum class QuadDomain { Interval, UnitInterval, HalfLine, HermiteLine };

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  QuadDomain domain = QuadDomain::Interval;

  int size() const { return static_cast<int>(nodes.size()); }

  template <class F>
  auto integrate(F&& f) const -> decltype(f(0.0) * 1.0) {
    decltype(f(0.0) * 1.0) s{};
    for (int i = 0; i < size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

// n-point Gauss-Legendre on [-1, 1].
inline QuadratureRule gauss_legendre(int n) {
  if (n < 1 || n > 512) throw std::domain_error("gauss_legendre: n out of range");
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  int mhalf = (n + 1) / 2;
  for (int i = 0; i < mhalf; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    bool settled = false;
    for (int it = 0;; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (settled) break;
      if (std::abs(z - z1) < 1e-13) settled = true;
      if (it > 100) throw std::runtime_error("gauss_legendre: Newton failed");
    }
    r.nodes[i] = -z;
    r.nodes[n - 1 - i] = z;
    r.weights[i] = r.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
  return r;
}

// Gauss-Legendre mapped to [a, b].
inline QuadratureRule gauss_legendre_ab(int n, double a, double b) {
  QuadratureRule r = gauss_legendre(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = 0.5 * (b - a) * r.nodes[i] + 0.5 * (a + b);
    r.weights[i] *= 0.5 * (b - a);
  }
  r.domain = QuadDomain::UnitInterval;
  return r;
}

// n-point Gauss-Hermite with weight exp(-x^2) (sum of weights = sqrt(pi)).
inline QuadratureRule gauss_hermite(int n) {
  if (n < 1 || n > 512) throw std::domain_error("gauss_hermite: n out of range");
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  r.domain = QuadDomain::HermiteLine;
  const double pim4 = 0.7511255444649425;  // pi^{-1/4}
  int mhalf = (n + 1) / 2;
  double z = 0;
  for (int i = 0; i < mhalf; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(n, 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * r.nodes[n - 1];
    else if (i == 3)
      z = 1.91 * z - 0.91 * r.nodes[n - 2];
    else
      z = 2.0 * z - r.nodes[n - i + 1];
    double pp = 0;
    for (int it = 0;; ++it) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(double(j) / (j + 1.0)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-14) break;
      if (it > 100) throw std::runtime_error("gauss_hermite: Newton failed");
    }
    r.nodes[n - 1 - i] = z;
    r.nodes[i] = -z;
    r.weights[n - 1 - i] = r.weights[i] = 2.0 / (pp * pp);
  }
  return r;
}

// Mapped Gauss-Legendre on [0, T] for integrals of e^{-s t} f(t); the caller
// picks T from the decay rate.
inline QuadratureRule half_line_rule(double T, int n) {
  if (T <= 0) throw std::domain_error("half_line_rule: T must be positive");
  QuadratureRule r = gauss_legendre_ab(n, 0.0, T);
  r.domain = QuadDomain::HalfLine;
  return r;
}

}  // namespace cfk
