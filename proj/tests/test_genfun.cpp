#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "cfk/genfun.hpp"
#include "cfk/jet.hpp"
#include "cfk/kernel.hpp"

using namespace cfk;

TEST_CASE("jet product is the Cauchy product") {
  TaylorJet<cplx> a(3), b(3);
  a.c = {1.0, 2.0, 0.5, -1.0};
  b.c = {3.0, cplx(0, 1), 2.0, 0.0};
  auto c = a * b;
  CHECK(std::abs(c.c[0] - cplx(3.0)) < 1e-15);
  CHECK(std::abs(c.c[1] - (cplx(0, 1) + 6.0)) < 1e-15);
  CHECK(std::abs(c.c[2] - (2.0 + cplx(0, 2) + 1.5)) < 1e-15);
  CHECK(std::abs(c.c[3] - (4.0 + cplx(0, 0.5) - 3.0)) < 1e-15);
}

TEST_CASE("entire series on a complex jet reproduces cos of a linear argument") {
  // cos(z0 + a) expanded around a = 0
  cplx z0(0.4, -0.2);
  TaylorJet<cplx> lin(4);
  lin.c = {z0 * z0, 2.0 * z0, 1.0, 0.0, 0.0};  // (z0 + a)^2
  auto cj = entire_series_on_jet(
      lin,
      [](int j) {
        double c = 1.0;
        for (int i = 1; i <= 2 * j; ++i) c /= i;
        return (j % 2 ? -c : c);
      },
      40, cplx(1.0));
  CHECK(std::abs(cj.c[0] - std::cos(z0)) < 1e-14);
  CHECK(std::abs(cj.c[1] + std::sin(z0)) < 1e-14);
  CHECK(std::abs(cj.c[2] + 0.5 * std::cos(z0)) < 1e-14);
}

TEST_CASE("closed and matrix forms agree on random inputs") {
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> ang(0.15, M_PI - 0.15);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    double p = (i % 7 == 0) ? M_PI / 2 : ang(rng);
    double u = 1.5 * unif(rng), v = 0.1 + std::abs(1.5 * unif(rng));
    auto f = GeometricFrame::from_uv(u, v);
    cplx a(unif(rng), unif(rng));
    auto c = genfun_closed(p, f, a);
    auto m = genfun_matrix(p, f, a);
    CHECK(c.dist(m) < 1e-10);
  }
}

TEST_CASE("matrix form works at a collinear frame") {
  GeometricFrame f{0.8, 0.0, 0.8};
  auto c = genfun_closed(M_PI / 2, f, cplx(0.3, 0.1));
  auto m = genfun_matrix(M_PI / 2, f, cplx(0.3, 0.1));
  CHECK(c.dist(m) < 1e-12);
}

TEST_CASE("taylor coefficients reproduce the dimension-2 kernel") {
  for (double p : {M_PI / 2, 0.7, 2.1}) {
    for (double u : {-0.9, 0.0, 1.2}) {
      auto f = GeometricFrame::from_uv(u, 1.3);
      auto coeffs = genfun_coeffs(p, f, 0);
      auto k2 = kernel_dim2(p, f);
      CHECK(coeffs[0].dist(k2) < 1e-13);
    }
  }
}

TEST_CASE("taylor coefficients match the series kernel for m = 4 and 6") {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (double p : {M_PI / 2, 0.7}) {
    for (int i = 0; i < 10; ++i) {
      double u = 1.4 * unif(rng), v = 0.2 + std::abs(1.2 * unif(rng));
      auto f = GeometricFrame::from_uv(u, v);
      auto coeffs = genfun_coeffs(p, f, 2);
      CHECK(coeffs[1].dist(kernel_series(4, p, f)) < 1e-11);
      CHECK(coeffs[2].dist(kernel_series(6, p, f)) < 1e-11);
    }
  }
}

TEST_CASE("generating function at a = 0 equals the dimension-2 kernel") {
  auto f = GeometricFrame::from_uv(0.5, 0.9);
  auto g = genfun_closed(1.1, f, cplx(0.0));
  CHECK(g.dist(kernel_dim2(1.1, f)) < 1e-15);
}

TEST_CASE("integral form of the standard-angle generating function") {
  auto rule = gauss_legendre(96);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int i = 0; i < 12; ++i) {
    double u = 1.2 * unif(rng), v = 0.15 + std::abs(1.4 * unif(rng));
    double a = unif(rng);
    auto f = GeometricFrame::from_uv(u, v);
    auto gi = genfun_integral(f, a, rule);
    auto gc = genfun_closed(M_PI / 2, f, cplx(a));
    CHECK(gi.dist(gc) < 1e-9);
  }
}

TEST_CASE("integral form at t = 0 reduces to the boundary exponential") {
  GeometricFrame f{0.0, 0.0, 0.0};
  auto g = genfun_integral(f, 0.4, gauss_legendre(32));
  CHECK(std::abs(g.scalar - std::exp(0.4)) < 1e-12);
}

TEST_CASE("integral wrapper reports a quadrature error estimate") {
  auto f = GeometricFrame::from_uv(0.3, 1.0);
  double err = 1.0;
  auto g = genfun_integral(f, 0.2, 48, &err);
  CHECK(err < 1e-9);
  CHECK(g.dist(genfun_closed(M_PI / 2, f, cplx(0.2))) < 1e-9);
}

TEST_CASE("coefficient extraction rejects out-of-range orders") {
  auto f = GeometricFrame::from_uv(0.1, 0.5);
  CHECK_THROWS_AS(genfun_coeffs(0.5, f, 21), std::domain_error);
  CHECK_THROWS_AS(genfun_coeffs(0.5, f, -1), std::domain_error);
}
