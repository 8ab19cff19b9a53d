#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "cfk/bruteforce.hpp"
#include "cfk/kernel.hpp"

using namespace cfk;

namespace {

GeometricFrame random_frame(std::mt19937& rng, double umax = 1.4, double vmin = 0.15,
                            double vmax = 1.6) {
  std::uniform_real_distribution<double> du(-umax, umax), dv(vmin, vmax);
  return GeometricFrame::from_uv(du(rng), dv(rng));
}

}  // namespace

TEST_CASE("series collapses to the plane wave at angle zero") {
  std::mt19937 rng(3);
  for (int m : {3, 4, 5, 6, 7, 8}) {
    for (int i = 0; i < 6; ++i) {
      auto f = random_frame(rng);
      auto k = kernel_series(m, 0.0, f);
      CHECK(std::abs(k.scalar - std::exp(cplx(0.0, -f.u))) < 1e-12);
      CHECK(std::abs(k.bivector_coeff) < 1e-12);
    }
  }
}

TEST_CASE("standard-angle series at orthogonal arguments") {
  // m = 4, u = 0, v = 1: scalar part sin(1), wedge coefficient (1 - cos 1)
  auto f = GeometricFrame::from_uv(0.0, 1.0);
  auto k = kernel_series(4, M_PI / 2, f);
  CHECK(std::abs(k.scalar - std::sin(1.0)) < 1e-13);
}

TEST_CASE("series matches the operator-exponential oracle") {
  std::mt19937 rng(11);
  for (int m : {3, 4, 5}) {
    for (double p : {M_PI / 2, 0.8}) {
      for (int i = 0; i < 4; ++i) {
        auto f = random_frame(rng, 1.1, 0.2, 1.2);
        std::vector<double> x, y;
        detail::frame_vectors(m, f, x, y);
        double residual = 0;
        auto kb = kernel_bruteforce(m, p, x, y, 30, &residual);
        CHECK(residual < 1e-10);
        CHECK(kernel_series(m, p, f).dist(kb) < 1e-9);
      }
    }
  }
}

TEST_CASE("corrected closed form equals the series for m = 4 and 8") {
  std::mt19937 rng(23);
  for (int m : {4, 8}) {
    for (int i = 0; i < 20; ++i) {
      auto f = random_frame(rng);
      auto c = kernel_closed_even(m, f, ClosedEvenMode::corrected);
      auto s = kernel_series(m, M_PI / 2, f);
      CHECK(c.dist(s) < 1e-9);
    }
  }
}

TEST_CASE("closed form for m = 4 in elementary terms") {
  auto f = GeometricFrame::from_uv(0.6, 1.1);
  double u = f.u, v = f.v;
  auto k = kernel_closed_even(4, f, ClosedEvenMode::corrected);
  CHECK(std::abs(k.scalar - (1.0 - u) * std::sin(v) / v) < 1e-14);
  CHECK(std::abs(k.bivector_coeff - u * (v * std::cos(v) - std::sin(v)) / (v * v * v)) < 1e-14);
}

TEST_CASE("printed closed form carries a frame-dependent scalar defect") {
  // The finite Bessel-sum formula is off in its scalar A-block: the ratio to
  // the series is 1/2 only at u = 0 and drifts with u, while the wedge block
  // matches exactly. Pinning the defect here documents why dispatch uses the
  // re-derived inversion.
  auto f0 = GeometricFrame::from_uv(0.0, 1.0);
  auto printed0 = kernel_closed_even(4, f0, ClosedEvenMode::as_printed);
  auto series0 = kernel_series(4, M_PI / 2, f0);
  CHECK(std::abs(printed0.scalar - 2.0 * series0.scalar) < 1e-12);
  CHECK(std::abs(printed0.scalar - 2.0 * std::sin(1.0)) < 1e-12);

  auto f1 = GeometricFrame::from_uv(0.9, 1.0);
  auto printed1 = kernel_closed_even(4, f1, ClosedEvenMode::as_printed);
  auto series1 = kernel_series(4, M_PI / 2, f1);
  double ratio = (printed1.scalar / series1.scalar).real();
  CHECK(std::abs(ratio - 2.0) > 0.1);
  double wedge_ratio = (printed1.bivector_coeff / series1.bivector_coeff).real();
  CHECK(std::abs(wedge_ratio - 1.0) < 1e-10);
}

TEST_CASE("calibrated closed form is exact at the reference frame") {
  auto ref = GeometricFrame::from_uv(0.3, 0.7);
  auto cal = kernel_closed_even(4, ref, ClosedEvenMode::calibrated);
  auto s = kernel_series(4, M_PI / 2, ref);
  CHECK(std::abs(cal.scalar - s.scalar) < 1e-13);
}

TEST_CASE("integral representation equals the series for m = 3..8") {
  std::mt19937 rng(31);
  auto rule = gauss_legendre(64);
  for (int m : {3, 4, 5, 6, 7, 8}) {
    for (int i = 0; i < 6; ++i) {
      auto f = random_frame(rng, 1.2, 0.2, 2.5);
      CHECK(kernel_integral(m, f, rule).dist(kernel_series(m, M_PI / 2, f)) < 1e-12);
    }
  }
}

TEST_CASE("dimension-2 kernel against the generating function") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> ang(0.1, M_PI - 0.1);
  for (int i = 0; i < 20; ++i) {
    auto f = random_frame(rng);
    double p = (i % 5 == 0) ? M_PI / 2 : ang(rng);
    CHECK(kernel_dim2(p, f).dist(genfun_closed(p, f, cplx(0.0))) < 1e-13);
  }
}

TEST_CASE("kernel vanishes smoothly at the origin and collinear frames") {
  GeometricFrame origin{0.0, 0.0, 0.0};
  CHECK(kernel_series(5, 1.0, origin).scalar == cplx(1.0));
  auto ki = kernel_integral(4, origin, gauss_legendre(32));
  CHECK(std::abs(ki.scalar - 1.0) < 1e-13);

  GeometricFrame collinear{0.7, 0.0, 0.7};
  auto ks = kernel_series(4, M_PI / 2, collinear);
  auto kc = kernel_closed_even(4, collinear, ClosedEvenMode::corrected);
  CHECK(std::isfinite(kc.bivector_coeff.real()));
  CHECK(ks.dist(kc) < 1e-12);
}

TEST_CASE("series error estimate bounds the truncation") {
  auto f = GeometricFrame::from_uv(0.4, 1.8);
  double err = 1.0;
  auto a = kernel_series(6, 1.2, f, 1e-12, &err);
  CHECK(err < 1e-11);
  auto b = kernel_series(6, 1.2, f, 1e-6);
  CHECK(a.dist(b) < 1e-6);
}

TEST_CASE("dispatcher picks a representation consistent with the series") {
  std::mt19937 rng(53);
  for (int i = 0; i < 8; ++i) {
    auto f = random_frame(rng);
    KernelRequest req;
    req.frame = f;

    req.m = 2;
    req.p = 0.9;
    auto r2 = kernel(req);
    CHECK(r2.value.dist(kernel_dim2(0.9, f)) < 1e-14);

    req.m = 4;
    req.p = M_PI / 2;
    auto r4 = kernel(req);
    CHECK(r4.used == KernelStrategy::closed_even);
    CHECK(r4.value.dist(kernel_series(4, M_PI / 2, f)) < 1e-9);

    req.m = 5;
    req.p = 1.3;
    auto r5 = kernel(req);
    CHECK(r5.used == KernelStrategy::series);
    CHECK(r5.err_est < 1e-11);
  }
}

TEST_CASE("explicit strategies agree with each other") {
  auto f = GeometricFrame::from_uv(-0.5, 1.1);
  KernelRequest req;
  req.frame = f;
  req.m = 6;
  req.p = 0.4;
  req.strategy = KernelStrategy::genfun;
  auto g = kernel(req);
  req.strategy = KernelStrategy::series;
  auto s = kernel(req);
  CHECK(g.value.dist(s.value) < 1e-11);

  req.p = M_PI / 2;
  req.strategy = KernelStrategy::integral;
  auto ig = kernel(req);
  req.strategy = KernelStrategy::series;
  auto ss = kernel(req);
  CHECK(ig.value.dist(ss.value) < 1e-10);

  req.m = 4;
  req.strategy = KernelStrategy::bruteforce;
  auto bf = kernel(req);
  req.strategy = KernelStrategy::series;
  CHECK(bf.value.dist(kernel(req).value) < 1e-9);
}

TEST_CASE("oracle is symmetric under swapping the vector pair") {
  // The kernel is a function of u, v, t and the oriented plane alone, so
  // evaluating the operator exponential with the roles of the two vectors
  // exchanged reproduces the same scalar and the same coefficient relative
  // to each pair's own wedge.
  std::vector<double> x{1.2, 0.3, 0.0, 0.0}, y{0.2, 0.9, 0.1, 0.0};
  auto kxy = kernel_bruteforce(4, M_PI / 2, x, y, 30);
  auto kyx = kernel_bruteforce(4, M_PI / 2, y, x, 30);
  CHECK(kxy.frame.compatible(kyx.frame, 1e-12));
  CHECK(std::abs(kxy.scalar - kyx.scalar) < 1e-11);
  CHECK(std::abs(kxy.bivector_coeff - kyx.bivector_coeff) < 1e-11);
}

TEST_CASE("rotation invariance of the oracle evaluation") {
  // The kernel depends on (x, y) only through u, v, t: evaluate the oracle
  // on two vector pairs realizing the same frame.
  int m = 4;
  std::vector<double> x1{1.1, 0.0, 0.0, 0.0}, y1{0.5, 0.8, 0.0, 0.0};
  double c = std::cos(0.6), s = std::sin(0.6);
  std::vector<double> x2{1.1 * c, 1.1 * s, 0.0, 0.0},
      y2{0.5 * c - 0.8 * s, 0.5 * s + 0.8 * c, 0.0, 0.0};
  auto k1 = kernel_bruteforce(m, M_PI / 2, x1, y1, 30);
  auto k2 = kernel_bruteforce(m, M_PI / 2, x2, y2, 30);
  CHECK(k1.frame.compatible(k2.frame, 1e-10));
  CHECK(std::abs(k1.scalar - k2.scalar) < 1e-11);
  CHECK(std::abs(k1.bivector_coeff - k2.bivector_coeff) < 1e-11);
}

TEST_CASE("invalid requests are rejected") {
  auto f = GeometricFrame::from_uv(0.2, 0.5);
  CHECK_THROWS_AS(kernel_series(2, 1.0, f), std::invalid_argument);
  CHECK_THROWS_AS(kernel_integral(2, f, gauss_legendre(16)), std::invalid_argument);
  CHECK_THROWS_AS(kernel_closed_even(6, f), std::invalid_argument);
  CHECK_THROWS_AS(kernel_closed_even(3, f), std::invalid_argument);

  KernelRequest req;
  req.frame = f;
  req.m = 4;
  req.p = 1.0;
  req.strategy = KernelStrategy::closed_even;
  CHECK_THROWS_AS(kernel(req), std::invalid_argument);
  req.strategy = KernelStrategy::integral;
  CHECK_THROWS_AS(kernel(req), std::invalid_argument);
  req.m = 5;
  req.strategy = KernelStrategy::genfun;
  CHECK_THROWS_AS(kernel(req), std::invalid_argument);
  req.m = 1;
  req.strategy = KernelStrategy::automatic;
  CHECK_THROWS_AS(kernel(req), std::invalid_argument);
}
