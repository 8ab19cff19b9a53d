#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <set>

#include "cfk/bruteforce.hpp"
#include "cfk/polyfield.hpp"

using namespace cfk;
using rational = boost::multiprecision::cpp_rational;

namespace {

template <class R>
PolyField<R> random_field(int m, int deg, std::mt19937_64& rng, int nterms = 6) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> pick_deg(0, deg);
  std::uniform_int_distribution<unsigned> pick_blade(0, (1u << m) - 1);
  PolyField<R> f(m);
  for (int i = 0; i < nterms; ++i) {
    int d = pick_deg(rng);
    std::vector<int> mono(m, 0);
    std::uniform_int_distribution<int> pick_var(0, m - 1);
    for (int j = 0; j < d; ++j) ++mono[pick_var(rng)];
    f.add_term(mono, Multivector<R>::basis_blade(m, pick_blade(rng), R(coeff(rng))));
  }
  f.prune();
  return f;
}

template <class R>
PolyField<R> random_homogeneous(int m, int k, std::mt19937_64& rng, int nterms = 8) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  PolyField<R> f(m);
  std::uniform_int_distribution<int> pick_var(0, m - 1);
  for (int i = 0; i < nterms; ++i) {
    std::vector<int> mono(m, 0);
    for (int j = 0; j < k; ++j) ++mono[pick_var(rng)];
    f.add_term(mono, Multivector<R>::scalar(m, R(coeff(rng))));
  }
  f.prune();
  return f;
}

// |y|^{2j} powers of the radius as a scalar field
template <class R>
PolyField<R> radial_power(int m, int j) {
  auto one = PolyField<R>::constant(m, Multivector<R>::scalar(m, R(1)));
  PolyField<R> r2(m);
  for (int i = 0; i < m; ++i) {
    std::vector<int> mono(m, 0);
    mono[i] = 2;
    r2.add_term(mono, Multivector<R>::scalar(m, R(1)));
  }
  auto acc = one;
  for (int s = 0; s < j; ++s) {
    PolyField<R> next(m);
    for (const auto& [ma, ca] : acc.terms())
      for (const auto& [mb, cb] : r2.terms()) {
        auto mono = ma;
        for (int t = 0; t < m; ++t) mono[t] += mb[t];
        next.add_term(mono, ca * cb[0]);
      }
    acc = next;
  }
  return acc;
}

}  // namespace

TEST_CASE("dirac operator basics") {
  // D y_1 = e_1
  auto f = PolyField<rational>::coordinate(2, 0);
  auto df = dirac_apply(f);
  REQUIRE(df.terms().size() == 1);
  CHECK(df.terms().begin()->second[1] == rational(1));
  // D 1 = 0
  auto one = PolyField<rational>::constant(2, Multivector<rational>::scalar(2, rational(1)));
  CHECK(dirac_apply(one).is_zero());
  // y_1 - e_1 e_2 y_2 is monogenic in m=2
  PolyField<rational> mono(2);
  mono.add_term({1, 0}, Multivector<rational>::scalar(2, rational(1)));
  mono.add_term({0, 1}, Multivector<rational>::basis_blade(2, 3u, rational(-1)));
  CHECK(dirac_apply(mono).is_zero());
}

TEST_CASE("euler operator measures degree") {
  std::mt19937_64 rng(5);
  for (int m = 2; m <= 4; ++m) {
    for (int k = 0; k <= 4; ++k) {
      auto f = random_homogeneous<rational>(m, k, rng);
      auto ef = euler_apply(f);
      auto expect = f * rational(k);
      CHECK((ef - expect).is_zero());
    }
  }
}

TEST_CASE("gamma annihilates radial scalar polynomials exactly") {
  for (int m = 2; m <= 5; ++m) {
    for (int j = 0; j <= 3; ++j) {
      auto f = radial_power<rational>(m, j);
      CHECK(gamma_apply(f).is_zero());
      CHECK(gamma_apply_vector_form(f).is_zero());
    }
  }
  // mixed radial polynomial 3|y|^4 - 7|y|^2 + 2
  auto f = radial_power<rational>(3, 2) * rational(3) - radial_power<rational>(3, 1) * rational(7) +
           radial_power<rational>(3, 0) * rational(2);
  CHECK(gamma_apply(f).is_zero());
}

TEST_CASE("gamma eigenvalue examples") {
  // M_1 = y_1 - e_1e_2 y_2 in m=2: Gamma M_1 = -M_1
  PolyField<rational> m1(2);
  m1.add_term({1, 0}, Multivector<rational>::scalar(2, rational(1)));
  m1.add_term({0, 1}, Multivector<rational>::basis_blade(2, 3u, rational(-1)));
  CHECK((gamma_apply(m1) + m1).is_zero());
  // Gamma(y) = (m-1) y for the vector field y
  for (int m = 2; m <= 5; ++m) {
    PolyField<rational> yf(m);
    for (int j = 0; j < m; ++j) {
      std::vector<int> mono(m, 0);
      mono[j] = 1;
      yf.add_term(mono, Multivector<rational>::basis_blade(m, 1u << j, rational(1)));
    }
    auto gy = gamma_apply(yf);
    CHECK((gy - yf * rational(m - 1)).is_zero());
  }
}

TEST_CASE("bivector-sum and vector forms of gamma agree exactly") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 2 + trial % 4;
    auto f = random_field<rational>(m, 4, rng);
    auto a = gamma_apply(f);
    auto b = gamma_apply_vector_form(f);
    CHECK((a - b).is_zero());
  }
}

TEST_CASE("monogenic projection yields exact gamma eigenvectors") {
  std::mt19937_64 rng(37);
  for (int m = 2; m <= 4; ++m) {
    for (int k = 1; k <= 4; ++k) {
      auto seed = random_homogeneous<rational>(m, k, rng);
      auto mk = monogenic_projection(seed, k);
      if (mk.is_zero()) continue;
      CHECK(dirac_apply(mk).is_zero());
      // Gamma M_k = -k M_k, exactly
      CHECK((gamma_apply(mk) + mk * rational(k)).is_zero());
      // Gamma(y M_k) = (k + m - 1)(y M_k), exactly
      auto ymk = vector_multiply(mk);
      CHECK((gamma_apply(ymk) - ymk * rational(k + m - 1)).is_zero());
    }
  }
}

TEST_CASE("gamma matrix basics") {
  auto g0 = gamma_matrix(2, 0);
  CHECK(g0.matrix.norm() == 0.0);
  // spectrum for m=2, k=1 contains -1 and +1
  auto g1 = gamma_matrix(2, 1);
  Eigen::EigenSolver<Eigen::MatrixXd> es(g1.matrix);
  bool has_m1 = false, has_p1 = false;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    auto ev = es.eigenvalues()(i);
    if (std::abs(ev - cplx(-1.0)) < 1e-10) has_m1 = true;
    if (std::abs(ev - cplx(1.0)) < 1e-10) has_p1 = true;
  }
  CHECK(has_m1);
  CHECK(has_p1);
  // |y|^2 coefficients in m=2, k=2 are annihilated
  auto g2 = gamma_matrix(2, 2);
  Eigen::VectorXd r2 = Eigen::VectorXd::Zero(g2.matrix.rows());
  for (int i = 0; i < static_cast<int>(g2.monomials.size()); ++i) {
    const auto& mono = g2.monomials[i];
    if ((mono[0] == 2 && mono[1] == 0) || (mono[0] == 0 && mono[1] == 2))
      r2(g2.index(i, 0u)) = 1.0;
  }
  CHECK((g2.matrix * r2).norm() <= 1e-14);
  CHECK_THROWS(gamma_matrix(6, 1));
  CHECK_THROWS(gamma_matrix(2, 9));
}

TEST_CASE("gamma matrix spectrum matches the predicted eigenvalue set") {
  for (int m = 2; m <= 4; ++m) {
    for (int k = 0; k <= 4; ++k) {
      auto g = gamma_matrix(m, k);
      std::set<int> predicted;
      for (int l = k; l >= 0; l -= 2) {
        predicted.insert(-l);
        predicted.insert(l + m - 2);
      }
      Eigen::EigenSolver<Eigen::MatrixXd> es(g.matrix);
      bool saw_minus_k = false, saw_plus = false;
      for (int i = 0; i < es.eigenvalues().size(); ++i) {
        cplx ev = es.eigenvalues()(i);
        CHECK(std::abs(ev.imag()) <= 1e-8);
        double re = ev.real();
        double best = 1e9;
        for (int cand : predicted) best = std::min(best, std::abs(re - cand));
        CHECK(best <= 1e-8);
        if (std::abs(re + k) < 1e-8) saw_minus_k = true;
        if (std::abs(re - (k + m - 2)) < 1e-8) saw_plus = true;
      }
      if (k >= 1) {
        CHECK(saw_minus_k);
        CHECK(saw_plus);
      }
    }
  }
}

TEST_CASE("gamma exponential on a monogenic is the scalar phase") {
  // double-precision copy of an exact monogenic, pushed through the Krylov
  // exponential used by the brute-force kernel
  std::mt19937_64 rng(41);
  for (int m = 2; m <= 4; ++m) {
    for (int k = 1; k <= 3; ++k) {
      auto seed = random_homogeneous<rational>(m, k, rng);
      auto mk = monogenic_projection(seed, k);
      if (mk.is_zero()) continue;
      PolyField<double> fd(m);
      for (const auto& [mono, c] : mk.terms()) {
        Multivector<double> cd(m);
        for (std::size_t b = 0; b < c.size(); ++b) cd[b] = static_cast<double>(c[b]);
        fd.add_term(mono, cd);
      }
      std::vector<double> y(m);
      std::normal_distribution<double> nd(0.0, 0.7);
      for (auto& c : y) c = nd(rng);
      double p = 0.9;
      auto lhs = detail::gamma_exp_evaluate(fd, p, y);
      auto direct = fd.evaluate(y);
      cplx phase = std::exp(cplx(0.0, -p * k));
      double err = 0, scale = 0;
      for (std::size_t b = 0; b < lhs.size(); ++b) {
        err = std::max(err, std::abs(lhs[b] - phase * direct[b]));
        scale = std::max(scale, std::abs(direct[b]));
      }
      CHECK(err <= 1e-12 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("kernel_bruteforce p=0 reduces to the plane wave") {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> nd(0.0, 0.6);
  for (int trial = 0; trial < 5; ++trial) {
    int m = 2 + trial % 3;
    std::vector<double> x(m), y(m);
    for (auto& c : x) c = nd(rng);
    for (auto& c : y) c = nd(rng);
    auto f = frame_of(x, y);
    if (f.t > 2.0) continue;
    double residual = 0;
    auto k = kernel_bruteforce(m, 0.0, x, y, 25, &residual);
    cplx expect = std::exp(cplx(0.0, -f.u));
    CHECK(std::abs(k.scalar - expect) <= 1e-12);
    CHECK(std::abs(k.bivector_coeff) <= 1e-12);
    CHECK(residual <= 1e-10);
  }
}

TEST_CASE("kernel_bruteforce m=2 standard kernel is the bivector exponential") {
  std::vector<double> x{1, 0}, y{0, 1};
  double residual = 0;
  auto k = kernel_bruteforce(2, M_PI / 2, x, y, 25, &residual);
  CHECK(k.scalar.real() == Catch::Approx(std::cos(1.0)).epsilon(1e-11));
  CHECK(std::abs(k.scalar.imag()) <= 1e-11);
  CHECK(k.bivector_coeff.real() == Catch::Approx(std::sin(1.0)).epsilon(1e-11));
  CHECK(std::abs(k.bivector_coeff.imag()) <= 1e-11);
  CHECK(residual <= 1e-10);
  // general m=2 frames: K = e^{-iu cos p} e^{x^y sin p} at p = pi/2 -> e^{x^y}
  std::mt19937_64 rng(47);
  std::normal_distribution<double> nd(0.0, 0.6);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> a(2), b(2);
    for (auto& c : a) c = nd(rng);
    for (auto& c : b) c = nd(rng);
    auto f = frame_of(a, b);
    auto k2 = kernel_bruteforce(2, M_PI / 2, a, b, 25);
    CHECK(std::abs(k2.scalar - cplx(std::cos(f.v))) <= 1e-11);
    CHECK(std::abs(k2.bivector_coeff - cplx(sinc(f.v))) <= 1e-11);
  }
}

TEST_CASE("kernel_bruteforce guards") {
  std::vector<double> x{3, 0}, y{0, 3};  // t = 9: tail guard must reject N=10
  CHECK_THROWS_AS(kernel_bruteforce(2, 1.0, x, y, 10), std::domain_error);
  std::vector<double> z{0, 0};
  auto k = kernel_bruteforce(2, 1.0, z, y, 5);
  CHECK(k.scalar == cplx(1.0));
}
