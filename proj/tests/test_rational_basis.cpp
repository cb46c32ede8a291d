#include <doctest.h>

#include <cmath>

#include "hardysym/circle_fourier.hpp"
#include "hardysym/rational_basis.hpp"
#include "support/test_support.hpp"

using namespace hardysym;
using hardysym::testing::Rng;

TEST_CASE("PoleParameter rejects points on or near the circle") {
  CHECK_NOTHROW(PoleParameter(Complex(0.999, 0.0)));
  CHECK_THROWS_AS(PoleParameter(Complex(1.0, 0.0)), Error);
  CHECK_THROWS_AS(PoleParameter(Complex(0.0, 1.0 - 1e-7)), Error);
  try {
    PoleParameter(Complex(1.0, 0.0));
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "p must lie strictly inside the unit disk");
  }
}

TEST_CASE("BasisFamily normalization") {
  for (Complex p : {Complex(0, 0), Complex(0.5, 0), Complex(0.5, 0.3), Complex(-0.1, 0.9)}) {
    const BasisFamily f(PoleParameter(p), 4);
    CHECK(std::abs(f.norm_constant() * f.norm_constant() * kTwoPi - (1.0 - std::norm(p))) <= 1e-14);
  }
}

TEST_CASE("basis_eval") {
  const BasisFamily monomials(PoleParameter(0.0), 4);
  CHECK(std::abs(basis_eval(monomials, 3, Complex(0, 1)) - Complex(0, -1) / std::sqrt(kTwoPi)) < 1e-16);

  const Complex p(0.3, -0.4);
  const BasisFamily f(PoleParameter(p), 3);
  CHECK(basis_eval(f, 1, p) == Complex(0, 0));

  const BasisFamily half(PoleParameter(0.5), 1);
  CHECK(basis_eval(half, 0, 1.0).real() == doctest::Approx(0.69099).epsilon(1e-5));
  CHECK(std::abs(basis_eval(half, 0, 1.0) - std::sqrt(0.75 / kTwoPi) / 0.5) < 1e-15);

  CHECK_THROWS_AS(basis_eval(f, 3, 1.0), Error);
  CHECK_THROWS_AS(basis_eval(f, -1, 1.0), Error);
}

TEST_CASE("basis_taylor") {
  const BasisFamily monomials(PoleParameter(0.0), 3);
  const auto t = basis_taylor(monomials, 2, 4);
  CHECK(t[0] == Complex(0, 0));
  CHECK(t[1] == Complex(0, 0));
  CHECK(std::abs(t[2] - 1.0 / std::sqrt(kTwoPi)) < 1e-16);
  CHECK(t[3] == Complex(0, 0));

  const BasisFamily half(PoleParameter(0.5), 2);
  const double c = std::sqrt(0.75 / kTwoPi);
  const auto g = basis_taylor(half, 0, 3);
  CHECK(std::abs(g[0] - c) < 1e-16);
  CHECK(std::abs(g[1] - 0.5 * c) < 1e-16);
  CHECK(std::abs(g[2] - 0.25 * c) < 1e-16);

  const BasisFamily half_pz(PoleParameter(0.5), 2, BasisVariant::PZ);
  const auto zp = basis_taylor(half, 1, 3);
  const auto pz = basis_taylor(half_pz, 1, 3);
  for (int m = 0; m < 3; ++m) CHECK(pz[m] == -zp[m]);
}

TEST_CASE("basis_taylor agrees with the binomial convolution oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex p = hardysym::testing::random_pole(rng, 0.7);
    const int n = hardysym::testing::random_int(rng, 0, 8);
    const BasisFamily f(PoleParameter(p), n + 1);
    const auto ours = basis_taylor(f, n, 40);
    const auto oracle = hardysym::testing::binomial_taylor(p, n, 40);
    double err = 0.0;
    for (int m = 0; m < 40; ++m) err = std::max(err, std::abs(ours[m] - oracle[m]));
    CHECK(err <= 1e-12);
  }
}

TEST_CASE("gram_matrix") {
  auto deviation = [](const OperatorMatrix& g) {
    return (g.entries - Eigen::MatrixXcd::Identity(g.order(), g.order())).cwiseAbs().maxCoeff();
  };
  CHECK(deviation(gram_matrix(BasisFamily(PoleParameter(0.0), 4), 64)) <= 1e-13);
  CHECK(deviation(gram_matrix(BasisFamily(PoleParameter(0.5), 8), 4096)) <= 1e-10);
  CHECK(deviation(gram_matrix(BasisFamily(PoleParameter(Complex(0, 0.9)), 4), 8192)) <= 1e-8);
  CHECK_THROWS_AS(gram_matrix(BasisFamily(PoleParameter(0.5), 8), 63), Error);
}

TEST_CASE("property: orthonormality for |p| <= 0.8, N <= 16") {
  Rng rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    const Complex p = hardysym::testing::random_pole(rng, 0.8);
    const int n = hardysym::testing::random_int(rng, 1, 16);
    const auto g = gram_matrix(BasisFamily(PoleParameter(p), n), 8192);
    CHECK((g.entries - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("property: Taylor synthesis matches point evaluation") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex p = hardysym::testing::random_pole(rng, 0.7);
    const BasisFamily f(PoleParameter(p), 9);
    const Eigen::MatrixXcd taylor = taylor_matrix(f, 256);
    double err = 0.0;
    for (int j = 0; j < 32; ++j) {
      const Complex z = unit_root(j, 32);
      for (int n = 0; n <= 8; ++n) {
        Complex acc(0.0, 0.0);
        for (int m = 255; m >= 0; --m) acc = acc * z + taylor(m, n);
        err = std::max(err, std::abs(acc - basis_eval(f, n, z)));
      }
    }
    CHECK(err <= 1e-8);
  }
}

TEST_CASE("property: R_0 reproduces point evaluation at p") {
  Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex p = hardysym::testing::random_pole(rng, 0.8);
    const BasisFamily f(PoleParameter(p), 1);
    const int degree = hardysym::testing::random_int(rng, 0, 10);
    LaurentCoefficients g;
    for (int n = 0; n <= degree; ++n) g[n] = hardysym::testing::random_complex(rng);
    const auto gs = sample_circle(SymbolSpec::finite(g), 4096);
    const auto r0 = sample_function(4096, [&](Complex z) { return basis_eval(f, 0, z); });
    const Complex expected = std::sqrt(kTwoPi * (1.0 - std::norm(p))) * evaluate_laurent(g, p);
    CHECK(std::abs(inner_product(gs, r0) - expected) <= 1e-9);
  }
}

TEST_CASE("property: variant sign law is exact") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const PoleParameter pole(hardysym::testing::random_pole(rng, 0.9));
    const BasisFamily zp(pole, 12);
    const BasisFamily pz(pole, 12, BasisVariant::PZ);
    for (int j = 0; j < 64; ++j) {
      const Complex z = unit_root(j, 64);
      for (int n = 0; n < 12; ++n) {
        const Complex sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(basis_eval(pz, n, z) == sign * basis_eval(zp, n, z));
      }
    }
    const Eigen::MatrixXcd a = taylor_matrix(zp, 48);
    const Eigen::MatrixXcd b = taylor_matrix(pz, 48);
    for (int n = 0; n < 12; ++n) CHECK(b.col(n) == ((n % 2 == 0) ? 1.0 : -1.0) * a.col(n));
  }
}
