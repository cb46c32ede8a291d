#include <doctest.h>

#include <cmath>

#include "hardysym/circle_fourier.hpp"
#include "hardysym/rational_basis.hpp"
#include "support/test_support.hpp"

using namespace hardysym;
using hardysym::testing::Rng;

namespace {

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("unit_root is exact on quarter turns") {
  CHECK(unit_root(0, 8) == Complex(1, 0));
  CHECK(unit_root(2, 8) == Complex(0, 1));
  CHECK(unit_root(4, 8) == Complex(-1, 0));
  CHECK(unit_root(6, 8) == Complex(0, -1));
  CHECK(unit_root(-2, 8) == Complex(0, -1));
  CHECK(std::abs(unit_root(1, 8) - std::polar(1.0, M_PI / 4)) < 1e-16);
}

TEST_CASE("sample_circle") {
  SUBCASE("constant") {
    const auto s = sample_circle(SymbolSpec::finite({{0, 1.0}}), 4);
    for (const auto& v : s.values()) CHECK(v == Complex(1, 0));
  }
  SUBCASE("identity symbol hits the fourth roots of unity") {
    const auto s = sample_circle(SymbolSpec::finite({{1, 1.0}}), 4);
    CHECK(s[0] == Complex(1, 0));
    CHECK(s[1] == Complex(0, 1));
    CHECK(s[2] == Complex(-1, 0));
    CHECK(s[3] == Complex(0, -1));
  }
  SUBCASE("ex1 at theta = 0") {
    const auto s = sample_circle(SymbolSpec::ex1(0.5), 8);
    CHECK(std::abs(s[0] - Complex(1, 0)) < 1e-15);
  }
  SUBCASE("errors") {
    CHECK(throws_kind(ErrorKind::GridTooCoarse,
                      [] { sample_circle(SymbolSpec::finite({{0, 1.0}}), 3); }));
    // 1/z at z = 0 cannot happen on the grid, but a pole can.
    CHECK(throws_kind(ErrorKind::PoleOutsideDisk,
                      [] { SymbolSpec::analytic_fraction(PoleParameter(1.0)); }));
  }
}

TEST_CASE("fourier_coefficients") {
  SUBCASE("finite Laurent roundtrip") {
    const auto t = fourier_coefficients(sample_circle(SymbolSpec::finite({{1, 1.0}, {-1, 1.0}}), 16), 2);
    CHECK(std::abs(t(1) - 1.0) <= 1e-14);
    CHECK(std::abs(t(-1) - 1.0) <= 1e-14);
    CHECK(std::abs(t(0)) <= 1e-14);
    CHECK(std::abs(t(2)) <= 1e-14);
    CHECK(std::abs(t(-2)) <= 1e-14);
    CHECK(t.convention() == FourierConvention::Plain);
  }
  SUBCASE("constant") {
    for (std::size_t m : {4u, 7u, 64u}) {
      const auto t = fourier_coefficients(sample_circle(SymbolSpec::finite({{0, 1.0}}), m), 1);
      CHECK(std::abs(t(0) - 1.0) <= 1e-15);
      CHECK(std::abs(t(1)) <= 1e-15);
      CHECK(std::abs(t(-1)) <= 1e-15);
    }
  }
  SUBCASE("analytic fraction against the geometric series") {
    const auto phi = SymbolSpec::analytic_fraction(PoleParameter(0.5));
    const auto t = fourier_coefficients(sample_circle(phi, 4096), 8);
    const auto oracle = hardysym::testing::geometric(0.5, 9);
    double err = 0.0;
    for (int n = 0; n <= 8; ++n) err = std::max(err, std::abs(t(n) - oracle[n]));
    for (int n = -8; n < 0; ++n) err = std::max(err, std::abs(t(n)));
    CHECK(err <= 1e-12);
  }
  SUBCASE("aliasing guard") {
    const auto s = sample_circle(SymbolSpec::finite({{0, 1.0}}), 8);
    CHECK_NOTHROW(fourier_coefficients(s, 3));
    CHECK(throws_kind(ErrorKind::AliasingWindow, [&] { fourier_coefficients(s, 4); }));
  }
  SUBCASE("window access") {
    FourierTable t(2);
    CHECK(throws_kind(ErrorKind::CoefficientWindow, [&] { (void)t(3); }));
  }
}

TEST_CASE("synthesize") {
  FourierTable one(0);
  one.at(0) = 1.0;
  CHECK(synthesize(one, Complex(0, 1)) == Complex(1, 0));

  FourierTable cosine(1);
  cosine.at(1) = 1.0;
  cosine.at(-1) = 1.0;
  for (double theta : {0.0, 0.3, 1.7, 3.0}) {
    CHECK(std::abs(synthesize(cosine, std::polar(1.0, theta)) - 2.0 * std::cos(theta)) < 1e-15);
  }

  const auto t = fourier_coefficients(
      sample_circle(SymbolSpec::analytic_fraction(PoleParameter(0.5)), 4096), 32);
  CHECK(std::abs(synthesize(t, Complex(-1, 0)) - 2.0) <= 1e-8);

  CHECK(throws_kind(ErrorKind::NotOnCircle, [&] { synthesize(one, Complex(1.0 + 1e-9, 0)); }));
}

TEST_CASE("inner_product") {
  const std::size_t m = 64;
  auto monomial = [&](int n) { return sample_circle(SymbolSpec::finite({{n, 1.0}}), m); };
  for (int n = 0; n < 20; ++n) {
    CHECK(std::abs(inner_product(monomial(n), monomial(n)) - kTwoPi) < 1e-13);
  }
  CHECK(std::abs(inner_product(monomial(1), monomial(2))) < 1e-15);

  // R_0 reproduces point evaluation at p, so <1, R_0> = sqrt(2 pi (1 - |p|^2)).
  const BasisFamily family(PoleParameter(0.5), 1);
  const auto r0 = sample_function(4096, [&](Complex z) { return basis_eval(family, 0, z); });
  const auto ones = sample_circle(SymbolSpec::finite({{0, 1.0}}), 4096);
  CHECK(std::abs(inner_product(ones, r0) - std::sqrt(kTwoPi * 0.75)) <= 1e-10);

  CHECK(throws_kind(ErrorKind::GridMismatch, [&] { inner_product(monomial(0), ones); }));
}

TEST_CASE("property: anti-aliasing, synthesis and conjugate symmetry") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int lo = hardysym::testing::random_int(rng, 0, 10);
    const int hi = hardysym::testing::random_int(rng, 0, 10);
    const auto coeffs = hardysym::testing::random_laurent(rng, lo, hi);
    const auto symbol = SymbolSpec::finite(coeffs);
    const int k = std::max(lo, hi);
    const std::size_t m = 2 * static_cast<std::size_t>(k) + 2 + hardysym::testing::random_int(rng, 0, 40);
    const auto samples = sample_circle(symbol, m);
    const auto table = fourier_coefficients(samples, k);

    double coeff_err = 0.0;
    for (int n = -k; n <= k; ++n) {
      auto it = coeffs.find(n);
      coeff_err = std::max(coeff_err, std::abs(table(n) - (it == coeffs.end() ? Complex{} : it->second)));
    }
    CHECK(coeff_err <= 1e-13);

    double synth_err = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      synth_err = std::max(synth_err, std::abs(synthesize(table, samples.node(j)) - samples[j]));
    }
    CHECK(synth_err <= 1e-12);

    // Parseval on the window.
    double energy = 0.0;
    for (int n = -k; n <= k; ++n) energy += std::norm(table(n));
    CHECK(inner_product(samples, samples).real() / kTwoPi >= energy - 1e-10);

    // Homogeneity is exact: c * samples goes through the same operations.
    const Complex c = hardysym::testing::random_complex(rng);
    std::vector<Complex> scaled(samples.values());
    for (auto& v : scaled) v *= c;
    const auto scaled_table = fourier_coefficients(CircleSamples(scaled), k);
    double homogeneity = 0.0;
    for (int n = -k; n <= k; ++n) homogeneity = std::max(homogeneity, std::abs(scaled_table(n) - c * table(n)));
    CHECK(homogeneity <= 1e-14 * std::max(1.0, std::abs(c) * table.max_abs()));
  }

  // Real-valued samples: c_{-n} = conj(c_n).
  std::vector<Complex> real_part;
  const auto s = sample_circle(SymbolSpec::ex1(0.4), 1024);
  for (const auto& v : s.values()) real_part.emplace_back(v.real(), 0.0);
  const auto t = fourier_coefficients(CircleSamples(real_part), 20);
  for (int n = 0; n <= 20; ++n) CHECK(std::abs(t(-n) - std::conj(t(n))) <= 1e-13);
}
