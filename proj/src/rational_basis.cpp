#include "hardysym/rational_basis.hpp"

#include <cmath>
#include <string>

#include "hardysym/circle_fourier.hpp"
#include "hardysym/symbol.hpp"

namespace hardysym {

BasisFamily::BasisFamily(PoleParameter pole, int size, BasisVariant variant)
    : pole_(pole),
      size_(size),
      variant_(variant),
      norm_constant_(std::sqrt((1.0 - pole.modulus_squared()) / kTwoPi)) {
  if (size < 1) throw Error(ErrorKind::BadIndex, "basis size must be positive");
}

namespace {

void check_index(const BasisFamily& family, int n) {
  if (n < 0 || n >= family.size()) {
    throw Error(ErrorKind::BadIndex,
                "n = " + std::to_string(n) + " not in [0, " + std::to_string(family.size()) + ")");
  }
}

}  // namespace

Complex basis_eval(const BasisFamily& family, int n, Complex z) {
  check_index(family, n);
  const Complex p = family.pole().value();
  const Complex num = family.variant() == BasisVariant::ZP ? z - p : p - z;
  const Complex den = 1.0 - std::conj(p) * z;
  return family.norm_constant() * ipow(num, n) / ipow(den, n + 1);
}

// Column 0 is scale * conj(p)^m. Each further column multiplies the
// previous one by the Blaschke factor (z - p) / (1 - conj(p) z), i.e.
//   g_m = conj(p) g_{m-1} + f_{m-1} - p f_m,
// which is norm preserving and avoids the cancellation of the explicit
// binomial convolution.
Eigen::MatrixXcd taylor_matrix(const BasisFamily& family, int terms, double scale) {
  if (terms < 1) throw Error(ErrorKind::BadIndex, "at least one Taylor term required");
  const Complex p = family.pole().value();
  const Complex pc = std::conj(p);
  const bool flip = family.variant() == BasisVariant::PZ;

  Eigen::MatrixXcd out(terms, family.size());
  Complex power(scale, 0.0);
  for (int m = 0; m < terms; ++m) {
    out(m, 0) = power;
    power *= pc;
  }
  for (int n = 1; n < family.size(); ++n) {
    Complex prev_g(0.0, 0.0);
    Complex prev_f(0.0, 0.0);
    for (int m = 0; m < terms; ++m) {
      const Complex f = out(m, n - 1);
      const Complex step = flip ? p * f - prev_f : prev_f - p * f;
      const Complex g = pc * prev_g + step;
      out(m, n) = g;
      prev_g = g;
      prev_f = f;
    }
  }
  return out;
}

Eigen::MatrixXcd taylor_matrix(const BasisFamily& family, int terms) {
  return taylor_matrix(family, terms, family.norm_constant());
}

std::vector<Complex> basis_taylor(const BasisFamily& family, int n, int terms) {
  check_index(family, n);
  const BasisFamily prefix(family.pole(), n + 1, family.variant());
  const Eigen::MatrixXcd columns = taylor_matrix(prefix, terms);
  std::vector<Complex> out(static_cast<std::size_t>(terms));
  for (int m = 0; m < terms; ++m) out[m] = columns(m, n);
  return out;
}

OperatorMatrix gram_matrix(const BasisFamily& family, std::size_t samples) {
  const int n = family.size();
  if (samples < 8 * static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::GridTooCoarse, "need M >= 8N");
  }
  std::vector<CircleSamples> elements;
  elements.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    elements.push_back(sample_function(samples, [&](Complex z) { return basis_eval(family, k, z); }));
  }
  OperatorMatrix gram{Eigen::MatrixXcd(n, n), BasisTag::rational(family.pole())};
  for (int m = 0; m < n; ++m) {
    for (int l = 0; l < n; ++l) gram.entries(m, l) = inner_product(elements[l], elements[m]);
  }
  return gram;
}

}  // namespace hardysym
