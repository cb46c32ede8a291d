#include "hardysym/circle_fourier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hardysym {

Complex unit_root(std::int64_t r, std::int64_t m) {
  r %= m;
  if (r < 0) r += m;
  // angle = (pi/2) (quadrant + rem/m); the residual angle is computed on
  // [0, pi/2) and rotated by i^quadrant, which is exact.
  const std::int64_t quarter = 4 * r;
  const std::int64_t quadrant = quarter / m;
  const std::int64_t rem = quarter % m;
  Complex base(1.0, 0.0);
  if (rem != 0) {
    const double t = 0.5 * std::numbers::pi * static_cast<double>(rem) / static_cast<double>(m);
    base = Complex(std::cos(t), std::sin(t));
  }
  switch (quadrant) {
    case 1: return {-base.imag(), base.real()};
    case 2: return {-base.real(), -base.imag()};
    case 3: return {base.imag(), -base.real()};
    default: return base;
  }
}

CircleSamples::CircleSamples(std::vector<Complex> values) : values_(std::move(values)) {
  if (values_.size() < kMinSamples) throw Error(ErrorKind::GridTooCoarse);
}

Complex CircleSamples::node(std::size_t j) const {
  return unit_root(static_cast<std::int64_t>(j), static_cast<std::int64_t>(size()));
}

CircleSamples sample_circle(const SymbolSpec& symbol, std::size_t m) {
  auto samples = sample_function(m, [&](Complex z) { return symbol(z); });
  for (const auto& v : samples.values()) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::UnsupportedSymbol,
                  std::string(to_string(symbol.kind())) + " is not finite on the grid");
    }
  }
  return samples;
}

FourierTable::FourierTable(int window) : window_(window) {
  if (window < 0) throw Error(ErrorKind::CoefficientWindow, "negative window");
  coeffs_.assign(2 * static_cast<std::size_t>(window) + 1, Complex{});
}

FourierTable FourierTable::from_coefficients(const LaurentCoefficients& coeffs, int window) {
  FourierTable table(window);
  for (const auto& [n, c] : coeffs) {
    if (std::abs(n) <= window) table.at(n) = c;
  }
  return table;
}

Complex FourierTable::operator()(int n) const {
  if (std::abs(n) > window_) {
    throw Error(ErrorKind::CoefficientWindow,
                "index " + std::to_string(n) + " outside window " + std::to_string(window_));
  }
  return coeffs_[static_cast<std::size_t>(n + window_)];
}

Complex& FourierTable::at(int n) {
  if (std::abs(n) > window_) {
    throw Error(ErrorKind::CoefficientWindow,
                "index " + std::to_string(n) + " outside window " + std::to_string(window_));
  }
  return coeffs_[static_cast<std::size_t>(n + window_)];
}

double FourierTable::max_abs() const {
  double out = 0.0;
  for (const auto& c : coeffs_) out = std::max(out, std::abs(c));
  return out;
}

LaurentCoefficients FourierTable::nonzero() const {
  LaurentCoefficients out;
  for (int n = -window_; n <= window_; ++n) {
    const Complex c = (*this)(n);
    if (c != Complex{}) out[n] = c;
  }
  return out;
}

FourierTable fourier_coefficients(const CircleSamples& samples, int window) {
  const auto m = static_cast<std::int64_t>(samples.size());
  if (window < 0 || 2 * static_cast<std::int64_t>(window) + 1 > m) {
    throw Error(ErrorKind::AliasingWindow, "2K+1 = " + std::to_string(2 * window + 1) +
                                               " exceeds M = " + std::to_string(m));
  }
  std::vector<Complex> roots(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r) roots[r] = unit_root(r, m);

  FourierTable table(window);
  const auto& values = samples.values();
  for (int n = -window; n <= window; ++n) {
    Complex acc(0.0, 0.0);
    std::int64_t index = 0;  // j * n mod m
    const std::int64_t step = ((n % m) + m) % m;
    for (std::int64_t j = 0; j < m; ++j) {
      acc += values[j] * std::conj(roots[index]);
      index += step;
      if (index >= m) index -= m;
    }
    table.at(n) = acc / static_cast<double>(m);
  }
  return table;
}

Complex synthesize(const FourierTable& table, Complex z) {
  if (std::abs(std::abs(z) - 1.0) > kCircleTolerance) throw Error(ErrorKind::NotOnCircle);
  const int k = table.window();
  Complex acc = table(0);
  Complex zp(1.0, 0.0);
  Complex zm(1.0, 0.0);
  const Complex zinv = 1.0 / z;
  for (int n = 1; n <= k; ++n) {
    zp *= z;
    zm *= zinv;
    acc += table(n) * zp + table(-n) * zm;
  }
  return acc;
}

Complex inner_product(const CircleSamples& u, const CircleSamples& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorKind::GridMismatch,
                std::to_string(u.size()) + " vs " + std::to_string(v.size()));
  }
  Complex acc(0.0, 0.0);
  for (std::size_t j = 0; j < u.size(); ++j) acc += u[j] * std::conj(v[j]);
  return acc * (kTwoPi / static_cast<double>(u.size()));
}

FourierTable symbol_coefficients(const SymbolSpec& symbol, int window, std::size_t m) {
  if (symbol.kind() == SymbolKind::Finite) {
    return FourierTable::from_coefficients(symbol.coeffs(), window);
  }
  return fourier_coefficients(sample_circle(symbol, m), window);
}

}  // namespace hardysym
