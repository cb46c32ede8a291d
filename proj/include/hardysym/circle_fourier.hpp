#ifndef HARDYSYM_CIRCLE_FOURIER_HPP
#define HARDYSYM_CIRCLE_FOURIER_HPP

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "hardysym/symbol.hpp"

namespace hardysym {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default number of trapezoid nodes on the circle.
inline constexpr std::size_t kDefaultSamples = 4096;

/// Tolerance on |z| - 1 accepted by synthesize().
inline constexpr double kCircleTolerance = 1e-12;

/// e^{2 pi i r / m}. Quarter-turn multiples are returned exactly.
Complex unit_root(std::int64_t r, std::int64_t m);

/// Values of a function at the nodes z_j = e^{2 pi i j / M}, j = 0..M-1.
class CircleSamples {
 public:
  static constexpr std::size_t kMinSamples = 4;

  explicit CircleSamples(std::vector<Complex> values);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Complex>& values() const noexcept { return values_; }
  Complex operator[](std::size_t j) const { return values_[j]; }
  Complex node(std::size_t j) const;

 private:
  std::vector<Complex> values_;
};

/// Samples f on the M-point grid.
template <class F>
CircleSamples sample_function(std::size_t m, F&& f) {
  if (m < CircleSamples::kMinSamples) throw Error(ErrorKind::GridTooCoarse);
  std::vector<Complex> values(m);
  const auto mm = static_cast<std::int64_t>(m);
  for (std::int64_t j = 0; j < mm; ++j) values[j] = f(unit_root(j, mm));
  return CircleSamples(std::move(values));
}

CircleSamples sample_circle(const SymbolSpec& symbol, std::size_t m);

/// Normalization of a FourierTable. Only PLAIN exists:
///   c_n = (1/2pi) int_0^{2pi} f(e^{it}) e^{-int} dt,  f(z) = sum_n c_n z^n.
enum class FourierConvention { Plain };

/// Two-sided coefficients c_n for |n| <= K, zero-filled.
class FourierTable {
 public:
  explicit FourierTable(int window);

  /// Copies the entries of `coeffs` inside [-window, window]; the rest is
  /// truncated away.
  static FourierTable from_coefficients(const LaurentCoefficients& coeffs, int window);

  int window() const noexcept { return window_; }
  FourierConvention convention() const noexcept { return FourierConvention::Plain; }

  /// Throws "coefficient window" for |n| > window().
  Complex operator()(int n) const;
  Complex& at(int n);

  double max_abs() const;
  LaurentCoefficients nonzero() const;

 private:
  int window_;
  std::vector<Complex> coeffs_;  // index n + window_
};

/// c_n = (1/M) sum_j f(z_j) e^{-2 pi i j n / M}, |n| <= K. Requires 2K+1 <= M.
FourierTable fourier_coefficients(const CircleSamples& samples, int window);

/// sum_{|n|<=K} c_n z^n for |z| = 1.
Complex synthesize(const FourierTable& table, Complex z);

/// Trapezoid rule for <u, v> = int_T u conj(v) ds = (2 pi / M) sum_j u_j conj(v_j).
Complex inner_product(const CircleSamples& u, const CircleSamples& v);

/// Coefficient table of a symbol. Finite symbols are copied exactly; every
/// other kind goes through the DFT of `m` samples.
FourierTable symbol_coefficients(const SymbolSpec& symbol, int window,
                                 std::size_t m = kDefaultSamples);

}  // namespace hardysym

#endif  // HARDYSYM_CIRCLE_FOURIER_HPP
