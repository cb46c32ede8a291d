#include "hardysym/symbol.hpp"

#include <algorithm>
#include <cmath>

namespace hardysym {

std::string_view to_string(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::Finite: return "finite";
    case SymbolKind::Ex1: return "ex1";
    case SymbolKind::Ex2: return "ex2";
    case SymbolKind::AnalyticFraction: return "analytic_fraction";
    case SymbolKind::Generated: return "generated";
  }
  return "unknown";
}

Complex ipow(Complex w, int n) {
  if (n < 0) return ipow(Complex(1.0, 0.0) / w, -n);
  Complex out(1.0, 0.0);
  for (int i = 0; i < n; ++i) out *= w;
  return out;
}

Complex evaluate_laurent(const LaurentCoefficients& coeffs, Complex z) {
  if (coeffs.empty()) return {0.0, 0.0};
  // Horner on both halves: sum_{n>=0} c_n z^n + sum_{n<0} c_n w^{-n}, w = 1/z.
  Complex positive(0.0, 0.0);
  Complex negative(0.0, 0.0);
  const int top = std::max(coeffs.rbegin()->first, 0);
  const int bottom = std::min(coeffs.begin()->first, 0);
  for (int n = top; n >= 0; --n) {
    auto it = coeffs.find(n);
    positive = positive * z + (it != coeffs.end() ? it->second : Complex{});
  }
  if (bottom < 0) {
    const Complex w = Complex(1.0, 0.0) / z;
    for (int n = bottom; n < 0; ++n) {
      auto it = coeffs.find(n);
      negative = (negative + (it != coeffs.end() ? it->second : Complex{})) * w;
    }
  }
  return positive + negative;
}

bool is_even(const LaurentCoefficients& coeffs) {
  for (const auto& [n, c] : coeffs) {
    auto mirror = coeffs.find(-n);
    const Complex other = mirror != coeffs.end() ? mirror->second : Complex{};
    if (c != other) return false;
  }
  return true;
}

SymbolSpec SymbolSpec::finite(LaurentCoefficients coeffs) {
  SymbolSpec s(SymbolKind::Finite);
  s.coeffs_ = std::move(coeffs);
  return s;
}

SymbolSpec SymbolSpec::ex1(double p) {
  SymbolSpec s(SymbolKind::Ex1);
  s.p_ = PoleParameter(Complex(p, 0.0));
  return s;
}

SymbolSpec SymbolSpec::ex2(double p) {
  SymbolSpec s(SymbolKind::Ex2);
  s.p_ = PoleParameter(Complex(p, 0.0));
  return s;
}

SymbolSpec SymbolSpec::analytic_fraction(PoleParameter p) {
  SymbolSpec s(SymbolKind::AnalyticFraction);
  s.p_ = p;
  return s;
}

SymbolSpec SymbolSpec::generated(LaurentCoefficients h, PoleParameter p,
                                 LaurentCoefficients perturbation) {
  if (!is_even(h)) throw Error(ErrorKind::HMustBeEven);
  SymbolSpec s(SymbolKind::Generated);
  s.h_coeffs_ = std::move(h);
  s.coeffs_ = std::move(perturbation);
  s.p_ = p;
  return s;
}

Complex SymbolSpec::operator()(Complex z) const {
  const Complex p = p_.value();
  switch (kind_) {
    case SymbolKind::Finite:
      return evaluate_laurent(coeffs_, z);
    case SymbolKind::Ex1: {
      const Complex num = 1.0 + p * std::conj(z);
      return num / std::abs(num);
    }
    case SymbolKind::Ex2: {
      const Complex num = 1.0 - p * z;
      return num / std::abs(num);
    }
    case SymbolKind::AnalyticFraction:
      return 1.0 / (1.0 + std::conj(p) * z);
    case SymbolKind::Generated:
      return evaluate_laurent(h_coeffs_, z) / (1.0 + std::conj(p) * z) +
             evaluate_laurent(coeffs_, z);
  }
  throw Error(ErrorKind::UnsupportedSymbol);
}

}  // namespace hardysym
