#ifndef HARDYSYM_SYMBOL_HPP
#define HARDYSYM_SYMBOL_HPP

#include <map>
#include <string_view>

#include "hardysym/pole.hpp"

namespace hardysym {

/// Sparse two-sided coefficient list n -> c_n of a Laurent polynomial.
using LaurentCoefficients = std::map<int, Complex>;

enum class SymbolKind { Finite, Ex1, Ex2, AnalyticFraction, Generated };

std::string_view to_string(SymbolKind kind);

/// A bounded function on the unit circle.
///
///   Finite            sum_n c_n z^n
///   Ex1               (1 + p conj(z)) / |1 + p conj(z)|,  p real
///   Ex2               (1 - p z) / |1 - p z|,              p real
///   AnalyticFraction  1 / (1 + conj(p) z)
///   Generated         h(z) / (1 + conj(p) z) + sum_n c_n z^n
///
/// For Generated symbols h is even (h_n == h_{-n}) and the optional
/// Laurent part c is an additive perturbation, empty for a symbol that
/// satisfies the functional identity exactly.
class SymbolSpec {
 public:
  static SymbolSpec finite(LaurentCoefficients coeffs);
  static SymbolSpec ex1(double p);
  static SymbolSpec ex2(double p);
  static SymbolSpec analytic_fraction(PoleParameter p);
  static SymbolSpec generated(LaurentCoefficients h, PoleParameter p,
                              LaurentCoefficients perturbation = {});

  SymbolKind kind() const noexcept { return kind_; }
  const LaurentCoefficients& coeffs() const noexcept { return coeffs_; }
  const LaurentCoefficients& h_coeffs() const noexcept { return h_coeffs_; }
  PoleParameter pole() const noexcept { return p_; }

  /// Point evaluation. Valid for |z| <= 1 (z != 0 when negative powers are
  /// present).
  Complex operator()(Complex z) const;

 private:
  SymbolSpec(SymbolKind kind) : kind_(kind) {}

  SymbolKind kind_;
  LaurentCoefficients coeffs_;
  LaurentCoefficients h_coeffs_;
  PoleParameter p_;
};

/// Evaluate sum_n c_n z^n.
Complex evaluate_laurent(const LaurentCoefficients& coeffs, Complex z);

/// True iff c_n == c_{-n} exactly for every n (absent entries count as 0).
bool is_even(const LaurentCoefficients& coeffs);

/// Integer power by repeated multiplication; sign-symmetric, so
/// ipow(-w, n) == (-1)^n ipow(w, n) bit for bit.
Complex ipow(Complex w, int n);

}  // namespace hardysym

#endif  // HARDYSYM_SYMBOL_HPP
