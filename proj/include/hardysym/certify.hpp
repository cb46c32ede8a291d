#ifndef HARDYSYM_CERTIFY_HPP
#define HARDYSYM_CERTIFY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hardysym/circle_fourier.hpp"
#include "hardysym/operators.hpp"
#include "hardysym/pole.hpp"
#include "hardysym/symbol.hpp"

namespace hardysym {

/// Coefficient criteria are limited by DFT roundoff.
inline constexpr double kCoefficientTolerance = 1e-8;
/// Pointwise functional identities.
inline constexpr double kFunctionalTolerance = 1e-10;

struct CriterionResult {
  bool pass = false;
  double residual = 0.0;            // max of per_index, or the single pointwise max
  std::vector<double> per_index;    // per k (or n); empty for pointwise criteria
  double scale = 1.0;               // normalization applied to the residuals
};

/// Coefficient form of J-symmetry, for k = 0..k_max:
///   c_k = c_{-k} + conj(p) (c_{-k-1} - c_{k-1}).
/// Residuals are relative to max(1, max |c_n|). Requires window >= k_max + 1.
CriterionResult criterion_coefficients(const FourierTable& table, PoleParameter pole,
                                       int k_max, double tol = kCoefficientTolerance);

/// Functional form, checked with cleared denominators on the M-point grid:
///   phi(z)(1 + conj(p) z) = phi(conj z)(1 + conj(p) conj z).
/// Relative to max(1, max |phi(z_j)|). Requires M >= 64.
CriterionResult criterion_functional(const SymbolSpec& symbol, PoleParameter pole,
                                     std::size_t samples, double tol = kFunctionalTolerance);

/// C_lambda-symmetry of T_phi: c_{-n} = lambda^n c_n for n = 0..k_max.
CriterionResult criterion_ko_lee(const FourierTable& table, Complex lambda, int k_max,
                                 double tol = kCoefficientTolerance);

enum class Obstruction { Obstructed, NotApplicable };

/// Exact test for a finite symbol sum_{n=-M0}^{N0} c_n z^n with
/// N0 >= M0 > 0, c_{-M0} != 0, c_{N0} != 0 and p != 0: such a symbol can
/// never satisfy the coefficient criterion (it breaks at k = N0 + 1).
Obstruction finite_obstruction(const SymbolSpec& symbol, PoleParameter pole);

/// phi = h / (1 + conj(p) z) for even h, i.e. c_k = sum_{n>=0} h_{k-n} (-conj p)^n.
/// The geometric series stops once |p|^n max|h| < 1e-16.
FourierTable generate_j_symmetric(const LaurentCoefficients& h, PoleParameter pole, int window);

struct CriterionOutcome {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::vector<double> per_index;
};

/// Two criteria that were expected to agree and did not.
struct DiscrepancyNote {
  std::string first;
  std::string second;
  double first_residual = 0.0;
  double second_residual = 0.0;
  std::string detail;
};

struct CertificationReport {
  std::vector<CriterionOutcome> criteria;
  std::vector<std::pair<std::string, double>> parameters;
  std::vector<DiscrepancyNote> notes;

  void add(std::string name, const CriterionResult& result);
  void add(std::string name, bool pass, double residual);
  void set_parameter(std::string name, double value);

  const CriterionOutcome& at(std::string_view name) const;
  bool contains(std::string_view name) const;
  double parameter(std::string_view name) const;

  bool all_pass() const;
  bool all_fail() const;
  bool verdicts_agree() const { return all_pass() || all_fail(); }

  /// Adds one note per pair of criteria (among `names`) whose verdicts differ.
  void note_disagreements(const std::vector<std::string>& names, const std::string& detail);
};

/// Runs the coefficient criterion (on the symbol's table with window
/// k_max + 1) and the functional criterion, both at `tol`, and records
/// whether their verdicts agree.
CertificationReport equivalence_ii_iii(const SymbolSpec& symbol, PoleParameter pole, int k_max,
                                       std::size_t samples, double tol);

/// J-symmetry three ways: the quadrature matrix in the rational basis, the
/// closed-form matrix, and the coefficient criterion for k <= N - 1. Each
/// verdict is reported; disagreements become notes. Nothing is reconciled.
///
/// Criteria: "quadrature_symmetry", "closed_form_symmetry",
/// "coefficient_criterion". Parameter "closed_form_gap" is the largest
/// entrywise difference between the two matrices.
CertificationReport matrix_symmetry_crosscheck(const SymbolSpec& symbol, PoleParameter pole,
                                               int order, std::size_t samples, int window,
                                               double tol = kCoefficientTolerance);

/// Symmetry residual of the monomial quadrature matrix under the truncated
/// Cp realization, at orders N and 2N (windows w and 2w).
///
/// Criteria: "cp_symmetry_order_n", "cp_symmetry_order_2n"; parameters
/// include both involution residuals and "decaying" (1 or 0).
CertificationReport cp_probe(const SymbolSpec& symbol, PoleParameter pole, int order,
                             std::size_t samples, int window, double tol = kCoefficientTolerance);

/// Compares Cp f (synthesized from the Taylor columns of the Cp
/// realization) with psi(z) (C_1 f)(phi(z)) on the grid, where
/// psi = sqrt(1 - p^2) / (1 - p z) and phi = (p - z) / (1 - p z).
/// Residual is the absolute max pointwise gap. p must be real.
CriterionResult weighted_composition_check(Complex p, const CoefficientVector& f,
                                           std::size_t samples,
                                           double tol = kFunctionalTolerance);

}  // namespace hardysym

#endif  // HARDYSYM_CERTIFY_HPP
