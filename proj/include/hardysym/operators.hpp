#ifndef HARDYSYM_OPERATORS_HPP
#define HARDYSYM_OPERATORS_HPP

#include <cstddef>
#include <optional>

#include <Eigen/Dense>

#include "hardysym/circle_fourier.hpp"
#include "hardysym/operator_matrix.hpp"
#include "hardysym/pole.hpp"
#include "hardysym/symbol.hpp"

namespace hardysym {

// ---------------------------------------------------------------------------
// Truncated Toeplitz matrices
// ---------------------------------------------------------------------------

/// Entry (m, l) = c_{m-l}. Requires table window >= N - 1.
OperatorMatrix toeplitz_monomial(const FourierTable& table, int order);

/// Entry (m, l) = (c_{m-l} + conj(p) c_{m-l-1}) / sqrt(2 pi (1 - |p|^2)).
///
/// This is the literature's entry formula for T_phi in the rational basis,
/// transcribed as is. It is not expected to agree with toeplitz_quadrature;
/// the two are compared, never reconciled. Requires table window >= N.
OperatorMatrix toeplitz_rational_closed_form(const FourierTable& table, PoleParameter pole,
                                             int order);

/// Ground-truth section: entry (m, l) = <phi b_l, b_m> by the trapezoid rule
/// on `samples` nodes, b_n = z^n / sqrt(2 pi) (Monomial) or R_n(p)
/// (Rational). Requires samples >= 8N.
OperatorMatrix toeplitz_quadrature(const SymbolSpec& symbol, BasisKind basis,
                                   std::optional<PoleParameter> pole, int order,
                                   std::size_t samples);

// ---------------------------------------------------------------------------
// Conjugations
// ---------------------------------------------------------------------------

enum class ConjugationKind { J, CLambda, Cp };

/// J(p): coefficient conjugation in the rational basis R_n(p).
/// CLambda(l): f(z) -> conj(f(l conj(z))), |l| = 1.
/// Cp(p): sum a_n z^n -> sqrt(1 - |p|^2) sum conj(a_n) (p - z)^n / (1 - conj(p) z)^{n+1}.
class ConjugationSpec {
 public:
  static ConjugationSpec j(PoleParameter pole);
  static ConjugationSpec c_lambda(Complex lambda);
  static ConjugationSpec c_p(PoleParameter pole);

  ConjugationKind kind() const noexcept { return kind_; }
  Complex lambda() const noexcept { return lambda_; }
  PoleParameter pole() const noexcept { return pole_; }

 private:
  ConjugationSpec(ConjugationKind kind) : kind_(kind) {}

  ConjugationKind kind_;
  Complex lambda_{1.0, 0.0};
  PoleParameter pole_;
};

enum class Exactness { Exact, Truncated };

/// Leading block on which the involution residual of a truncated
/// realization is measured. Fixed, so that residuals at different orders
/// compare the same entries.
inline constexpr int kInvolutionProbeWindow = 8;

/// A conjugation acting on N leading coefficients as x -> U conj(x).
struct ConjugationRealization {
  explicit ConjugationRealization(ConjugationSpec s) : spec(s) {}

  ConjugationSpec spec;
  Eigen::MatrixXcd u;
  BasisTag basis;
  Exactness exactness = Exactness::Exact;
  /// max |U conj(U) - I| over the leading min(N, kInvolutionProbeWindow) block.
  double involution_residual = 0.0;
  /// max |U conj(U) - I| over the whole N x N section.
  double involution_residual_full = 0.0;
  /// Cp only: untruncated Taylor columns (taylor_terms x N), for synthesis.
  Eigen::MatrixXcd taylor_columns;

  int order() const { return static_cast<int>(u.rows()); }
};

/// Default Taylor length for Cp realizations: max(4N, 64).
int default_taylor_terms(int order);

ConjugationRealization realize_conjugation(const ConjugationSpec& spec, int order,
                                           int taylor_terms = 0);

struct CoefficientVector {
  Eigen::VectorXcd values;
  BasisTag basis;
};

CoefficientVector apply_conjugation(const ConjugationRealization& real,
                                    const CoefficientVector& x);

/// max |U conj(A) - A^* U| over the leading window x window block, divided
/// by max(1, max |A| on that block). This is the matrix form of
/// C T = T^* C; with U = I it reduces to max |A - A^T|.
double symmetry_residual(const OperatorMatrix& a, const ConjugationRealization& real,
                         int window);

}  // namespace hardysym

#endif  // HARDYSYM_OPERATORS_HPP
