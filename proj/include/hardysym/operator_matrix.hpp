#ifndef HARDYSYM_OPERATOR_MATRIX_HPP
#define HARDYSYM_OPERATOR_MATRIX_HPP

#include <string>

#include <Eigen/Dense>

#include "hardysym/pole.hpp"

namespace hardysym {

enum class BasisKind { Monomial, Rational, RationalClosedForm };

/// Which orthonormal system of H^2 a matrix or coefficient vector refers to.
/// Monomial means z^n / sqrt(2 pi); Rational means R_n(p).
struct BasisTag {
  BasisKind kind = BasisKind::Monomial;
  Complex p{0.0, 0.0};

  static BasisTag monomial() { return {}; }
  static BasisTag rational(PoleParameter pole) { return {BasisKind::Rational, pole.value()}; }
  static BasisTag closed_form(PoleParameter pole) {
    return {BasisKind::RationalClosedForm, pole.value()};
  }

  friend bool operator==(const BasisTag&, const BasisTag&) = default;
};

std::string to_string(const BasisTag& tag);

/// Both tags describe coefficients with respect to the same basis. The
/// closed-form and quadrature rational matrices share a coefficient space.
bool same_coefficient_space(const BasisTag& a, const BasisTag& b);

/// Truncated N x N section of an operator; entry (m, l) holds <T b_l, b_m>.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  BasisTag basis;

  int order() const { return static_cast<int>(entries.rows()); }
};

}  // namespace hardysym

#endif  // HARDYSYM_OPERATOR_MATRIX_HPP
