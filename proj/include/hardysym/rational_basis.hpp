#ifndef HARDYSYM_RATIONAL_BASIS_HPP
#define HARDYSYM_RATIONAL_BASIS_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "hardysym/operator_matrix.hpp"
#include "hardysym/pole.hpp"

namespace hardysym {

/// ZP: numerator (z - p)^n.  PZ: numerator (p - z)^n.
enum class BasisVariant { ZP, PZ };

/// The first N members of the rational orthonormal system
///
///   R_n(z) = sqrt((1 - |p|^2) / 2pi) (z - p)^n / (1 - conj(p) z)^{n+1}.
///
/// R_0 is the normalized Szego kernel at p and R_n = R_0 b^n with b the
/// Blaschke factor (z - p) / (1 - conj(p) z).
class BasisFamily {
 public:
  BasisFamily(PoleParameter pole, int size, BasisVariant variant = BasisVariant::ZP);

  PoleParameter pole() const noexcept { return pole_; }
  int size() const noexcept { return size_; }
  BasisVariant variant() const noexcept { return variant_; }
  double norm_constant() const noexcept { return norm_constant_; }

 private:
  PoleParameter pole_;
  int size_;
  BasisVariant variant_;
  double norm_constant_;
};

Complex basis_eval(const BasisFamily& family, int n, Complex z);

/// First `terms` Taylor coefficients at 0 of basis element n.
std::vector<Complex> basis_taylor(const BasisFamily& family, int n, int terms);

/// terms x size() matrix whose column n holds basis_taylor(family, n, terms).
Eigen::MatrixXcd taylor_matrix(const BasisFamily& family, int terms);

/// Same as taylor_matrix, with the leading constant norm_constant()
/// replaced by `scale`.
Eigen::MatrixXcd taylor_matrix(const BasisFamily& family, int terms, double scale);

/// Trapezoid-rule Gram matrix, entry (m, l) = <R_l, R_m>. Requires M >= 8N.
OperatorMatrix gram_matrix(const BasisFamily& family, std::size_t samples);

}  // namespace hardysym

#endif  // HARDYSYM_RATIONAL_BASIS_HPP
