#ifndef HARDYSYM_POLE_HPP
#define HARDYSYM_POLE_HPP

#include <complex>

#include "hardysym/error.hpp"

namespace hardysym {

using Complex = std::complex<double>;

/// A point p of the open unit disk, used as the pole parameter of the
/// rational basis and of the conjugations built on it.
///
/// Points closer than 1e-6 to the circle are rejected: the trapezoid rule
/// on basis elements loses its geometric convergence as |p| -> 1.
class PoleParameter {
 public:
  static constexpr double kMaxModulus = 1.0 - 1e-6;

  PoleParameter() = default;
  explicit PoleParameter(Complex p) : p_(p) {
    if (!(std::abs(p) <= kMaxModulus)) throw Error(ErrorKind::PoleOutsideDisk);
  }

  Complex value() const noexcept { return p_; }
  Complex conj() const noexcept { return std::conj(p_); }
  double modulus() const noexcept { return std::abs(p_); }
  double modulus_squared() const noexcept { return std::norm(p_); }
  bool is_real() const noexcept { return p_.imag() == 0.0; }
  bool is_zero() const noexcept { return p_ == Complex(0.0, 0.0); }

  friend bool operator==(const PoleParameter&, const PoleParameter&) = default;

 private:
  Complex p_{0.0, 0.0};
};

}  // namespace hardysym

#endif  // HARDYSYM_POLE_HPP
