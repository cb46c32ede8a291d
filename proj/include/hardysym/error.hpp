#ifndef HARDYSYM_ERROR_HPP
#define HARDYSYM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hardysym {

enum class ErrorKind {
  UnsupportedSymbol,
  GridTooCoarse,
  AliasingWindow,
  NotOnCircle,
  GridMismatch,
  BadIndex,
  PoleOutsideDisk,
  CoefficientWindow,
  BadConjugationSpec,
  BasisMismatch,
  BadWindow,
  FiniteSymbolsOnly,
  HMustBeEven,
  RealPRequired,
  Parse,
};

/// Every precondition failure in the library surfaces as this exception.
/// The message always starts with the short reason phrase for the kind
/// (e.g. "grid too coarse"), optionally followed by ": <details>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& details = {})
      : std::runtime_error(compose(kind, details)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  static const char* reason(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::UnsupportedSymbol: return "unsupported symbol";
      case ErrorKind::GridTooCoarse: return "grid too coarse";
      case ErrorKind::AliasingWindow: return "aliasing window";
      case ErrorKind::NotOnCircle: return "not on the unit circle";
      case ErrorKind::GridMismatch: return "grid mismatch";
      case ErrorKind::BadIndex: return "bad index";
      case ErrorKind::PoleOutsideDisk: return "p must lie strictly inside the unit disk";
      case ErrorKind::CoefficientWindow: return "coefficient window";
      case ErrorKind::BadConjugationSpec: return "bad conjugation spec";
      case ErrorKind::BasisMismatch: return "basis mismatch";
      case ErrorKind::BadWindow: return "bad window";
      case ErrorKind::FiniteSymbolsOnly: return "finite symbols only";
      case ErrorKind::HMustBeEven: return "h must be even";
      case ErrorKind::RealPRequired: return "real p required";
      case ErrorKind::Parse: return "parse error";
    }
    return "error";
  }

 private:
  static std::string compose(ErrorKind kind, const std::string& details) {
    std::string msg = reason(kind);
    if (!details.empty()) msg += ": " + details;
    return msg;
  }

  ErrorKind kind_;
};

}  // namespace hardysym

#endif  // HARDYSYM_ERROR_HPP
