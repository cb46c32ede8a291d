#include "hardysym/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hardysym/rational_basis.hpp"

namespace hardysym {

std::string to_string(const BasisTag& tag) {
  auto with_p = [&](const char* name) {
    return std::string(name) + "(" + std::to_string(tag.p.real()) + "," +
           std::to_string(tag.p.imag()) + ")";
  };
  switch (tag.kind) {
    case BasisKind::Monomial: return "monomial";
    case BasisKind::Rational: return with_p("rational");
    case BasisKind::RationalClosedForm: return with_p("rational_closed_form");
  }
  return "unknown";
}

bool same_coefficient_space(const BasisTag& a, const BasisTag& b) {
  const bool a_monomial = a.kind == BasisKind::Monomial;
  const bool b_monomial = b.kind == BasisKind::Monomial;
  if (a_monomial || b_monomial) return a_monomial && b_monomial;
  return a.p == b.p;
}

OperatorMatrix toeplitz_monomial(const FourierTable& table, int order) {
  if (order < 1) throw Error(ErrorKind::BadIndex, "order must be positive");
  if (table.window() < order - 1) {
    throw Error(ErrorKind::CoefficientWindow, "need K >= N - 1");
  }
  OperatorMatrix out{Eigen::MatrixXcd(order, order), BasisTag::monomial()};
  for (int m = 0; m < order; ++m) {
    for (int l = 0; l < order; ++l) out.entries(m, l) = table(m - l);
  }
  return out;
}

OperatorMatrix toeplitz_rational_closed_form(const FourierTable& table, PoleParameter pole,
                                             int order) {
  if (order < 1) throw Error(ErrorKind::BadIndex, "order must be positive");
  if (table.window() < order) throw Error(ErrorKind::CoefficientWindow, "need K >= N");
  const double denom = std::sqrt(kTwoPi * (1.0 - pole.modulus_squared()));
  const Complex pc = pole.conj();
  OperatorMatrix out{Eigen::MatrixXcd(order, order), BasisTag::closed_form(pole)};
  for (int m = 0; m < order; ++m) {
    for (int l = 0; l < order; ++l) {
      out.entries(m, l) = (table(m - l) + pc * table(m - l - 1)) / denom;
    }
  }
  return out;
}

OperatorMatrix toeplitz_quadrature(const SymbolSpec& symbol, BasisKind basis,
                                   std::optional<PoleParameter> pole, int order,
                                   std::size_t samples) {
  if (order < 1) throw Error(ErrorKind::BadIndex, "order must be positive");
  if (samples < 8 * static_cast<std::size_t>(order)) {
    throw Error(ErrorKind::GridTooCoarse, "need M >= 8N");
  }
  const CircleSamples phi = sample_circle(symbol, samples);
  const auto mm = static_cast<std::int64_t>(samples);

  std::vector<CircleSamples> elements;
  elements.reserve(static_cast<std::size_t>(order));
  BasisTag tag;
  if (basis == BasisKind::Monomial) {
    const double c = 1.0 / std::sqrt(kTwoPi);
    for (int n = 0; n < order; ++n) {
      std::vector<Complex> v(samples);
      for (std::int64_t j = 0; j < mm; ++j) v[j] = c * unit_root(j * n, mm);
      elements.emplace_back(std::move(v));
    }
    tag = BasisTag::monomial();
  } else if (basis == BasisKind::Rational) {
    if (!pole) throw Error(ErrorKind::BasisMismatch, "rational basis requires p");
    const BasisFamily family(*pole, order);
    for (int n = 0; n < order; ++n) {
      elements.push_back(
          sample_function(samples, [&](Complex z) { return basis_eval(family, n, z); }));
    }
    tag = BasisTag::rational(*pole);
  } else {
    throw Error(ErrorKind::BasisMismatch, "quadrature supports monomial or rational bases");
  }

  OperatorMatrix out{Eigen::MatrixXcd(order, order), tag};
  std::vector<Complex> product(samples);
  for (int l = 0; l < order; ++l) {
    for (std::size_t j = 0; j < samples; ++j) product[j] = phi[j] * elements[l][j];
    const CircleSamples column(product);
    for (int m = 0; m < order; ++m) out.entries(m, l) = inner_product(column, elements[m]);
  }
  return out;
}

ConjugationSpec ConjugationSpec::j(PoleParameter pole) {
  ConjugationSpec s(ConjugationKind::J);
  s.pole_ = pole;
  return s;
}

ConjugationSpec ConjugationSpec::c_lambda(Complex lambda) {
  if (!(std::abs(std::abs(lambda) - 1.0) <= 1e-12)) {
    throw Error(ErrorKind::BadConjugationSpec, "|lambda| must be 1");
  }
  ConjugationSpec s(ConjugationKind::CLambda);
  s.lambda_ = lambda;
  return s;
}

ConjugationSpec ConjugationSpec::c_p(PoleParameter pole) {
  ConjugationSpec s(ConjugationKind::Cp);
  s.pole_ = pole;
  return s;
}

int default_taylor_terms(int order) { return std::max(4 * order, 64); }

namespace {

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

ConjugationRealization realize_conjugation(const ConjugationSpec& spec, int order,
                                           int taylor_terms) {
  if (order < 1) throw Error(ErrorKind::BadConjugationSpec, "order must be positive");
  ConjugationRealization real(spec);
  real.u = Eigen::MatrixXcd::Identity(order, order);
  switch (spec.kind()) {
    case ConjugationKind::J:
      real.basis = BasisTag::rational(spec.pole());
      break;
    case ConjugationKind::CLambda: {
      // C_lambda z^n = conj(lambda)^n z^n
      const Complex step = std::conj(spec.lambda());
      Complex power(1.0, 0.0);
      for (int n = 0; n < order; ++n) {
        real.u(n, n) = power;
        power *= step;
      }
      break;
    }
    case ConjugationKind::Cp: {
      if (taylor_terms == 0) taylor_terms = default_taylor_terms(order);
      if (taylor_terms < order) {
        throw Error(ErrorKind::BadConjugationSpec, "taylor_terms must be >= N");
      }
      const BasisFamily family(spec.pole(), order, BasisVariant::PZ);
      real.taylor_columns =
          taylor_matrix(family, taylor_terms, std::sqrt(1.0 - spec.pole().modulus_squared()));
      real.u = real.taylor_columns.topRows(order);
      real.exactness = Exactness::Truncated;
      break;
    }
  }
  const Eigen::MatrixXcd defect =
      real.u * real.u.conjugate() - Eigen::MatrixXcd::Identity(order, order);
  const int probe = std::min(order, kInvolutionProbeWindow);
  real.involution_residual = max_abs(defect.topLeftCorner(probe, probe));
  real.involution_residual_full = max_abs(defect);
  return real;
}

CoefficientVector apply_conjugation(const ConjugationRealization& real,
                                    const CoefficientVector& x) {
  if (!same_coefficient_space(real.basis, x.basis)) {
    throw Error(ErrorKind::BasisMismatch, to_string(real.basis) + " vs " + to_string(x.basis));
  }
  if (x.values.size() != real.u.cols()) {
    throw Error(ErrorKind::BasisMismatch, "length mismatch");
  }
  return {real.u * x.values.conjugate(), real.basis};
}

double symmetry_residual(const OperatorMatrix& a, const ConjugationRealization& real,
                         int window) {
  if (!same_coefficient_space(a.basis, real.basis)) {
    throw Error(ErrorKind::BasisMismatch, to_string(a.basis) + " vs " + to_string(real.basis));
  }
  if (a.order() != real.order()) throw Error(ErrorKind::BasisMismatch, "order mismatch");
  if (window < 1 || window > a.order()) {
    throw Error(ErrorKind::BadWindow, "window " + std::to_string(window) + " not in [1, N]");
  }
  const Eigen::MatrixXcd defect = real.u * a.entries.conjugate() - a.entries.adjoint() * real.u;
  const double scale = std::max(1.0, max_abs(a.entries.topLeftCorner(window, window)));
  return max_abs(defect.topLeftCorner(window, window)) / scale;
}

}  // namespace hardysym
