#include "hardysym/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "hardysym/rational_basis.hpp"

namespace hardysym {

namespace {

CriterionResult finish(std::vector<double> per_index, double scale, double tol) {
  CriterionResult out;
  out.scale = scale;
  for (auto& r : per_index) {
    r /= scale;
    out.residual = std::max(out.residual, r);
  }
  out.per_index = std::move(per_index);
  out.pass = out.residual <= tol;
  return out;
}

std::string describe_pole(PoleParameter pole) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "p=(%.17g,%.17g)", pole.value().real(), pole.value().imag());
  return buf;
}

}  // namespace

CriterionResult criterion_coefficients(const FourierTable& table, PoleParameter pole, int k_max,
                                       double tol) {
  if (k_max < 0 || table.window() < k_max + 1) {
    throw Error(ErrorKind::CoefficientWindow, "need K >= k_max + 1");
  }
  const Complex pc = pole.conj();
  std::vector<double> residuals(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    residuals[k] = std::abs(table(k) - table(-k) - pc * (table(-k - 1) - table(k - 1)));
  }
  return finish(std::move(residuals), std::max(1.0, table.max_abs()), tol);
}

CriterionResult criterion_functional(const SymbolSpec& symbol, PoleParameter pole,
                                     std::size_t samples, double tol) {
  if (samples < 64) throw Error(ErrorKind::GridTooCoarse, "functional criterion needs M >= 64");
  const Complex pc = pole.conj();
  const auto mm = static_cast<std::int64_t>(samples);
  double gap = 0.0;
  double scale = 1.0;
  for (std::int64_t j = 0; j < mm; ++j) {
    const Complex z = unit_root(j, mm);
    const Complex zb = std::conj(z);
    const Complex f = symbol(z);
    const Complex fb = symbol(zb);
    if (!std::isfinite(std::abs(f)) || !std::isfinite(std::abs(fb))) {
      throw Error(ErrorKind::UnsupportedSymbol, "symbol is not finite on the grid");
    }
    gap = std::max(gap, std::abs(f * (1.0 + pc * z) - fb * (1.0 + pc * zb)));
    scale = std::max(scale, std::abs(f));
  }
  CriterionResult out;
  out.scale = scale;
  out.residual = gap / scale;
  out.pass = out.residual <= tol;
  return out;
}

CriterionResult criterion_ko_lee(const FourierTable& table, Complex lambda, int k_max,
                                 double tol) {
  if (k_max < 0 || table.window() < k_max) {
    throw Error(ErrorKind::CoefficientWindow, "need K >= k_max");
  }
  std::vector<double> residuals(static_cast<std::size_t>(k_max) + 1);
  Complex power(1.0, 0.0);
  for (int n = 0; n <= k_max; ++n) {
    residuals[n] = std::abs(table(-n) - power * table(n));
    power *= lambda;
  }
  return finish(std::move(residuals), std::max(1.0, table.max_abs()), tol);
}

Obstruction finite_obstruction(const SymbolSpec& symbol, PoleParameter pole) {
  if (symbol.kind() != SymbolKind::Finite) throw Error(ErrorKind::FiniteSymbolsOnly);
  int lo = 0;
  int hi = 0;
  bool any = false;
  for (const auto& [n, c] : symbol.coeffs()) {
    if (c == Complex{}) continue;
    lo = any ? std::min(lo, n) : n;
    hi = any ? std::max(hi, n) : n;
    any = true;
  }
  if (!any || pole.is_zero()) return Obstruction::NotApplicable;
  const int m0 = lo < 0 ? -lo : 0;
  const int n0 = hi;
  return (m0 > 0 && n0 >= m0) ? Obstruction::Obstructed : Obstruction::NotApplicable;
}

FourierTable generate_j_symmetric(const LaurentCoefficients& h, PoleParameter pole, int window) {
  if (!is_even(h)) throw Error(ErrorKind::HMustBeEven);
  FourierTable out(window);
  double h_max = 0.0;
  for (const auto& [n, c] : h) h_max = std::max(h_max, std::abs(c));
  if (h_max == 0.0) return out;

  // (-conj p)^n while |p|^n max|h| >= 1e-16
  const Complex ratio = -pole.conj();
  std::vector<Complex> powers;
  Complex power(1.0, 0.0);
  double magnitude = h_max;
  while (magnitude >= 1e-16 && powers.size() < (1u << 20)) {
    powers.push_back(power);
    power *= ratio;
    magnitude *= pole.modulus();
  }
  const auto terms = static_cast<int>(powers.size());
  for (int k = -window; k <= window; ++k) {
    Complex acc(0.0, 0.0);
    for (const auto& [j, c] : h) {
      const int n = k - j;
      if (n >= 0 && n < terms) acc += c * powers[n];
    }
    out.at(k) = acc;
  }
  return out;
}

void CertificationReport::add(std::string name, const CriterionResult& result) {
  criteria.push_back({std::move(name), result.pass, result.residual, result.per_index});
}

void CertificationReport::add(std::string name, bool pass, double residual) {
  criteria.push_back({std::move(name), pass, residual, {}});
}

void CertificationReport::set_parameter(std::string name, double value) {
  for (auto& [key, v] : parameters) {
    if (key == name) {
      v = value;
      return;
    }
  }
  parameters.emplace_back(std::move(name), value);
}

const CriterionOutcome& CertificationReport::at(std::string_view name) const {
  for (const auto& c : criteria) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no criterion " + std::string(name));
}

bool CertificationReport::contains(std::string_view name) const {
  return std::any_of(criteria.begin(), criteria.end(),
                     [&](const CriterionOutcome& c) { return c.name == name; });
}

double CertificationReport::parameter(std::string_view name) const {
  for (const auto& [key, v] : parameters) {
    if (key == name) return v;
  }
  throw std::out_of_range("no parameter " + std::string(name));
}

bool CertificationReport::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionOutcome& c) { return c.pass; });
}

bool CertificationReport::all_fail() const {
  return std::none_of(criteria.begin(), criteria.end(),
                      [](const CriterionOutcome& c) { return c.pass; });
}

void CertificationReport::note_disagreements(const std::vector<std::string>& names,
                                             const std::string& detail) {
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      const auto& first = at(names[a]);
      const auto& second = at(names[b]);
      if (first.pass != second.pass) {
        notes.push_back({first.name, second.name, first.residual, second.residual, detail});
      }
    }
  }
}

CertificationReport equivalence_ii_iii(const SymbolSpec& symbol, PoleParameter pole, int k_max,
                                       std::size_t samples, double tol) {
  const FourierTable table = symbol_coefficients(symbol, k_max + 1, samples);
  CertificationReport report;
  report.add("coefficient_criterion", criterion_coefficients(table, pole, k_max, tol));
  report.add("functional_criterion", criterion_functional(symbol, pole, samples, tol));
  report.set_parameter("k_max", k_max);
  report.set_parameter("samples", static_cast<double>(samples));
  report.set_parameter("tol", tol);
  report.note_disagreements({"coefficient_criterion", "functional_criterion"},
                            describe_pole(pole) + " k_max=" + std::to_string(k_max));
  return report;
}

CertificationReport matrix_symmetry_crosscheck(const SymbolSpec& symbol, PoleParameter pole,
                                               int order, std::size_t samples, int window,
                                               double tol) {
  const OperatorMatrix quadrature =
      toeplitz_quadrature(symbol, BasisKind::Rational, pole, order, samples);
  const FourierTable table = symbol_coefficients(symbol, order, samples);
  const OperatorMatrix closed = toeplitz_rational_closed_form(table, pole, order);
  const ConjugationRealization j = realize_conjugation(ConjugationSpec::j(pole), order);

  const double r_quadrature = symmetry_residual(quadrature, j, window);
  const double r_closed = symmetry_residual(closed, j, window);

  CertificationReport report;
  report.add("quadrature_symmetry", r_quadrature <= tol, r_quadrature);
  report.add("closed_form_symmetry", r_closed <= tol, r_closed);
  report.add("coefficient_criterion", criterion_coefficients(table, pole, order - 1, tol));
  report.set_parameter("order", order);
  report.set_parameter("window", window);
  report.set_parameter("samples", static_cast<double>(samples));
  report.set_parameter("tol", tol);
  report.set_parameter("closed_form_gap",
                       (quadrature.entries - closed.entries).cwiseAbs().maxCoeff());
  report.note_disagreements({"coefficient_criterion", "closed_form_symmetry", "quadrature_symmetry"},
                            describe_pole(pole) + " N=" + std::to_string(order) +
                                " window=" + std::to_string(window));
  return report;
}

CertificationReport cp_probe(const SymbolSpec& symbol, PoleParameter pole, int order,
                             std::size_t samples, int window, double tol) {
  CertificationReport report;
  const char* names[2] = {"cp_symmetry_order_n", "cp_symmetry_order_2n"};
  const char* involution_names[2] = {"involution_residual_order_n",
                                     "involution_residual_order_2n"};
  double residuals[2] = {0.0, 0.0};
  for (int step = 0; step < 2; ++step) {
    const int n = order << step;
    const int w = window << step;
    const OperatorMatrix a =
        toeplitz_quadrature(symbol, BasisKind::Monomial, std::nullopt, n, samples);
    const ConjugationRealization cp = realize_conjugation(ConjugationSpec::c_p(pole), n);
    residuals[step] = symmetry_residual(a, cp, w);
    report.add(names[step], residuals[step] <= tol, residuals[step]);
    report.set_parameter(involution_names[step], cp.involution_residual);
  }
  report.set_parameter("order", order);
  report.set_parameter("window", window);
  report.set_parameter("samples", static_cast<double>(samples));
  report.set_parameter("tol", tol);
  report.set_parameter("decaying", residuals[1] < residuals[0] ? 1.0 : 0.0);
  return report;
}

CriterionResult weighted_composition_check(Complex p, const CoefficientVector& f,
                                           std::size_t samples, double tol) {
  if (p.imag() != 0.0 || !(std::abs(p) <= PoleParameter::kMaxModulus)) {
    throw Error(ErrorKind::RealPRequired);
  }
  if (f.basis.kind != BasisKind::Monomial) {
    throw Error(ErrorKind::BasisMismatch, "f must be given by monomial coefficients");
  }
  const auto n = static_cast<int>(f.values.size());
  if (n < 1) throw Error(ErrorKind::BadIndex, "f needs at least one coefficient");
  if (samples < CircleSamples::kMinSamples) throw Error(ErrorKind::GridTooCoarse);

  // Taylor tail of column n-1 is bounded by C(T+n, n) |p|^T.
  const double q = std::abs(p);
  int terms = default_taylor_terms(n);
  auto log_tail = [&](int t) {
    return std::lgamma(t + n + 1.0) - std::lgamma(t + 1.0) - std::lgamma(n + 1.0) +
           t * std::log(q);
  };
  while (q > 0.0 && log_tail(terms) > std::log(1e-18) && terms < (1 << 16)) terms *= 2;

  const PoleParameter pole(p);
  const ConjugationRealization cp = realize_conjugation(ConjugationSpec::c_p(pole), n, terms);
  const Eigen::VectorXcd image = cp.taylor_columns * f.values.conjugate();

  const double weight = std::sqrt(1.0 - q * q);
  const auto mm = static_cast<std::int64_t>(samples);
  double gap = 0.0;
  for (std::int64_t j = 0; j < mm; ++j) {
    const Complex z = unit_root(j, mm);
    Complex lhs(0.0, 0.0);
    for (Eigen::Index m = image.size() - 1; m >= 0; --m) lhs = lhs * z + image(m);
    const Complex w = (p - z) / (1.0 - p * z);
    Complex inner(0.0, 0.0);
    for (int k = n - 1; k >= 0; --k) inner = inner * w + std::conj(f.values(k));
    const Complex rhs = weight / (1.0 - p * z) * inner;
    gap = std::max(gap, std::abs(lhs - rhs));
  }
  CriterionResult out;
  out.residual = gap;
  out.pass = gap <= tol;
  return out;
}

}  // namespace hardysym
