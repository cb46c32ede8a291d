#include "hardysym/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "hardysym/certify.hpp"
#include "hardysym/circle_fourier.hpp"
#include "hardysym/operators.hpp"
#include "hardysym/rational_basis.hpp"

namespace hardysym::cli {

namespace {

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::Parse, what); }

Json report_header(const CommandOptions& options) {
  Json report;
  report["tool_version"] = kToolVersion;
  report["command"] = options.command_line.empty() ? options.command : options.command_line;
  report["parameters"] = Json::object();
  report["verdicts"] = Json::object();
  report["residuals"] = Json::object();
  report["notes"] = Json::array();
  return report;
}

PoleParameter require_pole(const CommandOptions& options, const SymbolFile* symbol) {
  if (options.p) return PoleParameter(*options.p);
  if (symbol && symbol->p) return PoleParameter(*symbol->p);
  usage("--p is required");
}

int window_for(int order) { return std::max(1, order / 2); }

void common_parameters(Json& params, const CommandOptions& options) {
  params["order"] = options.order;
  params["samples"] = options.samples;
}

int verdict_exit(const CertificationReport& cert) {
  if (cert.all_pass()) return kExitCertified;
  if (cert.all_fail()) return kExitRefuted;
  return kExitDisagreement;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const std::string re_text = text.substr(0, comma);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) usage("bad number '" + text + "'");
    double im = 0.0;
    if (comma != std::string::npos) {
      const std::string im_text = text.substr(comma + 1);
      im = std::stod(im_text, &used);
      if (used != im_text.size()) usage("bad number '" + text + "'");
    }
    return {re, im};
  } catch (const std::logic_error&) {
    usage("bad number '" + text + "'");
  }
}

CommandResult run_basis_check(const CommandOptions& options) {
  const PoleParameter pole = require_pole(options, nullptr);
  const int n_max = options.order;
  if (n_max < 0 || n_max > 64) usage("n_max must lie in [0, 64]");
  const int size = n_max + 1;
  const BasisFamily family(pole, size);

  CommandResult result;
  result.report = report_header(options);
  Json& params = result.report["parameters"];
  params["p"] = complex_json(pole.value());
  params["n_max"] = n_max;
  params["samples"] = options.samples;
  params["tol"] = options.tol;

  const OperatorMatrix gram = gram_matrix(family, options.samples);
  const double gram_dev =
      (gram.entries - Eigen::MatrixXcd::Identity(size, size)).cwiseAbs().maxCoeff();

  const int terms = std::max(256, 8 * size);
  params["taylor_terms"] = terms;
  const Eigen::MatrixXcd taylor = taylor_matrix(family, terms);
  double taylor_dev = 0.0;
  constexpr int kProbePoints = 32;
  for (int j = 0; j < kProbePoints; ++j) {
    const Complex z = unit_root(j, kProbePoints);
    for (int n = 0; n < size; ++n) {
      Complex acc(0.0, 0.0);
      for (int m = terms - 1; m >= 0; --m) acc = acc * z + taylor(m, n);
      taylor_dev = std::max(taylor_dev, std::abs(acc - basis_eval(family, n, z)));
    }
  }

  // <z^k, R_0> = sqrt(2 pi (1 - |p|^2)) p^k
  const CircleSamples r0 =
      sample_function(options.samples, [&](Complex z) { return basis_eval(family, 0, z); });
  const double kernel = std::sqrt(kTwoPi * (1.0 - pole.modulus_squared()));
  double szego_dev = 0.0;
  for (int k = 0; k <= n_max; ++k) {
    const auto m = static_cast<std::int64_t>(options.samples);
    const CircleSamples monomial =
        sample_function(options.samples, [&, idx = std::int64_t{0}](Complex) mutable {
          return unit_root(k * idx++, m);
        });
    szego_dev = std::max(szego_dev, std::abs(inner_product(monomial, r0) -
                                             kernel * ipow(pole.value(), k)));
  }

  CertificationReport cert;
  cert.add("gram_orthonormality", gram_dev <= options.tol, gram_dev);
  cert.add("taylor_consistency", taylor_dev <= options.tol, taylor_dev);
  cert.add("szego_evaluation", szego_dev <= options.tol, szego_dev);
  append_certification(result.report, cert);
  result.exit_code = cert.all_pass() ? kExitCertified : kExitRefuted;
  return result;
}

CommandResult run_certify(const CommandOptions& options, const SymbolFile& file) {
  const SymbolSpec& symbol = file.symbol;
  CommandResult result;
  result.report = report_header(options);
  Json& params = result.report["parameters"];
  params["conjugation"] = options.conjugation;
  params["symbol_kind"] = std::string(to_string(symbol.kind()));
  common_parameters(params, options);
  params["k_max"] = options.k_max;
  params["tol"] = options.tol;
  if (options.order < 1) usage("--order must be positive");
  if (options.k_max < 0) usage("--k-max must be nonnegative");

  if (options.conjugation == "J") {
    const PoleParameter pole = require_pole(options, &file);
    const int window = window_for(options.order);
    params["p"] = complex_json(pole.value());
    params["tol_functional"] = options.tol_functional;
    params["window"] = window;

    bool obstructed = false;
    if (symbol.kind() == SymbolKind::Finite) {
      obstructed = finite_obstruction(symbol, pole) == Obstruction::Obstructed;
      params["finite_obstruction"] = obstructed ? "OBSTRUCTED" : "NOT_APPLICABLE";
    }
    const FourierTable table =
        symbol_coefficients(symbol, std::max(options.k_max + 1, options.order), options.samples);

    CertificationReport cert;
    cert.add("coefficient_criterion",
             criterion_coefficients(table, pole, options.k_max, options.tol));
    cert.add("functional_criterion",
             criterion_functional(symbol, pole, options.samples, options.tol_functional));
    const CertificationReport cross =
        matrix_symmetry_crosscheck(symbol, pole, options.order, options.samples, window, options.tol);
    cert.criteria.push_back(cross.at("closed_form_symmetry"));
    cert.criteria.push_back(cross.at("quadrature_symmetry"));
    params["closed_form_gap"] = cross.parameter("closed_form_gap");

    char detail[160];
    std::snprintf(detail, sizeof detail, "p=(%.17g,%.17g) N=%d window=%d k_max=%d",
                  pole.value().real(), pole.value().imag(), options.order, window, options.k_max);
    cert.note_disagreements({"coefficient_criterion", "functional_criterion",
                             "closed_form_symmetry", "quadrature_symmetry"},
                            detail);
    append_certification(result.report, cert);
    // An exact obstruction settles the verdict; disagreement notes are kept.
    result.exit_code = obstructed ? kExitRefuted : verdict_exit(cert);
    result.report["decided_by"] = obstructed ? "finite_obstruction" : "criteria";
    return result;
  }

  if (options.conjugation == "Clambda") {
    const std::optional<Complex> lambda = options.lambda ? options.lambda : file.lambda;
    if (!lambda) usage("--lambda is required for Clambda");
    const ConjugationRealization real =
        realize_conjugation(ConjugationSpec::c_lambda(*lambda), options.order);
    params["lambda"] = complex_json(*lambda);
    const FourierTable table =
        symbol_coefficients(symbol, std::max(options.k_max, options.order - 1), options.samples);

    CertificationReport cert;
    cert.add("ko_lee_criterion", criterion_ko_lee(table, *lambda, options.k_max, options.tol));
    const double residual =
        symmetry_residual(toeplitz_monomial(table, options.order), real, options.order);
    cert.add("monomial_symmetry", residual <= options.tol, residual);
    cert.note_disagreements({"ko_lee_criterion", "monomial_symmetry"},
                            "N=" + std::to_string(options.order));
    append_certification(result.report, cert);
    result.exit_code = verdict_exit(cert);
    result.report["decided_by"] = "criteria";
    return result;
  }

  if (options.conjugation == "Cp") {
    const PoleParameter pole = require_pole(options, &file);
    const int window = window_for(options.order);
    params["p"] = complex_json(pole.value());
    params["window"] = window;
    const CertificationReport probe =
        cp_probe(symbol, pole, options.order, options.samples, window, options.tol);
    for (const auto& [name, value] : probe.parameters) {
      if (name.rfind("involution", 0) == 0 || name == "decaying") params[name] = value;
    }
    append_certification(result.report, probe);
    // Certified when the residual at the larger truncation order is under tol.
    result.exit_code =
        probe.at("cp_symmetry_order_2n").pass ? kExitCertified : kExitRefuted;
    result.report["decided_by"] = "cp_symmetry_order_2n";
    return result;
  }

  usage("--conjugation must be one of J, Clambda, Cp");
}

CommandResult run_generate(const CommandOptions& options, const SymbolFile& h) {
  if (h.symbol.kind() != SymbolKind::Finite) usage("h must be given as a finite symbol");
  if (options.window < 1) usage("--window must be positive");
  const PoleParameter pole = require_pole(options, nullptr);
  const FourierTable table = generate_j_symmetric(h.symbol.coeffs(), pole, options.window);
  const int k_max = std::min(options.window / 2, options.window - 1);

  CommandResult result;
  result.report = report_header(options);
  Json& params = result.report["parameters"];
  params["p"] = complex_json(pole.value());
  params["window"] = options.window;
  params["k_max"] = k_max;
  params["tol"] = options.tol;

  CertificationReport cert;
  cert.add("coefficient_criterion", criterion_coefficients(table, pole, k_max, options.tol));
  append_certification(result.report, cert);
  result.symbol_output = finite_symbol_json(table.nonzero(), pole.value());
  result.report["generated_symbol"] = *result.symbol_output;
  result.exit_code = cert.all_pass() ? kExitCertified : kExitRefuted;
  return result;
}

CommandResult run_matrix(const CommandOptions& options, const SymbolFile& file) {
  if (options.order < 1) usage("--order must be positive");
  CommandResult result;
  result.report = report_header(options);
  Json& params = result.report["parameters"];
  params["basis"] = options.basis;
  common_parameters(params, options);
  Json matrices = Json::object();

  if (options.basis == "monomial") {
    const FourierTable table =
        symbol_coefficients(file.symbol, options.order - 1, options.samples);
    matrices["monomial"] = matrix_json(toeplitz_monomial(table, options.order).entries);
  } else if (options.basis == "rational" || options.basis == "closed_form") {
    const PoleParameter pole = require_pole(options, &file);
    params["p"] = complex_json(pole.value());
    const OperatorMatrix quadrature =
        toeplitz_quadrature(file.symbol, BasisKind::Rational, pole, options.order, options.samples);
    const OperatorMatrix closed = toeplitz_rational_closed_form(
        symbol_coefficients(file.symbol, options.order, options.samples), pole, options.order);
    const bool rational_first = options.basis == "rational";
    matrices[rational_first ? "quadrature" : "closed_form"] =
        matrix_json(rational_first ? quadrature.entries : closed.entries);
    matrices[rational_first ? "closed_form" : "quadrature"] =
        matrix_json(rational_first ? closed.entries : quadrature.entries);
    result.report["residuals"]["closed_form_gap"] =
        (quadrature.entries - closed.entries).cwiseAbs().maxCoeff();
  } else {
    usage("--basis must be one of monomial, rational, closed_form");
  }
  result.report["matrices"] = std::move(matrices);
  return result;
}

int execute(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  try {
    auto load = [&]() {
      if (!options.symbol_path) usage("--symbol is required");
      return read_symbol_file(*options.symbol_path);
    };
    if (options.command == "basis-check") {
      result = run_basis_check(options);
    } else if (options.command == "certify") {
      result = run_certify(options, load());
    } else if (options.command == "generate") {
      result = run_generate(options, load());
    } else if (options.command == "matrix") {
      result = run_matrix(options, load());
    } else {
      usage("unknown command '" + options.command + "'");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  result.report["exit_code"] = result.exit_code;
  result.report["wall_time_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string text = dump_json(result.report);

  const bool symbol_to_file = options.command == "generate";
  if (options.out_path) {
    std::ofstream file(*options.out_path);
    if (!file) {
      err << "error: cannot write " << *options.out_path << '\n';
      return kExitUsage;
    }
    file << (symbol_to_file ? dump_json(*result.symbol_output) : text);
  }
  if (!options.out_path || symbol_to_file) out << text;
  return result.exit_code;
}

}  // namespace hardysym::cli
