// hardysym: command-line front end for the Toeplitz symmetry certifiers.
//
//   hardysym basis-check --p 0.5 --order 12
//   hardysym certify --symbol ex1.json --conjugation J --p 0.5
//   hardysym generate --symbol h.json --p 0.5 --window 32 --out phi.json
//   hardysym matrix --symbol z.json --basis rational --p 0.5 --order 4

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hardysym/cli/commands.hpp"

namespace cli = hardysym::cli;

int main(int argc, char** argv) {
  CLI::App app{"Complex symmetry certifiers for Toeplitz operators on the Hardy space"};
  app.require_subcommand(1);

  cli::CommandOptions options;
  std::string p_text;
  std::string lambda_text;
  std::string symbol_path;
  std::string out_path;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--symbol", symbol_path, "Symbol file (JSON)");
    sub->add_option("--p", p_text, "Pole parameter p as re[,im]");
    sub->add_option("--lambda", lambda_text, "Unimodular lambda as re,im");
    sub->add_option("--order", options.order, "Truncation order N (basis-check: n_max)")
        ->capture_default_str();
    sub->add_option("--samples", options.samples, "Quadrature nodes M")->capture_default_str();
    sub->add_option("--k-max", options.k_max, "Largest index checked by coefficient criteria")
        ->capture_default_str();
    sub->add_option("--tol", options.tol, "Tolerance for coefficient and matrix criteria")
        ->capture_default_str();
    sub->add_option("--tol-functional", options.tol_functional,
                    "Tolerance for pointwise functional identities")
        ->capture_default_str();
    sub->add_option("--out", out_path, "Output file");
  };

  auto* basis_check = app.add_subcommand("basis-check", "Check the rational orthonormal basis");
  auto* certify = app.add_subcommand("certify", "Certify C-symmetry of T_phi");
  auto* generate = app.add_subcommand("generate", "Generate a J-symmetric symbol from an even h");
  auto* matrix = app.add_subcommand("matrix", "Emit a truncated Toeplitz matrix");
  for (auto* sub : {basis_check, certify, generate, matrix}) common(sub);
  certify->add_option("--conjugation", options.conjugation, "J | Clambda | Cp")->required();
  generate->add_option("--window", options.window, "Output coefficient window K")
      ->capture_default_str();
  matrix->add_option("--basis", options.basis, "monomial | rational | closed_form")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  options.command = app.get_subcommands().front()->get_name();
  for (int i = 1; i < argc; ++i) {
    if (i > 1) options.command_line += ' ';
    options.command_line += argv[i];
  }
  try {
    if (!p_text.empty()) options.p = cli::parse_complex(p_text);
    if (!lambda_text.empty()) options.lambda = cli::parse_complex(lambda_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
  if (!symbol_path.empty()) options.symbol_path = symbol_path;
  if (!out_path.empty()) options.out_path = out_path;

  return cli::execute(options, std::cout, std::cerr);
}
