#ifndef HARDYSYM_CLI_COMMANDS_HPP
#define HARDYSYM_CLI_COMMANDS_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "hardysym/cli/report_writer.hpp"
#include "hardysym/cli/symbol_file.hpp"

namespace hardysym::cli {

inline constexpr int kExitCertified = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDisagreement = 3;

struct CommandOptions {
  std::string command;       // basis-check | certify | generate | matrix
  std::string command_line;  // echoed verbatim into the report

  std::optional<std::string> symbol_path;
  std::optional<std::string> out_path;
  std::optional<Complex> p;
  std::optional<Complex> lambda;
  std::string conjugation;  // J | Clambda | Cp
  std::string basis;        // monomial | rational | closed_form

  int order = 16;
  std::size_t samples = 4096;
  int k_max = 32;
  int window = 32;  // generate: output coefficient window K
  double tol = 1e-8;
  double tol_functional = 1e-10;
};

struct CommandResult {
  int exit_code = kExitCertified;
  Json report;
  std::optional<Json> symbol_output;  // generate only
};

CommandResult run_basis_check(const CommandOptions& options);
CommandResult run_certify(const CommandOptions& options, const SymbolFile& symbol);
CommandResult run_generate(const CommandOptions& options, const SymbolFile& h);
CommandResult run_matrix(const CommandOptions& options, const SymbolFile& symbol);

/// Parses "re" or "re,im".
Complex parse_complex(const std::string& text);

/// Full command: loads the symbol file, runs, writes --out, prints the
/// report (or errors) and returns the process exit code. Any input or
/// parameter error maps to exit code 2.
int execute(const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace hardysym::cli

#endif  // HARDYSYM_CLI_COMMANDS_HPP
