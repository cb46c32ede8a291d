#ifndef HARDYSYM_CLI_SYMBOL_FILE_HPP
#define HARDYSYM_CLI_SYMBOL_FILE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "hardysym/symbol.hpp"

namespace hardysym::cli {

/// A parsed symbol document.
///
///   {"kind": "finite" | "ex1" | "ex2" | "analytic_fraction" | "generated",
///    "coeffs":   [{"n": int, "re": num, "im": num}, ...],
///    "h_coeffs": [{"n": int, "re": num, "im": num}, ...],
///    "p":        {"re": num, "im": num},
///    "lambda":   {"re": num, "im": num}}
///
/// Parsing is strict: unknown fields, missing required fields, duplicate
/// indices and fields that make no sense for the kind are all rejected.
struct SymbolFile {
  SymbolSpec symbol;
  std::optional<Complex> p;
  std::optional<Complex> lambda;
};

SymbolFile parse_symbol_file(const nlohmann::ordered_json& doc);
SymbolFile parse_symbol_text(const std::string& text);
SymbolFile read_symbol_file(const std::string& path);

/// Finite symbol document with the nonzero coefficients and an optional p.
nlohmann::ordered_json finite_symbol_json(const LaurentCoefficients& coeffs,
                                          std::optional<Complex> p = std::nullopt);

}  // namespace hardysym::cli

#endif  // HARDYSYM_CLI_SYMBOL_FILE_HPP
