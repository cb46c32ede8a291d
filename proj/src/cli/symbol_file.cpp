#include "hardysym/cli/symbol_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hardysym::cli {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

void require_only(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) fail(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) fail("unknown field '" + key + "' in " + where);
  }
}

double number(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) fail(where + " is missing '" + key + "'");
  const Json& v = obj.at(key);
  if (!v.is_number()) fail(where + "." + key + " must be a number");
  return v.get<double>();
}

Complex complex_field(const Json& obj, const std::string& where) {
  require_only(obj, {"re", "im"}, where);
  return {number(obj, "re", where), number(obj, "im", where)};
}

LaurentCoefficients coefficient_list(const Json& list, const std::string& where) {
  if (!list.is_array()) fail(where + " must be a list");
  LaurentCoefficients out;
  for (const auto& entry : list) {
    require_only(entry, {"n", "re", "im"}, where + " entry");
    if (!entry.contains("n") || !entry.at("n").is_number_integer()) {
      fail(where + " entry needs an integer 'n'");
    }
    const int n = entry.at("n").get<int>();
    if (!out.emplace(n, Complex(number(entry, "re", where), number(entry, "im", where))).second) {
      fail("duplicate index " + std::to_string(n) + " in " + where);
    }
  }
  return out;
}

}  // namespace

SymbolFile parse_symbol_file(const Json& doc) {
  require_only(doc, {"kind", "coeffs", "p", "lambda", "h_coeffs"}, "symbol file");
  if (!doc.contains("kind") || !doc.at("kind").is_string()) fail("symbol file needs a string 'kind'");
  const std::string kind = doc.at("kind").get<std::string>();

  std::optional<Complex> p;
  std::optional<Complex> lambda;
  if (doc.contains("p")) p = complex_field(doc.at("p"), "p");
  if (doc.contains("lambda")) lambda = complex_field(doc.at("lambda"), "lambda");

  auto forbid = [&](const char* field) {
    if (doc.contains(field)) fail(std::string("'") + field + "' not allowed for kind " + kind);
  };
  auto need_p = [&]() -> Complex {
    if (!p) fail("kind " + kind + " requires 'p'");
    return *p;
  };
  auto real_p = [&]() -> double {
    const Complex v = need_p();
    if (v.imag() != 0.0) fail("kind " + kind + " requires real p");
    return v.real();
  };

  if (kind == "finite") {
    forbid("h_coeffs");
    if (!doc.contains("coeffs")) fail("kind finite requires 'coeffs'");
    return {SymbolSpec::finite(coefficient_list(doc.at("coeffs"), "coeffs")), p, lambda};
  }
  if (kind == "ex1" || kind == "ex2") {
    forbid("coeffs");
    forbid("h_coeffs");
    const double value = real_p();
    return {kind == "ex1" ? SymbolSpec::ex1(value) : SymbolSpec::ex2(value), p, lambda};
  }
  if (kind == "analytic_fraction") {
    forbid("coeffs");
    forbid("h_coeffs");
    return {SymbolSpec::analytic_fraction(PoleParameter(need_p())), p, lambda};
  }
  if (kind == "generated") {
    if (!doc.contains("h_coeffs")) fail("kind generated requires 'h_coeffs'");
    LaurentCoefficients perturbation;
    if (doc.contains("coeffs")) perturbation = coefficient_list(doc.at("coeffs"), "coeffs");
    return {SymbolSpec::generated(coefficient_list(doc.at("h_coeffs"), "h_coeffs"),
                                  PoleParameter(need_p()), std::move(perturbation)),
            p, lambda};
  }
  fail("unknown kind '" + kind + "'");
}

SymbolFile parse_symbol_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(e.what());
  }
  return parse_symbol_file(doc);
}

SymbolFile read_symbol_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_symbol_text(buffer.str());
}

Json finite_symbol_json(const LaurentCoefficients& coeffs, std::optional<Complex> p) {
  Json doc;
  doc["kind"] = "finite";
  Json list = Json::array();
  for (const auto& [n, c] : coeffs) {
    if (c == Complex{}) continue;
    list.push_back(Json{{"n", n}, {"re", c.real()}, {"im", c.imag()}});
  }
  doc["coeffs"] = std::move(list);
  if (p) doc["p"] = Json{{"re", p->real()}, {"im", p->imag()}};
  return doc;
}

}  // namespace hardysym::cli
