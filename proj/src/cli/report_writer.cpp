#include "hardysym/cli/report_writer.hpp"

#include <cmath>
#include <cstdio>

namespace hardysym::cli {

Json complex_json(Complex c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

Json matrix_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void append_certification(Json& report, const CertificationReport& cert) {
  Json& verdicts = report["verdicts"];
  Json& residuals = report["residuals"];
  if (verdicts.is_null()) verdicts = Json::object();
  if (residuals.is_null()) residuals = Json::object();
  for (const auto& c : cert.criteria) {
    verdicts[c.name] = c.pass;
    residuals[c.name] = c.residual;
    if (!c.per_index.empty()) report["residuals_per_index"][c.name] = c.per_index;
  }
  Json& notes = report["notes"];
  if (notes.is_null()) notes = Json::array();
  for (const auto& n : cert.notes) {
    notes.push_back(Json{{"first", n.first},
                         {"second", n.second},
                         {"first_residual", n.first_residual},
                         {"second_residual", n.second_residual},
                         {"residual_gap", std::abs(n.first_residual - n.second_residual)},
                         {"detail", n.detail}});
  }
}

namespace {

void write(const Json& v, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent <= 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += indent > 0 ? ": " : ":";
        write(item, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write(item, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = v.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string dump_json(const Json& doc, int indent) {
  std::string out;
  write(doc, indent, 0, out);
  out += '\n';
  return out;
}

}  // namespace hardysym::cli
