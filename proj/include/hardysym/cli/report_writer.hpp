#ifndef HARDYSYM_CLI_REPORT_WRITER_HPP
#define HARDYSYM_CLI_REPORT_WRITER_HPP

#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "hardysym/certify.hpp"

namespace hardysym::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

Json complex_json(Complex c);
Json matrix_json(const Eigen::MatrixXcd& m);

/// verdicts / residuals / residuals_per_index / notes sections of a report.
void append_certification(Json& report, const CertificationReport& cert);

/// Serializes with floats printed as %.17g, keys in insertion order and
/// non-finite numbers as null. Output is byte-stable for equal documents.
std::string dump_json(const Json& doc, int indent = 2);

}  // namespace hardysym::cli

#endif  // HARDYSYM_CLI_REPORT_WRITER_HPP
