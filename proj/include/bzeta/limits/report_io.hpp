#pragma once

#include <bzeta/limits/outer.hpp>

#include <json.hpp>

#include <string>

namespace bzeta::limits {

/// re and im are decimal strings carrying every digit of the working
/// precision; err_est and elapsed_ms are plain JSON numbers.
nlohmann::ordered_json record_to_json(const ConvergenceRecord& record, int digits);
nlohmann::ordered_json complex_to_json(const Complex& z, int digits);

/// {"method", "records": [{n, re, im, err_est, elapsed_ms}...],
///  "extrapolated": {re, im}, "err_est", "target_hint"?, "interrupted"?}
nlohmann::ordered_json to_json(const ConvergenceReport& report, int digits);
nlohmann::ordered_json to_json(const RegularizationReport& report, int digits);

inline constexpr const char* kCsvHeader = "n,re,im,err_est,elapsed_ms";

std::string csv_row(const ConvergenceRecord& record, int digits);
/// Final row of a table; n is the literal "extrapolated" and elapsed_ms is empty.
std::string csv_extrapolated_row(const ConvergenceReport& report, int digits);
/// Header, one row per record, then the extrapolated row; newline terminated.
std::string to_csv(const ConvergenceReport& report, int digits);

/// Parses a JSON report produced by to_json back into records and the
/// extrapolated value at the given precision.
ConvergenceReport report_from_json(const nlohmann::json& j, long bits);

}  // namespace bzeta::limits
