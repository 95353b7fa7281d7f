#include <bzeta/limits/report_io.hpp>

#include <sstream>

namespace bzeta::limits {

namespace {

std::string decimal(const Real& x, int digits) { return qcore::to_decimal(x, digits); }

// Shortest text that parses back to the same double.
std::string number_text(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

}  // namespace

nlohmann::ordered_json complex_to_json(const Complex& z, int digits) {
  nlohmann::ordered_json j;
  j["re"] = decimal(z.re, digits);
  j["im"] = decimal(z.im, digits);
  return j;
}

nlohmann::ordered_json record_to_json(const ConvergenceRecord& record, int digits) {
  nlohmann::ordered_json j;
  j["n"] = record.n;
  j["re"] = decimal(record.approximant.re, digits);
  j["im"] = decimal(record.approximant.im, digits);
  j["err_est"] = record.error_estimate.to_double();
  j["elapsed_ms"] = record.elapsed_ms;
  return j;
}

nlohmann::ordered_json to_json(const ConvergenceReport& report, int digits) {
  nlohmann::ordered_json j;
  j["method"] = report.method;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& record : report.records) j["records"].push_back(record_to_json(record, digits));
  j["extrapolated"] = complex_to_json(report.extrapolated, digits);
  j["err_est"] = report.error_estimate.to_double();
  if (report.target_hint) j["target_hint"] = complex_to_json(*report.target_hint, digits);
  if (report.interrupted) j["interrupted"] = true;
  return j;
}

nlohmann::ordered_json to_json(const RegularizationReport& report, int digits) {
  nlohmann::ordered_json j;
  j["delta_grid"] = nlohmann::ordered_json::array();
  for (const auto& delta : report.delta_grid) j["delta_grid"].push_back(qcore::to_string(delta));
  j["raw"] = nlohmann::ordered_json::array();
  for (const auto& z : report.raw) j["raw"].push_back(complex_to_json(z, digits));
  j["subtracted"] = nlohmann::ordered_json::array();
  for (const auto& z : report.subtracted) j["subtracted"].push_back(complex_to_json(z, digits));
  j["extrapolated"] = complex_to_json(report.extrapolated_gamma_over_sqrt_pi, digits);
  j["err_est"] = report.error_estimate.to_double();
  j["runs"] = nlohmann::ordered_json::array();
  for (const auto& run : report.runs) j["runs"].push_back(to_json(run, digits));
  if (report.interrupted) j["interrupted"] = true;
  return j;
}

std::string csv_row(const ConvergenceRecord& record, int digits) {
  return std::to_string(record.n) + "," + decimal(record.approximant.re, digits) + "," +
         decimal(record.approximant.im, digits) + "," +
         number_text(record.error_estimate.to_double()) + "," + number_text(record.elapsed_ms);
}

std::string csv_extrapolated_row(const ConvergenceReport& report, int digits) {
  return "extrapolated," + decimal(report.extrapolated.re, digits) + "," +
         decimal(report.extrapolated.im, digits) + "," +
         number_text(report.error_estimate.to_double()) + ",";
}

std::string to_csv(const ConvergenceReport& report, int digits) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& record : report.records) out += csv_row(record, digits) + "\n";
  if (!report.interrupted) out += csv_extrapolated_row(report, digits) + "\n";
  return out;
}

ConvergenceReport report_from_json(const nlohmann::json& j, long bits) {
  auto complex_from = [bits](const nlohmann::json& z) {
    return Complex(Real::from_string(z.at("re").get<std::string>(), bits),
                   Real::from_string(z.at("im").get<std::string>(), bits));
  };
  ConvergenceReport report;
  report.method = j.at("method").get<std::string>();
  for (const auto& r : j.at("records")) {
    ConvergenceRecord record;
    record.n = r.at("n").get<std::size_t>();
    record.approximant = Complex(Real::from_string(r.at("re").get<std::string>(), bits),
                                 Real::from_string(r.at("im").get<std::string>(), bits));
    record.error_estimate = Real::from_string(number_text(r.at("err_est").get<double>()), bits);
    record.elapsed_ms = r.at("elapsed_ms").get<double>();
    report.records.push_back(std::move(record));
  }
  report.extrapolated = complex_from(j.at("extrapolated"));
  report.error_estimate = Real::from_string(number_text(j.at("err_est").get<double>()), bits);
  if (j.contains("target_hint")) report.target_hint = complex_from(j.at("target_hint"));
  report.interrupted = j.value("interrupted", false);
  return report;
}

}  // namespace bzeta::limits
