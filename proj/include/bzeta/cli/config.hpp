#pragma once

#include <bzeta/limits/extrapolation.hpp>
#include <bzeta/qcore/real.hpp>

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace bzeta::cli {

using qcore::Rational;

enum class Command { pair_verify, pair_chain, lvalue, table, constant };
enum class OutputFormat { json, csv, text };
enum class ConstantName { catalan, gamma, zeta2, beta4 };

/// Invalid flags or flag combinations; maps to exit status 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(Command c);
std::string to_string(OutputFormat f);
std::string to_string(ConstantName c);
Command parse_command(const std::string& text);
OutputFormat parse_format(const std::string& text);
ConstantName parse_constant(const std::string& text);

/// "re", "re+imi", "re-imi" or "imi" with decimal or p/q parts, e.g. "2",
/// "2+i", "1.5-0.25i", "1/3+2/7i". Parts are exact rationals.
std::pair<Rational, Rational> parse_complex_literal(const std::string& text);
/// Canonical literal; parse_complex_literal inverts it.
std::string format_complex_literal(const Rational& re, const Rational& im);

/// Exact rational from a decimal literal such as "-1.25" or "3e-2", or "p/q".
Rational parse_decimal_rational(const std::string& text);

struct RunConfiguration {
  Command command = Command::lvalue;

  // lvalue / table / constant
  std::string weight = "trivial";
  std::string s = "2";
  std::size_t n0 = 64;
  std::size_t factor = 2;
  std::size_t count = 7;
  long precision_bits = 192;
  std::size_t order = 6;
  /// Unset means polynomial, except the gamma preset which uses asymptotic.
  std::optional<limits::ExtrapolationMethod> method;
  std::optional<ConstantName> constant;
  unsigned threads = 1;
  bool timing = true;
  std::optional<double> tolerance;

  // pair-verify / pair-chain
  std::string definition;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> truncation;
  std::string rho1 = "-1";
  std::string rho2 = "-1";
  std::size_t steps = 1;

  OutputFormat format = OutputFormat::text;
  std::optional<std::string> out;

  /// Throws UsageError for inconsistent settings, including Re(s) <= 1 for
  /// lvalue and table. Runs before any computation.
  void validate() const;

  friend bool operator==(const RunConfiguration&, const RunConfiguration&) = default;
};

nlohmann::ordered_json to_json(const RunConfiguration& config);
/// Missing keys keep their defaults; unknown keys are rejected with UsageError.
RunConfiguration config_from_json(const nlohmann::json& j);

}  // namespace bzeta::cli
