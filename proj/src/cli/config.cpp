#include <bzeta/cli/config.hpp>

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

namespace bzeta::cli {

std::string to_string(Command c) {
  switch (c) {
    case Command::pair_verify: return "pair-verify";
    case Command::pair_chain: return "pair-chain";
    case Command::lvalue: return "lvalue";
    case Command::table: return "table";
    case Command::constant: return "constant";
  }
  return "unknown";
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "unknown";
}

std::string to_string(ConstantName c) {
  switch (c) {
    case ConstantName::catalan: return "catalan";
    case ConstantName::gamma: return "gamma";
    case ConstantName::zeta2: return "zeta2";
    case ConstantName::beta4: return "beta4";
  }
  return "unknown";
}

Command parse_command(const std::string& text) {
  for (auto c : {Command::pair_verify, Command::pair_chain, Command::lvalue, Command::table,
                 Command::constant}) {
    if (to_string(c) == text) return c;
  }
  throw UsageError("unknown command '" + text + "'");
}

OutputFormat parse_format(const std::string& text) {
  for (auto f : {OutputFormat::json, OutputFormat::csv, OutputFormat::text}) {
    if (to_string(f) == text) return f;
  }
  throw UsageError("unknown format '" + text + "' (json, csv or text)");
}

ConstantName parse_constant(const std::string& text) {
  for (auto c : {ConstantName::catalan, ConstantName::gamma, ConstantName::zeta2,
                 ConstantName::beta4}) {
    if (to_string(c) == text) return c;
  }
  throw UsageError("unknown constant '" + text + "' (catalan, gamma, zeta2 or beta4)");
}

Rational parse_decimal_rational(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    try {
      return qcore::parse_rational(text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  static const std::regex pattern(R"(^([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern) || (m[2].length() == 0 && m[3].length() == 0)) {
    throw UsageError("malformed number '" + text + "'");
  }
  const std::string digits = m[2].str() + m[3].str();
  Rational value(qcore::BigInt(digits.empty() ? "0" : digits, 10));
  long exponent = -static_cast<long>(m[3].length());
  if (m[4].matched) {
    const std::string e = m[4].str();
    if (e.size() > 6) throw UsageError("exponent out of range in '" + text + "'");
    exponent += std::stol(e);
  }
  value *= qcore::pow(Rational(10), exponent);
  if (m[1].str() == "-") value = -value;
  return value;
}

std::pair<Rational, Rational> parse_complex_literal(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw UsageError("empty complex literal");
  if (t.back() != 'i') return {parse_decimal_rational(t), Rational(0)};

  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_text = split == std::string::npos ? "" : t.substr(0, split);
  std::string im_text = split == std::string::npos ? t : t.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  const Rational re = re_text.empty() ? Rational(0) : parse_decimal_rational(re_text);
  return {re, parse_decimal_rational(im_text)};
}

std::string format_complex_literal(const Rational& re, const Rational& im) {
  if (im == 0) return qcore::to_string(re);
  const Rational magnitude = abs(im);
  return qcore::to_string(re) + (im < 0 ? "-" : "+") + qcore::to_string(magnitude) + "i";
}

void RunConfiguration::validate() const {
  if (precision_bits < qcore::PrecisionContext::kMinBits) {
    throw UsageError("--precision must be at least " +
                     std::to_string(qcore::PrecisionContext::kMinBits) + " bits");
  }
  if (tolerance && !(*tolerance >= 0.0)) throw UsageError("--tolerance must be nonnegative");
  switch (command) {
    case Command::pair_verify:
    case Command::pair_chain:
      if (definition.empty()) throw UsageError(to_string(command) + " needs a definition file");
      if (command == Command::pair_chain && steps == 0) throw UsageError("--steps must be >= 1");
      return;
    case Command::constant:
      if (!constant) throw UsageError("constant needs a name (catalan, gamma, zeta2, beta4)");
      break;
    case Command::lvalue:
    case Command::table: {
      const auto [re, im] = parse_complex_literal(s);
      (void)im;
      if (re <= 1) throw UsageError("Re(s) must exceed 1, got s = " + s);
      break;
    }
  }
  if (n0 == 0) throw UsageError("--n0 must be >= 1");
  if (factor < 2) throw UsageError("--factor must be >= 2");
  if (count == 0) throw UsageError("--count must be >= 1 (empty schedule)");
  if (command != Command::table && count < order + 1) {
    throw UsageError("--count " + std::to_string(count) + " is too short for --order " +
                     std::to_string(order) + "; need at least " + std::to_string(order + 1));
  }
}

nlohmann::ordered_json to_json(const RunConfiguration& c) {
  nlohmann::ordered_json j;
  j["command"] = to_string(c.command);
  j["weight"] = c.weight;
  j["s"] = c.s;
  j["n0"] = c.n0;
  j["factor"] = c.factor;
  j["count"] = c.count;
  j["precision_bits"] = c.precision_bits;
  j["order"] = c.order;
  j["method"] = c.method ? nlohmann::ordered_json(limits::to_string(*c.method)) : nullptr;
  j["constant"] = c.constant ? nlohmann::ordered_json(to_string(*c.constant)) : nullptr;
  j["threads"] = c.threads;
  j["timing"] = c.timing;
  j["tolerance"] = c.tolerance ? nlohmann::ordered_json(*c.tolerance) : nullptr;
  j["definition"] = c.definition;
  j["depth"] = c.depth ? nlohmann::ordered_json(*c.depth) : nullptr;
  j["truncation"] = c.truncation ? nlohmann::ordered_json(*c.truncation) : nullptr;
  j["rho1"] = c.rho1;
  j["rho2"] = c.rho2;
  j["steps"] = c.steps;
  j["format"] = to_string(c.format);
  j["out"] = c.out ? nlohmann::ordered_json(*c.out) : nullptr;
  return j;
}

RunConfiguration config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("configuration must be a JSON object");
  static const std::set<std::string> known{
      "command", "weight",     "s",         "n0",         "factor", "count", "precision_bits",
      "order",   "method",     "constant",  "threads",    "timing", "tolerance", "definition",
      "depth",   "truncation", "rho1",      "rho2",       "steps",  "format", "out"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) throw UsageError("unknown configuration key '" + item.key() + "'");
  }
  RunConfiguration c;
  try {
    if (j.contains("command")) c.command = parse_command(j.at("command").get<std::string>());
    if (j.contains("weight")) c.weight = j.at("weight").get<std::string>();
    if (j.contains("s")) c.s = j.at("s").get<std::string>();
    if (j.contains("n0")) c.n0 = j.at("n0").get<std::size_t>();
    if (j.contains("factor")) c.factor = j.at("factor").get<std::size_t>();
    if (j.contains("count")) c.count = j.at("count").get<std::size_t>();
    if (j.contains("precision_bits")) c.precision_bits = j.at("precision_bits").get<long>();
    if (j.contains("order")) c.order = j.at("order").get<std::size_t>();
    if (j.contains("method") && !j.at("method").is_null()) {
      c.method = limits::parse_extrapolation_method(j.at("method").get<std::string>());
    }
    if (j.contains("constant") && !j.at("constant").is_null()) {
      c.constant = parse_constant(j.at("constant").get<std::string>());
    }
    if (j.contains("threads")) c.threads = j.at("threads").get<unsigned>();
    if (j.contains("timing")) c.timing = j.at("timing").get<bool>();
    if (j.contains("tolerance") && !j.at("tolerance").is_null()) {
      c.tolerance = j.at("tolerance").get<double>();
    }
    if (j.contains("definition")) c.definition = j.at("definition").get<std::string>();
    if (j.contains("depth") && !j.at("depth").is_null()) c.depth = j.at("depth").get<std::size_t>();
    if (j.contains("truncation") && !j.at("truncation").is_null()) {
      c.truncation = j.at("truncation").get<std::size_t>();
    }
    if (j.contains("rho1")) c.rho1 = j.at("rho1").get<std::string>();
    if (j.contains("rho2")) c.rho2 = j.at("rho2").get<std::string>();
    if (j.contains("steps")) c.steps = j.at("steps").get<std::size_t>();
    if (j.contains("format")) c.format = parse_format(j.at("format").get<std::string>());
    if (j.contains("out") && !j.at("out").is_null()) c.out = j.at("out").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad configuration value: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

}  // namespace bzeta::cli
