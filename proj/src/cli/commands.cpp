#include <bzeta/cli/commands.hpp>

#include <bzeta/bailey/pair_file.hpp>
#include <bzeta/limits/report_io.hpp>
#include <bzeta/weights/weight.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace bzeta::cli {

using qcore::Complex;
using qcore::Real;

namespace {

qcore::PrecisionContext context_for(const RunConfiguration& config) {
  qcore::PrecisionContext ctx;
  ctx.precision_bits = config.precision_bits;
  return ctx;
}

limits::OuterOptions options_for(const RunConfiguration& config, const std::atomic<bool>* cancel) {
  limits::OuterOptions options;
  options.threads = config.threads;
  options.record_timing = config.timing;
  options.cancel = cancel;
  return options;
}

Complex complex_from_literal(const std::string& text, long bits) {
  const auto [re, im] = parse_complex_literal(text);
  return {Real(re, bits), Real(im, bits)};
}

std::string text_complex(const Complex& z, int digits) {
  std::string out = qcore::to_decimal(z.re, digits);
  if (z.im.is_zero()) return out;
  const bool negative = z.im.sign() < 0;
  return out + (negative ? " - " : " + ") + qcore::to_decimal(qcore::abs(z.im), digits) + "i";
}

std::string number_text(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

// Destination for the full report: config.out when given, else `out`.
class Sink {
 public:
  Sink(const RunConfiguration& config, std::ostream& out) : out_(&out) {
    if (config.out) {
      file_.open(*config.out, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot open output file '" + *config.out + "'");
      target_ = &file_;
    } else {
      target_ = &out;
    }
  }

  std::ostream& report() { return *target_; }
  bool separate() const { return target_ != out_; }

 private:
  std::ostream* out_;
  std::ofstream file_;
  std::ostream* target_;
};

int tolerance_status(const RunConfiguration& config, const Real& error, std::ostream& err) {
  if (config.tolerance && error.to_double() > *config.tolerance) {
    err << "error estimate " << number_text(error.to_double()) << " exceeds tolerance "
        << number_text(*config.tolerance) << "\n";
    return kExitTolerance;
  }
  return kExitOk;
}

void write_text_summary(std::ostream& os, const std::string& scaled_label,
                        const std::string& value_label, const Complex& scaled,
                        const Complex& unscaled, const Real& error, const std::string& method,
                        int digits) {
  os << scaled_label << " = " << text_complex(scaled, digits) << "\n";
  os << "err_est = " << number_text(error.to_double()) << "\n";
  os << value_label << " = " << text_complex(unscaled, digits) << "\n";
  os << "method = " << method << "\n";
}

int finish_lvalue(const RunConfiguration& config, const LValueResult& result,
                  const std::string& scaled_label, const std::string& value_label,
                  nlohmann::ordered_json extra, std::ostream& out, std::ostream& err) {
  const int digits = qcore::decimal_digits(config.precision_bits);
  Sink sink(config, out);
  if (result.report.interrupted) {
    err << "interrupted after " << result.report.records.size() << " schedule points\n";
  }
  switch (config.format) {
    case OutputFormat::json: {
      nlohmann::ordered_json j = std::move(extra);
      const auto body = limits::to_json(result.report, digits);
      for (const auto& item : body.items()) j[item.key()] = item.value();
      j["unscaled"] = limits::complex_to_json(result.unscaled, digits);
      sink.report() << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv: sink.report() << limits::to_csv(result.report, digits); break;
    case OutputFormat::text:
      write_text_summary(sink.report(), scaled_label, value_label, result.scaled, result.unscaled,
                         result.report.error_estimate, result.report.method, digits);
      break;
  }
  if (sink.separate()) {
    write_text_summary(out, scaled_label, value_label, result.scaled, result.unscaled,
                       result.report.error_estimate, result.report.method, digits);
  }
  if (result.report.interrupted) return kExitInterrupted;
  return tolerance_status(config, result.report.error_estimate, err);
}

int cmd_lvalue(const RunConfiguration& config, std::ostream& out, std::ostream& err,
               const std::atomic<bool>* cancel) {
  const LValueResult result = compute_lvalue(config, cancel);
  nlohmann::ordered_json extra;
  extra["weight"] = config.weight;
  extra["s"] = config.s;
  return finish_lvalue(config, result, "L(s,chi)/sqrt(pi)", "L(s,chi)", std::move(extra), out, err);
}

int cmd_constant(const RunConfiguration& config, std::ostream& out, std::ostream& err,
                 const std::atomic<bool>* cancel) {
  const ConstantName name = *config.constant;
  const ConstantPreset preset = preset_for(name);
  const std::string scaled_label = preset.symbol + "/sqrt(pi)";
  if (!preset.regularized) {
    RunConfiguration effective = config;
    effective.weight = preset.weight;
    effective.s = preset.s;
    const LValueResult result = compute_lvalue(effective, cancel);
    nlohmann::ordered_json extra;
    extra["constant"] = to_string(name);
    extra["weight"] = preset.weight;
    extra["s"] = preset.s;
    return finish_lvalue(effective, result, scaled_label, preset.symbol, std::move(extra), out, err);
  }

  const GammaResult result = compute_gamma(config, cancel);
  const int digits = qcore::decimal_digits(config.precision_bits);
  const std::string method =
      "delta-neville(order=" + std::to_string(result.report.delta_grid.size() - 1) + ") over " +
      (result.report.runs.empty() ? std::string("-") : result.report.runs.front().method);
  Sink sink(config, out);
  switch (config.format) {
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["constant"] = to_string(name);
      const auto body = limits::to_json(result.report, digits);
      for (const auto& item : body.items()) j[item.key()] = item.value();
      j["unscaled"] = limits::complex_to_json(result.unscaled, digits);
      sink.report() << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv: {
      sink.report() << "delta,raw_re,subtracted_re\n";
      for (std::size_t i = 0; i < result.report.delta_grid.size(); ++i) {
        sink.report() << qcore::to_string(result.report.delta_grid[i]) << ","
                      << qcore::to_decimal(result.report.raw[i].re, digits) << ","
                      << qcore::to_decimal(result.report.subtracted[i].re, digits) << "\n";
      }
      if (!result.report.interrupted) {
        sink.report() << "extrapolated,," << qcore::to_decimal(result.scaled.re, digits) << "\n";
      }
      break;
    }
    case OutputFormat::text:
      write_text_summary(sink.report(), scaled_label, preset.symbol, result.scaled, result.unscaled,
                         result.report.error_estimate, method, digits);
      break;
  }
  if (sink.separate()) {
    write_text_summary(out, scaled_label, preset.symbol, result.scaled, result.unscaled,
                       result.report.error_estimate, method, digits);
  }
  if (result.report.interrupted) {
    err << "interrupted\n";
    return kExitInterrupted;
  }
  return tolerance_status(config, result.report.error_estimate, err);
}

int cmd_table(const RunConfiguration& config, std::ostream& out, std::ostream& err,
              const std::atomic<bool>* cancel) {
  const auto ctx = context_for(config);
  const long bits = ctx.working_bits();
  const int digits = qcore::decimal_digits(config.precision_bits);
  const auto chi = weights::load_weight(config.weight);
  const Complex s = complex_from_literal(config.s, bits);
  const auto schedule = limits::geometric_schedule(config.n0, config.factor, config.count);
  const limits::ExtrapolationConfig accel{
      config.method.value_or(limits::ExtrapolationMethod::polynomial),
      std::min(config.order, schedule.size() - 1)};

  Sink sink(config, out);
  std::ostream& os = sink.report();
  auto options = options_for(config, cancel);
  if (config.format == OutputFormat::csv) {
    os << limits::kCsvHeader << "\n" << std::flush;
    options.on_record = [&](const limits::ConvergenceRecord& r) {
      os << limits::csv_row(r, digits) << "\n" << std::flush;
    };
  } else if (config.format == OutputFormat::json) {
    options.on_record = [&](const limits::ConvergenceRecord& r) {
      os << limits::record_to_json(r, digits).dump() << "\n" << std::flush;
    };
  } else {
    os << std::left << std::setw(10) << "n" << std::setw(digits + 8) << "A_n" << "err_est\n";
    options.on_record = [&](const limits::ConvergenceRecord& r) {
      os << std::left << std::setw(10) << r.n << std::setw(digits + 8)
         << text_complex(r.approximant, digits) << number_text(r.error_estimate.to_double())
         << "\n"
         << std::flush;
    };
  }

  const auto report = limits::outer_limit(chi, s, schedule, accel, ctx, options);
  if (report.interrupted) {
    err << "interrupted after " << report.records.size() << " rows\n";
    return kExitInterrupted;
  }
  switch (config.format) {
    case OutputFormat::csv: os << limits::csv_extrapolated_row(report, digits) << "\n"; break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["extrapolated"] = limits::complex_to_json(report.extrapolated, digits);
      j["err_est"] = report.error_estimate.to_double();
      j["method"] = report.method;
      os << j.dump() << "\n";
      break;
    }
    case OutputFormat::text:
      os << std::left << std::setw(10) << "extrap" << std::setw(digits + 8)
         << text_complex(report.extrapolated, digits)
         << number_text(report.error_estimate.to_double()) << "\n";
      break;
  }
  os << std::flush;
  return tolerance_status(config, report.error_estimate, err);
}

int status_exit(bailey::VerificationReport::Status status) {
  switch (status) {
    case bailey::VerificationReport::Status::verified: return kExitOk;
    case bailey::VerificationReport::Status::mismatch: return kExitMismatch;
    case bailey::VerificationReport::Status::inconclusive: return kExitInconclusive;
  }
  return kExitUsage;
}

bailey::Monomial parse_monomial_flag(const std::string& text, const char* flag) {
  try {
    return bailey::evaluate_monomial(*bailey::parse_expression(text));
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

int cmd_pair(const RunConfiguration& config, std::ostream& out, std::ostream& err) {
  bailey::PairDefinition def;
  try {
    def = bailey::load_pair_definition(config.definition);
  } catch (const bailey::DefinitionError& e) {
    err << config.definition << ": " << e.what() << "\n";
    return kExitUsage;
  }
  const std::size_t depth = config.depth.value_or(def.depth != 0 ? def.depth : 8);
  const std::size_t order = config.truncation.value_or(def.order != 0 ? def.order : 30);

  bailey::DefinitionOutcome outcome;
  if (config.command == Command::pair_chain) {
    const bailey::ChainParameters params{parse_monomial_flag(config.rho1, "--rho1"),
                                         parse_monomial_flag(config.rho2, "--rho2")};
    params.validate();
    outcome = bailey::verify_chained_definition(def, params, config.steps, depth, order);
  } else {
    outcome = bailey::verify_definition(def, depth, order);
  }

  const auto status = outcome.status();
  const auto* validated = outcome.validated();
  Sink sink(config, out);
  std::ostream& os = sink.report();
  switch (config.format) {
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["name"] = outcome.name;
      j["status"] = bailey::to_string(status);
      j["validated_a"] = validated ? nlohmann::ordered_json(validated->a_param) : nullptr;
      j["candidates"] = nlohmann::ordered_json::array();
      for (const auto& c : outcome.candidates) {
        nlohmann::ordered_json cj;
        cj["a_param"] = c.a_param;
        cj["status"] = bailey::to_string(c.report.status);
        cj["depth"] = c.report.depth;
        cj["algebra"] = c.report.algebra;
        if (c.report.mismatch_n && c.report.mismatch) {
          nlohmann::ordered_json m;
          m["n"] = *c.report.mismatch_n;
          m["power"] = c.report.mismatch->power ? nlohmann::ordered_json(*c.report.mismatch->power)
                                                : nullptr;
          m["expected"] = c.report.mismatch->expected;
          m["actual"] = c.report.mismatch->actual;
          cj["mismatch"] = m;
        } else {
          cj["mismatch"] = nullptr;
        }
        cj["vacuous"] = c.report.vacuous;
        j["candidates"].push_back(cj);
      }
      os << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      os << "a_param,status,mismatch_n,mismatch_power\n";
      for (const auto& c : outcome.candidates) {
        os << c.a_param << "," << bailey::to_string(c.report.status) << ",";
        if (c.report.mismatch_n) os << *c.report.mismatch_n;
        os << ",";
        if (c.report.mismatch && c.report.mismatch->power) os << *c.report.mismatch->power;
        os << "\n";
      }
      break;
    case OutputFormat::text:
      os << "pair " << outcome.name << ": " << bailey::to_string(status) << "\n";
      for (const auto& c : outcome.candidates) {
        os << "  a = " << c.a_param << ": " << c.report.summary() << "\n";
      }
      if (validated) os << "validated a = " << validated->a_param << "\n";
      break;
  }
  if (sink.separate()) out << "pair " << outcome.name << ": " << bailey::to_string(status) << "\n";
  return status_exit(status);
}

}  // namespace

ConstantPreset preset_for(ConstantName name) {
  switch (name) {
    case ConstantName::catalan: return {"mod4", "2", "G", false};
    case ConstantName::gamma: return {"trivial", "1", "gamma", true};
    case ConstantName::zeta2: return {"trivial", "2", "zeta(2)", false};
    case ConstantName::beta4: return {"mod4", "4", "beta(4)", false};
  }
  throw UsageError("unknown constant");
}

std::vector<Rational> gamma_delta_grid() {
  return {Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16)};
}

LValueResult compute_lvalue(const RunConfiguration& config, const std::atomic<bool>* cancel) {
  const auto ctx = context_for(config);
  const long bits = ctx.working_bits();
  const auto chi = weights::load_weight(config.weight);
  const Complex s = complex_from_literal(config.s, bits);
  const auto schedule = limits::geometric_schedule(config.n0, config.factor, config.count);
  const limits::ExtrapolationConfig accel{
      config.method.value_or(limits::ExtrapolationMethod::polynomial), config.order};
  LValueResult result{limits::outer_limit(chi, s, schedule, accel, ctx, options_for(config, cancel)),
                      Complex(ctx.precision_bits), Complex(ctx.precision_bits)};
  result.scaled = result.report.extrapolated;
  const Real sqrt_pi = qcore::sqrt(Real::pi(bits));
  result.unscaled = (result.scaled.rounded(bits) * sqrt_pi).rounded(ctx.precision_bits);
  return result;
}

GammaResult compute_gamma(const RunConfiguration& config, const std::atomic<bool>* cancel) {
  const auto ctx = context_for(config);
  const long bits = ctx.working_bits();
  const auto schedule = limits::geometric_schedule(config.n0, config.factor, config.count);
  const limits::ExtrapolationConfig accel{
      config.method.value_or(limits::ExtrapolationMethod::asymptotic), config.order};
  GammaResult result{limits::euler_mascheroni_regularized(gamma_delta_grid(), schedule, accel, ctx,
                                                          options_for(config, cancel)),
                     Complex(ctx.precision_bits), Complex(ctx.precision_bits)};
  result.scaled = result.report.extrapolated_gamma_over_sqrt_pi;
  const Real sqrt_pi = qcore::sqrt(Real::pi(bits));
  result.unscaled = (result.scaled.rounded(bits) * sqrt_pi).rounded(ctx.precision_bits);
  return result;
}

int run(const RunConfiguration& config, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* cancel) {
  try {
    config.validate();
    switch (config.command) {
      case Command::pair_verify:
      case Command::pair_chain: return cmd_pair(config, out, err);
      case Command::lvalue: return cmd_lvalue(config, out, err, cancel);
      case Command::table: return cmd_table(config, out, err, cancel);
      case Command::constant: return cmd_constant(config, out, err, cancel);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bzeta::cli
