#pragma once

#include <bzeta/cli/config.hpp>
#include <bzeta/limits/outer.hpp>

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace bzeta::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitMismatch = 2,
  kExitInconclusive = 3,
  kExitTolerance = 4,
  kExitInterrupted = 130,
};

/// Pipeline settings a preset constant stands for.
struct ConstantPreset {
  std::string weight;
  std::string s;
  /// Symbol used in text output, e.g. "G".
  std::string symbol;
  bool regularized = false;
};

ConstantPreset preset_for(ConstantName name);

/// Delta grid of the regularized gamma path: 1/2, 1/4, 1/8, 1/16.
std::vector<Rational> gamma_delta_grid();

struct LValueResult {
  limits::ConvergenceReport report;
  /// L(s,chi)/sqrt(pi) and L(s,chi).
  qcore::Complex scaled;
  qcore::Complex unscaled;
};

/// The shared lvalue pipeline; the constant presets call it unchanged.
LValueResult compute_lvalue(const RunConfiguration& config, const std::atomic<bool>* cancel);

struct GammaResult {
  limits::RegularizationReport report;
  qcore::Complex scaled;
  qcore::Complex unscaled;
};

GammaResult compute_gamma(const RunConfiguration& config, const std::atomic<bool>* cancel);

/// Executes a validated or unvalidated configuration. Reports go to `out`
/// (or to config.out, with a text summary on `out`), diagnostics to `err`.
/// Returns one of the ExitCode values; never throws.
int run(const RunConfiguration& config, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* cancel = nullptr);

}  // namespace bzeta::cli
