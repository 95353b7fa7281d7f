#pragma once

#include <bzeta/limits/extrapolation.hpp>
#include <bzeta/qcore/real.hpp>
#include <bzeta/weights/weight.hpp>

#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bzeta::limits {

using qcore::PrecisionContext;
using qcore::Rational;
using weights::ArithmeticWeight;

struct ConvergenceRecord {
  std::size_t n = 0;
  Complex approximant;
  /// Extrapolation over the records so far, order min(k, order); the first
  /// record uses |A_n| itself.
  Real error_estimate;
  double elapsed_ms = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRecord> records;
  Complex extrapolated;
  Real error_estimate;
  std::string method;
  std::optional<Complex> target_hint;
  /// Set when a cancellation request stopped the run; records then hold the
  /// completed prefix and extrapolated is left at zero.
  bool interrupted = false;
};

struct OuterOptions {
  /// Worker threads for schedule points; 0 means one per hardware thread.
  unsigned threads = 1;
  /// Report elapsed_ms as 0 so the output is a pure function of the inputs.
  bool record_timing = true;
  /// Called in schedule order as soon as each record is final.
  std::function<void(const ConvergenceRecord&)> on_record;
  const std::atomic<bool>* cancel = nullptr;
};

/// Geometric schedule n0, n0*factor, ...; throws std::invalid_argument on
/// n0 = 0, factor < 2 or overflow.
std::vector<std::size_t> geometric_schedule(std::size_t n0, std::size_t factor, std::size_t count);

/// A_n over the schedule, extrapolated to n -> infinity in h = n^(-1/2).
/// The limit is L(s,chi)/sqrt(pi). Throws std::domain_error for Re(s) <= 1 and
/// std::invalid_argument for a schedule that is not strictly increasing or
/// shorter than order+1.
ConvergenceReport outer_limit(const ArithmeticWeight& chi, const Complex& s,
                              const std::vector<std::size_t>& schedule,
                              const ExtrapolationConfig& accel, const PrecisionContext& ctx,
                              const OuterOptions& options = {});

struct RegularizationReport {
  std::vector<Rational> delta_grid;
  std::vector<ConvergenceReport> runs;
  std::vector<Complex> raw;
  /// raw - 1/(sqrt(pi) delta)
  std::vector<Complex> subtracted;
  Complex extrapolated_gamma_over_sqrt_pi;
  /// Difference between the full and the next lower order delta-extrapolation.
  Real error_estimate;
  bool interrupted = false;
};

/// Failure of one delta on the regularization path.
class RegularizationError : public std::runtime_error {
 public:
  RegularizationError(const Rational& delta, const std::string& what);
  const Rational& delta() const { return delta_; }

 private:
  Rational delta_;
};

/// Runs outer_limit at s = 1+delta with the trivial weight for each delta,
/// subtracts the pole 1/(sqrt(pi) delta) and extrapolates delta -> 0 with a
/// polynomial through all points. Throws std::invalid_argument unless the
/// grid is strictly decreasing, positive and has at least two points.
RegularizationReport euler_mascheroni_regularized(const std::vector<Rational>& delta_grid,
                                                  const std::vector<std::size_t>& schedule,
                                                  const ExtrapolationConfig& accel,
                                                  const PrecisionContext& ctx,
                                                  const OuterOptions& options = {});

}  // namespace bzeta::limits
