#include <bzeta/limits/outer.hpp>

#include <bzeta/limits/binomial_sums.hpp>

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace bzeta::limits {

namespace {

enum class SlotState { pending, done, skipped, failed };

struct Slot {
  SlotState state = SlotState::pending;
  std::optional<Complex> value;
  double elapsed_ms = 0.0;
  std::exception_ptr error;
};

void validate_schedule(const std::vector<std::size_t>& schedule, std::size_t order) {
  if (schedule.empty()) throw std::invalid_argument("schedule is empty");
  if (schedule.front() == 0) throw std::invalid_argument("schedule points must be >= 1");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i] <= schedule[i - 1]) {
      throw std::invalid_argument("schedule must be strictly increasing");
    }
  }
  if (schedule.size() < order + 1) {
    throw std::invalid_argument("schedule has " + std::to_string(schedule.size()) +
                                " points; extrapolation order " + std::to_string(order) +
                                " needs at least " + std::to_string(order + 1));
  }
}

bool cancelled(const OuterOptions& options) {
  return options.cancel != nullptr && options.cancel->load(std::memory_order_relaxed);
}

}  // namespace

std::vector<std::size_t> geometric_schedule(std::size_t n0, std::size_t factor, std::size_t count) {
  if (n0 == 0) throw std::invalid_argument("n0 must be >= 1");
  if (factor < 2) throw std::invalid_argument("factor must be >= 2");
  std::vector<std::size_t> out;
  std::size_t n = n0;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(n);
    if (k + 1 < count) {
      if (n > std::numeric_limits<std::size_t>::max() / factor) {
        throw std::invalid_argument("schedule overflows");
      }
      n *= factor;
    }
  }
  return out;
}

ConvergenceReport outer_limit(const ArithmeticWeight& chi, const Complex& s,
                              const std::vector<std::size_t>& schedule,
                              const ExtrapolationConfig& accel, const PrecisionContext& ctx,
                              const OuterOptions& options) {
  ctx.validate();
  if (s.re <= Real(1, s.re.precision())) throw std::domain_error("outer limit requires Re(s) > 1");
  validate_schedule(schedule, accel.order);

  const long work = ctx.working_bits();
  const bool has_pole = !chi.mean().is_zero();
  std::vector<Slot> slots(schedule.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= schedule.size()) return;
      Slot result;
      if (cancelled(options)) {
        result.state = SlotState::skipped;
      } else {
        try {
          const auto start = std::chrono::steady_clock::now();
          result.value = a_n(chi, s, schedule[i], ctx);
          const std::chrono::duration<double, std::milli> spent =
              std::chrono::steady_clock::now() - start;
          result.elapsed_ms = options.record_timing ? spent.count() : 0.0;
          result.state = SlotState::done;
        } catch (...) {
          result.error = std::current_exception();
          result.state = SlotState::failed;
        }
      }
      {
        std::lock_guard lock(mutex);
        slots[i] = std::move(result);
      }
      ready.notify_all();
    }
  };

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, schedule.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  struct Joiner {
    std::vector<std::thread>& pool;
    ~Joiner() {
      for (auto& t : pool) t.join();
    }
  } joiner{pool};

  ConvergenceReport report;
  report.method = describe(accel);
  report.extrapolated = Complex(ctx.precision_bits);
  report.error_estimate = Real(ctx.precision_bits);
  std::vector<std::size_t> ns;
  std::vector<Complex> values;
  std::exception_ptr failure;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    Slot slot;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return slots[k].state != SlotState::pending; });
      slot = std::move(slots[k]);
    }
    if (slot.state == SlotState::failed) {
      failure = slot.error;
      break;
    }
    if (slot.state == SlotState::skipped) {
      report.interrupted = true;
      break;
    }
    ns.push_back(schedule[k]);
    values.push_back(*slot.value);

    Real error(ctx.precision_bits);
    if (k == 0) {
      error = qcore::abs(values.front());
    } else {
      const ExtrapolationConfig prefix{accel.method, std::min(k, accel.order)};
      error = extrapolate(prefix, ns, values, s, has_pole, work).error_estimate;
    }
    ConvergenceRecord record{schedule[k], std::move(*slot.value),
                             error.rounded(ctx.precision_bits), slot.elapsed_ms};
    if (options.on_record) options.on_record(record);
    report.records.push_back(std::move(record));
  }
  if (failure) {
    // Drain the remaining workers before rethrowing.
    next.store(schedule.size());
    std::rethrow_exception(failure);
  }
  if (report.interrupted) return report;

  const auto result = extrapolate(accel, ns, values, s, has_pole, work);
  report.extrapolated = result.value.rounded(ctx.precision_bits);
  report.error_estimate = result.error_estimate.rounded(ctx.precision_bits);
  return report;
}

RegularizationError::RegularizationError(const Rational& delta, const std::string& what)
    : std::runtime_error("regularization failed at delta = " + qcore::to_string(delta) + ": " +
                         what),
      delta_(delta) {}

RegularizationReport euler_mascheroni_regularized(const std::vector<Rational>& delta_grid,
                                                  const std::vector<std::size_t>& schedule,
                                                  const ExtrapolationConfig& accel,
                                                  const PrecisionContext& ctx,
                                                  const OuterOptions& options) {
  ctx.validate();
  if (delta_grid.size() < 2) throw std::invalid_argument("delta grid needs at least two points");
  for (std::size_t i = 0; i < delta_grid.size(); ++i) {
    if (delta_grid[i] <= 0) throw std::invalid_argument("delta values must be positive");
    if (i > 0 && !(delta_grid[i] < delta_grid[i - 1])) {
      throw std::invalid_argument("delta grid must be strictly decreasing");
    }
  }

  const long work = ctx.working_bits();
  const Real sqrt_pi = qcore::sqrt(Real::pi(work));
  const auto trivial = ArithmeticWeight::trivial();
  RegularizationReport report;
  report.extrapolated_gamma_over_sqrt_pi = Complex(ctx.precision_bits);
  report.error_estimate = Real(ctx.precision_bits);
  std::vector<Real> deltas;
  for (const auto& delta : delta_grid) {
    const Complex s = Complex::from_real(Real(Rational(1) + delta, work));
    ConvergenceReport run;
    try {
      run = outer_limit(trivial, s, schedule, accel, ctx, options);
    } catch (const std::exception& e) {
      throw RegularizationError(delta, e.what());
    }
    if (run.interrupted) {
      report.interrupted = true;
      report.runs.push_back(std::move(run));
      return report;
    }
    const Real pole = Real(1, work) / (sqrt_pi * Real(delta, work));
    Complex subtracted = run.extrapolated.rounded(work);
    subtracted.re -= pole;
    report.delta_grid.push_back(delta);
    report.raw.push_back(run.extrapolated);
    report.subtracted.push_back(subtracted.rounded(ctx.precision_bits));
    report.runs.push_back(std::move(run));
    deltas.push_back(Real(delta, work));
  }

  const auto result = neville_at_zero(deltas, report.subtracted, deltas.size() - 1, work);
  report.extrapolated_gamma_over_sqrt_pi = result.value.rounded(ctx.precision_bits);
  report.error_estimate = result.error_estimate.rounded(ctx.precision_bits);
  return report;
}

}  // namespace bzeta::limits
