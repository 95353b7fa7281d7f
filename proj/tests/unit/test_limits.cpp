#include <bzeta/limits/binomial_sums.hpp>
#include <bzeta/limits/extrapolation.hpp>
#include <bzeta/limits/finite_q.hpp>
#include <bzeta/limits/outer.hpp>
#include <bzeta/limits/report_io.hpp>
#include <bzeta/qcore/combinatorics.hpp>
#include <bzeta/qcore/pochhammer.hpp>

#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"

using namespace bzeta::limits;
using bzeta::qcore::Complex;
using bzeta::qcore::Real;

namespace {

Complex real_s(long v, long bits) { return Complex::from_real(Real(v, bits)); }

Rational one_minus_ten_to(long k) {
  Rational step(1, 1);
  for (long i = 0; i < k; ++i) step /= 10;
  return 1 - step;
}

const std::vector<std::size_t> kSchedule = geometric_schedule(64, 2, 7);

// zeta(s) for complex s from the alternating series.
Complex zeta_oracle(const Complex& s, long bits) {
  const Complex eta = oracle::dirichlet_eta(s, bits);
  const Complex one_minus_s{Real(1, bits) - s.re, -s.im};
  Complex factor = -oracle::pow_positive(Real(2, bits), one_minus_s);
  factor.re += Real(1, bits);
  return eta / factor;
}

}  // namespace

TEST_CASE("alpha at q = 1 and its pointwise limit") {
  PrecisionContext ctx;
  const AlphaFamily fam{ArithmeticWeight::mod4(), real_s(2, 256)};
  CHECK(alpha_zeta(fam, 3, Rational(1), ctx).re == Real(Rational(-1, 9), ctx.precision_bits));
  CHECK(alpha_zeta(fam, 4, Rational(1), ctx).is_zero());
  // [2]_{1/2}^-2 = (3/2)^-2
  CHECK(alpha_zeta(fam, 1, Rational(1, 2), ctx).re == Real(1, 64));
  const AlphaFamily triv{ArithmeticWeight::trivial(), real_s(2, 256)};
  CHECK(alpha_zeta(triv, 2, Rational(1, 2), ctx).re == Real(Rational(4, 9), ctx.precision_bits));
  double previous = 1.0;
  for (long k = 1; k <= 6; ++k) {
    const double gap =
        bzeta::qcore::abs(alpha_zeta(triv, 7, one_minus_ten_to(k), ctx) - alpha_zeta(triv, 7, Rational(1), ctx))
            .to_double();
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK_THROWS_AS(alpha_zeta(triv, 1, Rational(0), ctx), std::invalid_argument);
  CHECK_THROWS_AS(alpha_zeta(triv, 1, Rational(3, 2), ctx), std::invalid_argument);
}

TEST_CASE("complex alpha uses the principal branch") {
  PrecisionContext ctx;
  const long bits = ctx.working_bits();
  const Complex s{Real(2, bits), Real(1, bits)};
  const AlphaFamily fam{ArithmeticWeight::trivial(), s};
  const Complex got = alpha_zeta(fam, 3, Rational(1, 2), ctx);
  const Complex expected = oracle::pow_positive(Real(Rational(7, 4), bits), -s);
  CHECK(oracle::relative_error(got, expected) < 1e-55);
}

TEST_CASE("beta_n matches an exact rational evaluation") {
  PrecisionContext ctx;
  const Rational q(2, 3);
  const AlphaFamily fam{ArithmeticWeight::alternating(), real_s(2, 256)};
  for (std::size_t n = 1; n <= 6; ++n) {
    Rational exact(0);
    for (std::size_t r = 1; r <= n; ++r) {
      const Rational chi = r % 2 == 1 ? 1 : -1;
      const Rational qr = bzeta::qcore::pow(q, static_cast<std::int64_t>(r));
      const Rational bracket = bzeta::qcore::q_integer(r, q);
      exact += qr * chi / (bracket * bracket * bzeta::qcore::q_pochhammer(q, q, n - r) *
                           bzeta::qcore::q_pochhammer(q, q, n + r));
    }
    const Complex got = beta_n(fam, n, q, ctx);
    CHECK(bzeta::qcore::ulp_distance(got.re, Real(exact, ctx.precision_bits), ctx.precision_bits) <= 1.0);
    CHECK(got.im.is_zero());
  }
}

TEST_CASE("T_n is the binomially rescaled beta") {
  PrecisionContext ctx;
  const long bits = ctx.working_bits();
  const AlphaFamily fam{ArithmeticWeight::trivial(), real_s(3, bits)};
  const Rational q(9, 10);
  for (std::size_t n = 1; n <= 5; ++n) {
    const Complex scaled = scaled_beta_n(fam, n, q, ctx);
    const Real factor = bzeta::qcore::sqrt(Real(static_cast<long>(n), bits)) *
                        Real(bzeta::qcore::factorial(2 * n), bits) /
                        bzeta::qcore::exp2i(2 * static_cast<std::int64_t>(n), bits);
    CHECK(oracle::relative_error(t_n(fam, n, q, ctx), scaled * factor) < 1e-50);
  }
}

TEST_CASE("inner limit: numeric q path approaches the closed form") {
  PrecisionContext ctx;
  const AlphaFamily fam{ArithmeticWeight::trivial(), real_s(2, 256)};
  std::vector<Rational> grid;
  for (long k = 2; k <= 6; ++k) grid.push_back(one_minus_ten_to(k));
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto rows = inner_limit_numeric(fam, n, grid, ctx);
    REQUIRE(rows.size() == grid.size());
    CHECK(strictly_decreasing(rows));
    CHECK(rows.back().deviation.to_double() < 1e-4);
  }
  CHECK_THROWS_AS(inner_limit_numeric(fam, 1, {}, ctx), std::invalid_argument);
}

TEST_CASE("inner limit closed form at n = 1") {
  // L_1 = chi(1) / (0! 2!)
  PrecisionContext ctx;
  const auto value = inner_limit_exact(ArithmeticWeight::trivial(), real_s(2, 256), 1, ctx);
  CHECK(value.re == Real(Rational(1, 2), 64));
}

TEST_CASE("A_n small values") {
  PrecisionContext ctx;
  const long bits = ctx.precision_bits;
  CHECK(a_n(ArithmeticWeight::trivial(), real_s(2, bits), 1, ctx).re == Real(Rational(1, 4), 64));
  // sqrt(2)/16 (C(4,3) + C(4,4)/4)
  const Real a2 = bzeta::qcore::sqrt(Real(2, bits + 64)) * Real(Rational(17, 64), bits + 64);
  CHECK(bzeta::qcore::ulp_distance(a_n(ArithmeticWeight::trivial(), real_s(2, bits), 2, ctx).re,
                                   a2.rounded(bits), bits) <= 1.0);
  CHECK_THROWS_AS(a_n(ArithmeticWeight::trivial(), real_s(2, bits), 0, ctx), std::invalid_argument);
}

TEST_CASE("binomial route and factorial route agree") {
  PrecisionContext ctx;
  ctx.precision_bits = 128;
  const long bits = ctx.precision_bits;
  const Complex exponents[] = {real_s(2, bits), real_s(3, bits), Complex{Real(2, bits), Real(1, bits)}};
  for (const auto& chi : {ArithmeticWeight::trivial(), ArithmeticWeight::alternating(), ArithmeticWeight::mod4()}) {
    for (const auto& s : exponents) {
      for (std::size_t n : {1u, 2u, 7u, 33u, 100u}) {
        const Complex x = a_n(chi, s, n, ctx);
        const Complex y = scaled_inner_limit(chi, s, n, ctx);
        CHECK(bzeta::qcore::ulp_distance(x.re, y.re, bits) <= 2.0);
        CHECK(bzeta::qcore::ulp_distance(x.im, y.im, bits) <= 2.0);
      }
    }
  }
}

TEST_CASE("A_n is linear in the weight") {
  gen::Source rng(606);
  PrecisionContext ctx;
  const long bits = ctx.precision_bits;
  for (int trial = 0; trial < 6; ++trial) {
    const auto a = rng.weight();
    const auto b = rng.weight();
    const auto n = static_cast<std::size_t>(rng.integer(1, 200));
    const Complex s = real_s(rng.integer(2, 4), bits);
    const Complex lhs = a_n(a + b, s, n, ctx);
    const Complex rhs = a_n(a, s, n, ctx) + a_n(b, s, n, ctx);
    // both sides are rounded sums, so compare on the scale of the terms
    const Real scale = bzeta::qcore::abs(a_n(ArithmeticWeight::trivial(), s, n, ctx));
    CHECK((bzeta::qcore::abs(lhs - rhs) / scale).to_double() < 1e-50);
  }
}

TEST_CASE("central binomial domination") {
  PrecisionContext ctx;
  double max_weight = 0.0;
  double previous = 0.0;
  for (std::size_t n = 1; n <= 256; ++n) {
    const double central = binomial_weight(n, 0, ctx).to_double();
    CHECK(central >= previous);
    previous = central;
    max_weight = std::max(max_weight, central);
    for (std::size_t r = 1; r <= n; r += (n / 16) + 1) {
      CHECK(binomial_weight(n, r, ctx) <= binomial_weight(n, 0, ctx));
    }
  }
  MESSAGE("observed max of sqrt(n) C(2n,n)/4^n for n <= 256: " << max_weight);
  CHECK(max_weight <= 0.57);
}

TEST_CASE("fixed-r binomial weights approach 1/sqrt(pi)") {
  PrecisionContext ctx;
  const Real limit = Real(1, 256) / oracle::sqrt_pi(256);
  for (std::size_t r : {1u, 2u, 5u}) {
    double previous = 1.0;
    for (std::size_t n : {100u, 1000u, 10000u}) {
      const double gap = bzeta::qcore::abs(binomial_weight(n, r, ctx) - limit).to_double();
      CHECK(gap < previous);
      previous = gap;
    }
    CHECK(previous < 1e-2);
  }
}

TEST_CASE("Neville reproduces polynomials in h") {
  const long bits = 192;
  std::vector<Real> x;
  std::vector<Complex> y;
  for (long k = 1; k <= 6; ++k) {
    const Real h = Real(1, bits) / Real(k, bits);
    x.push_back(h);
    // 3 - 2h + 5h^3
    y.push_back(Complex::from_real(Real(3, bits) - Real(2, bits) * h + Real(5, bits) * h * h * h));
  }
  const auto result = neville_at_zero(x, y, 5, bits);
  CHECK(bzeta::qcore::abs(result.value - Complex::from_real(Real(3, bits))).to_double() < 1e-50);
  CHECK(result.error_estimate.to_double() < 1e-50);
  CHECK_THROWS_AS(neville_at_zero(x, y, 6, bits), std::invalid_argument);
}

TEST_CASE("asymptotic fit recovers a known expansion") {
  const long bits = 192;
  const Complex s = real_s(3, bits);
  const auto terms = asymptotic_terms(s, true, 5, bits);
  REQUIRE(terms.size() == 5);
  // s = 3 with a pole: h^2 appears twice, the second with a log factor.
  CHECK(terms[0].exponent.re == Real(2, 64));
  CHECK(terms[0].log_power == 0);
  CHECK(terms[1].exponent.re == Real(2, 64));
  CHECK(terms[1].log_power == 1);
  std::vector<Real> h;
  std::vector<Complex> y;
  for (long k = 0; k < 6; ++k) {
    const Real hk = Real(1, bits) / bzeta::qcore::sqrt(Real(64L << k, bits));
    h.push_back(hk);
    const Real h2 = hk * hk;
    y.push_back(Complex::from_real(Real(1, bits) + Real(2, bits) * h2 +
                                   Real(7, bits) * h2 * bzeta::qcore::log(hk) - h2 * h2));
  }
  const auto fit = fit_at_zero(h, y, terms, bits);
  CHECK(bzeta::qcore::abs(fit.value - Complex::from_real(Real(1, bits))).to_double() < 1e-40);
}

TEST_CASE("extrapolation method names") {
  CHECK(parse_extrapolation_method("asymptotic") == ExtrapolationMethod::asymptotic);
  CHECK(to_string(ExtrapolationMethod::polynomial) == "polynomial");
  CHECK_THROWS_AS(parse_extrapolation_method("spline"), std::invalid_argument);
  CHECK(describe(ExtrapolationConfig{}).find("6") != std::string::npos);
}

TEST_CASE("geometric schedule") {
  CHECK(kSchedule == std::vector<std::size_t>{64, 128, 256, 512, 1024, 2048, 4096});
  CHECK_THROWS_AS(geometric_schedule(0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(geometric_schedule(1, 1, 3), std::invalid_argument);
}

TEST_CASE("outer limit argument checks") {
  PrecisionContext ctx;
  const ExtrapolationConfig accel;
  const auto chi = ArithmeticWeight::trivial();
  CHECK_THROWS_AS(outer_limit(chi, real_s(1, 256), kSchedule, accel, ctx), std::domain_error);
  CHECK_THROWS_AS(outer_limit(chi, real_s(2, 256), {}, accel, ctx), std::invalid_argument);
  CHECK_THROWS_AS(outer_limit(chi, real_s(2, 256), {1, 2, 3}, accel, ctx), std::invalid_argument);
  CHECK_THROWS_AS(outer_limit(chi, real_s(2, 256), {8, 4, 16, 32, 64, 128, 256}, accel, ctx),
                  std::invalid_argument);
}

TEST_CASE("outer limit: zeta(2), records and determinism across threads") {
  PrecisionContext ctx;
  const long bits = ctx.precision_bits;
  OuterOptions options;
  options.record_timing = false;
  const auto report = outer_limit(ArithmeticWeight::trivial(), real_s(2, bits), kSchedule, {}, ctx, options);
  REQUIRE(report.records.size() == kSchedule.size());
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    CHECK(report.records[i].n == kSchedule[i]);
    CHECK(report.records[i].error_estimate.sign() >= 0);
    CHECK(report.records[i].elapsed_ms == 0.0);
  }
  const Real pi = oracle::pi(bits);
  const Real target = pi * pi / (Real(6, bits) * oracle::sqrt_pi(bits));
  CHECK(oracle::relative_error(report.extrapolated.re, target) < 1e-8);
  CHECK(report.extrapolated.im.is_zero());

  options.threads = 3;
  std::vector<std::size_t> seen;
  options.on_record = [&seen](const ConvergenceRecord& r) { seen.push_back(r.n); };
  const auto threaded = outer_limit(ArithmeticWeight::trivial(), real_s(2, bits), kSchedule, {}, ctx, options);
  CHECK(seen == kSchedule);
  CHECK(to_json(threaded, 40).dump() == to_json(report, 40).dump());
}

TEST_CASE("outer limit: alternating s = 3 and complex s") {
  PrecisionContext ctx;
  const long bits = ctx.precision_bits;
  const Real sqrt_pi = oracle::sqrt_pi(bits);
  const auto alt = outer_limit(ArithmeticWeight::alternating(), real_s(3, bits), kSchedule, {}, ctx);
  const Real eta3 = Real(Rational(3, 4), bits) * oracle::zeta(Real(3, bits), bits) / sqrt_pi;
  CHECK(oracle::relative_error(alt.extrapolated.re, eta3) < 1e-8);

  // The pole term h^(1+i) is outside the polynomial model; its error estimate says so.
  const Complex s{Real(2, bits), Real(1, bits)};
  const Complex target = zeta_oracle(s, bits) / sqrt_pi;
  const auto poly = outer_limit(ArithmeticWeight::trivial(), s, kSchedule, {}, ctx);
  CHECK(poly.error_estimate.to_double() > 1e-5);
  const ExtrapolationConfig asymptotic{ExtrapolationMethod::asymptotic, 6};
  const auto fit = outer_limit(ArithmeticWeight::trivial(), s, kSchedule, asymptotic, ctx);
  CHECK(oracle::relative_error(fit.extrapolated, target) < 1e-8);
  CHECK(bzeta::qcore::abs(fit.extrapolated - target) <= fit.error_estimate);
  // Without a pole both methods work.
  const auto mod4 = outer_limit(ArithmeticWeight::mod4(), s, kSchedule, {}, ctx);
  CHECK(oracle::relative_error(mod4.extrapolated, oracle::dirichlet_beta(s, bits) / sqrt_pi) < 1e-8);
}

TEST_CASE("eta relation after extrapolation") {
  PrecisionContext ctx;
  const long bits = ctx.precision_bits;
  const auto alt = outer_limit(ArithmeticWeight::alternating(), real_s(2, bits), kSchedule, {}, ctx);
  const auto triv = outer_limit(ArithmeticWeight::trivial(), real_s(2, bits), kSchedule, {}, ctx);
  const Complex scaled = triv.extrapolated * Real(Rational(1, 2), bits);
  CHECK(bzeta::qcore::abs(alt.extrapolated - scaled) <= alt.error_estimate + triv.error_estimate);
}

TEST_CASE("a preset cancel flag interrupts the run") {
  PrecisionContext ctx;
  std::atomic<bool> cancel{true};
  OuterOptions options;
  options.cancel = &cancel;
  const auto report = outer_limit(ArithmeticWeight::trivial(), real_s(2, 192), kSchedule, {}, ctx, options);
  CHECK(report.interrupted);
  CHECK(report.records.empty());
}

TEST_CASE("regularized path near s = 1") {
  PrecisionContext ctx;
  const std::vector<Rational> grid = {Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16)};
  const ExtrapolationConfig accel{ExtrapolationMethod::asymptotic, 6};
  const auto report = euler_mascheroni_regularized(grid, kSchedule, accel, ctx);
  REQUIRE(report.raw.size() == grid.size());
  const long bits = ctx.precision_bits;
  const Real sqrt_pi = oracle::sqrt_pi(bits);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Real pole = Real(1, bits) / (sqrt_pi * Real(grid[i], bits));
    CHECK(report.raw[i].re > Real(Rational(9, 10), bits) * pole);
    CHECK(bzeta::qcore::abs(report.subtracted[i]).to_double() < 1.0);
  }
  const Real target = oracle::euler_gamma(bits) / sqrt_pi;
  CHECK(oracle::relative_error(report.extrapolated_gamma_over_sqrt_pi.re, target) < 1e-2);

  // At delta = 1 the raw value is zeta(2)/sqrt(pi).
  const std::vector<Rational> wide = {Rational(1), Rational(1, 2)};
  const auto first = euler_mascheroni_regularized(wide, kSchedule, {}, ctx);
  const Real pi = oracle::pi(bits);
  const Real zeta2 = pi * pi / Real(6, bits);
  CHECK(oracle::relative_error(first.raw[0].re, zeta2 / sqrt_pi) < 1e-8);
  CHECK(oracle::relative_error(first.subtracted[0].re, (zeta2 - Real(1, bits)) / sqrt_pi) < 1e-7);

  const std::vector<Rational> rising = {Rational(1, 4), Rational(1, 2)};
  CHECK_THROWS_AS(euler_mascheroni_regularized(rising, kSchedule, {}, ctx), std::invalid_argument);
  const std::vector<Rational> single = {Rational(1, 4)};
  CHECK_THROWS_AS(euler_mascheroni_regularized(single, kSchedule, {}, ctx), std::invalid_argument);
}

TEST_CASE("hypothesis bound is a diagnostic only") {
  PrecisionContext ctx;
  const AlphaFamily fam{ArithmeticWeight::trivial(), real_s(2, 256)};
  const std::vector<Rational> grid = {Rational(1, 2), Rational(9, 10), Rational(99, 100)};
  // [r]_q <= r means |alpha_r| >= r^-2, so any sigma > 2 fails for large r.
  const auto strict = hypothesis_bound_diagnostic(fam, 2.5, 1.0, 200, grid, ctx);
  CHECK_FALSE(strict.holds_on_sample());
  CHECK(strict.samples.size() == grid.size());
  const auto at_q1 = hypothesis_bound_diagnostic(fam, 2.0, 1.0, 200, std::vector<Rational>{Rational(1)}, ctx);
  CHECK(at_q1.holds_on_sample());
  CHECK_THROWS_AS(hypothesis_bound_diagnostic(fam, -1.0, 1.0, 10, grid, ctx), std::invalid_argument);
  CHECK_THROWS_AS(hypothesis_bound_diagnostic(fam, 2.0, 1.0, 10, {}, ctx), std::invalid_argument);
}

TEST_CASE("report serialization") {
  PrecisionContext ctx;
  OuterOptions options;
  options.record_timing = false;
  const auto report = outer_limit(ArithmeticWeight::mod4(), real_s(2, 192), kSchedule, {}, ctx, options);
  const auto j = to_json(report, 60);
  REQUIRE(j["records"].size() == kSchedule.size());
  for (const char* key : {"n", "re", "im", "err_est", "elapsed_ms"}) CHECK(j["records"][0].contains(key));
  CHECK(j["extrapolated"].contains("re"));
  CHECK(j["method"].is_string());
  const auto back = report_from_json(nlohmann::json::parse(j.dump()), 192);
  CHECK(to_json(back, 60).dump() == j.dump());

  const std::string csv = to_csv(report, 20);
  CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  CHECK(csv.find("extrapolated,") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(kSchedule.size() + 2));
}
