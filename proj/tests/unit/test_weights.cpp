#include <bzeta/weights/l_series.hpp>
#include <bzeta/weights/weight.hpp>

#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"

#include <filesystem>

using namespace bzeta::weights;
using bzeta::qcore::Complex;
using bzeta::qcore::PrecisionContext;
using bzeta::qcore::Real;

namespace {

GaussianRational real_value(long v) { return {Rational(v), Rational(0)}; }

Complex real_s(long v, long bits) { return Complex::from_real(Real(v, bits)); }

}  // namespace

TEST_CASE("shipped weights take the documented values") {
  const auto mod4 = ArithmeticWeight::mod4();
  CHECK(mod4.evaluate(3) == real_value(-1));
  CHECK(mod4.evaluate(6) == real_value(0));
  CHECK(mod4.evaluate(1) == real_value(1));
  CHECK(mod4.evaluate(5) == real_value(1));
  const auto alt = ArithmeticWeight::alternating();
  CHECK(alt.evaluate(4) == real_value(-1));
  CHECK(alt.evaluate(7) == real_value(1));
  CHECK(ArithmeticWeight::trivial().evaluate(12345) == real_value(1));
  CHECK_THROWS_AS(mod4.evaluate(0), std::invalid_argument);
}

TEST_CASE("periodicity and boundedness") {
  gen::Source rng(8);
  std::vector<ArithmeticWeight> weights = {ArithmeticWeight::trivial(), ArithmeticWeight::alternating(),
                                           ArithmeticWeight::mod4()};
  for (int i = 0; i < 5; ++i) weights.push_back(rng.weight());
  for (const auto& chi : weights) {
    for (std::size_t r = 1; r <= 10 * chi.period(); ++r) {
      CHECK(chi.evaluate(r) == chi.evaluate(r + chi.period()));
    }
    Rational max_norm(0);
    for (std::size_t r = 1; r <= 10000; ++r) max_norm = std::max(max_norm, chi.evaluate(r).norm());
    CHECK(max_norm == chi.bound_squared());
  }
  CHECK(ArithmeticWeight::mod4().bound() == 1.0);
}

TEST_CASE("the mod 4 character is multiplicative on odd arguments") {
  const auto chi = ArithmeticWeight::mod4();
  for (std::size_t m = 1; m <= 100; m += 2) {
    for (std::size_t n = 1; m * n <= 100; n += 2) {
      CHECK(chi.evaluate(m * n) == chi.evaluate(m) * chi.evaluate(n));
    }
  }
}

TEST_CASE("sum of weights is pointwise") {
  gen::Source rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = rng.weight();
    const auto b = rng.weight();
    const auto c = a + b;
    for (std::size_t r = 1; r <= 60; ++r) CHECK(c.evaluate(r) == a.evaluate(r) + b.evaluate(r));
  }
}

TEST_CASE("means") {
  CHECK(ArithmeticWeight::trivial().mean() == real_value(1));
  CHECK(ArithmeticWeight::mod4().mean() == real_value(0));
  CHECK(ArithmeticWeight::alternating().mean() == real_value(0));
}

TEST_CASE("weight JSON descriptors") {
  const auto mod4 = ArithmeticWeight::mod4();
  const auto round = weight_from_json(to_json(mod4));
  CHECK(round.values() == mod4.values());
  const auto custom = load_weight(std::string(BZETA_FIXTURE_DIR) + "/mod4_custom.json");
  CHECK(custom.values() == mod4.values());
  CHECK(custom.kind() == WeightKind::periodic);
  CHECK(load_weight("alternating").kind() == WeightKind::alternating);
  CHECK_THROWS_AS(load_weight("no-such-weight"), std::invalid_argument);
  CHECK_THROWS_AS(weight_from_json(nlohmann::json::parse(R"({"kind":"periodic","period":3,"values":[[1,0]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(weight_from_json(nlohmann::json::parse(R"({"kind":"periodic","values":[]})")),
                  std::invalid_argument);
  const auto fractional =
      weight_from_json(nlohmann::json::parse(R"({"kind":"periodic","values":[["1/2",0],[0,"-3/4"]]})"));
  CHECK(fractional.evaluate(2) == GaussianRational{Rational(0), Rational(-3, 4)});
}

TEST_CASE("partial L-series: single term") {
  PrecisionContext ctx;
  const auto one = partial_l_series(ArithmeticWeight::trivial(), real_s(2, 256), 1, ctx);
  CHECK(one.value.re == Real(1, 64));
  CHECK(one.value.im.is_zero());
  CHECK(one.tail_bound == Real(1, 64));
}

TEST_CASE("partial L-series approaches zeta(2) within the tail bound") {
  PrecisionContext ctx;
  const long bits = ctx.working_bits();
  const Real pi = oracle::pi(bits);
  const Real zeta2 = pi * pi / Real(6, bits);
  const auto partial = partial_l_series(ArithmeticWeight::trivial(), real_s(2, bits), 1000000, ctx);
  const double gap = bzeta::qcore::abs(partial.value.re - zeta2).to_double();
  CHECK(gap <= partial.tail_bound.to_double() + 1e-30);
  CHECK(gap < 1e-6 + 1e-30);
}

TEST_CASE("mod 4 partial sums approach Catalan's constant") {
  PrecisionContext ctx;
  const long bits = ctx.working_bits();
  const Real catalan = oracle::dirichlet_beta(real_s(2, bits), bits).re;
  double previous = 1.0;
  for (std::size_t cutoff : {100u, 1000u, 10000u}) {
    const auto partial = partial_l_series(ArithmeticWeight::mod4(), real_s(2, bits), cutoff, ctx);
    const double gap = bzeta::qcore::abs(partial.value.re - catalan).to_double();
    CHECK(gap < previous);
    CHECK(gap <= partial.tail_bound.to_double());
    previous = gap;
  }
  CHECK(previous < 1e-8);
}

TEST_CASE("alternating partial sums approach (1 - 2^(1-s)) zeta(s)") {
  PrecisionContext ctx;
  const long bits = ctx.working_bits();
  for (long s : {2L, 3L}) {
    const Real zeta = oracle::zeta(Real(s, bits), bits);
    const Real factor = Real(1, bits) - bzeta::qcore::exp2i(1 - s, bits);
    const Real target = factor * zeta;
    double previous = 1.0;
    for (std::size_t cutoff : {10u, 100u, 1000u, 10000u}) {
      const auto partial = partial_l_series(ArithmeticWeight::alternating(), real_s(s, bits), cutoff, ctx);
      const double gap = bzeta::qcore::abs(partial.value.re - target).to_double();
      CHECK(gap < previous);
      // alternating tail is below its first omitted term
      CHECK(gap <= std::pow(static_cast<double>(cutoff + 1), -static_cast<double>(s)));
      previous = gap;
    }
  }
}

TEST_CASE("complex exponents and complex weights") {
  PrecisionContext ctx;
  const long bits = ctx.working_bits();
  const Complex s{Real(2, bits), Real(1, bits)};
  const auto partial = partial_l_series(ArithmeticWeight::trivial(), s, 3, ctx);
  Complex expected(bits);
  for (long r = 1; r <= 3; ++r) expected += oracle::pow_positive(Real(r, bits), -s);
  CHECK(oracle::relative_error(partial.value, expected) < 1e-50);

  const auto chi = ArithmeticWeight::periodic({{Rational(0), Rational(1)}});
  const auto rotated = partial_l_series(chi, s, 3, ctx);
  // i * z
  CHECK(oracle::relative_error(rotated.value, Complex{-expected.im, expected.re}) < 1e-50);
}

TEST_CASE("partial L-series rejects its domain errors") {
  PrecisionContext ctx;
  CHECK_THROWS_AS(partial_l_series(ArithmeticWeight::trivial(), real_s(1, 64), 10, ctx), std::domain_error);
  CHECK_THROWS_AS(partial_l_series(ArithmeticWeight::trivial(), real_s(2, 64), 0, ctx),
                  std::invalid_argument);
  CHECK_THROWS_AS(inverse_power(0, real_s(2, 64), 64), std::invalid_argument);
}
