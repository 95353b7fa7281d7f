#include <bzeta/qcore/combinatorics.hpp>
#include <bzeta/qcore/pochhammer.hpp>
#include <bzeta/qcore/qseries.hpp>
#include <bzeta/qcore/real.hpp>

#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"

#include <thread>

using namespace bzeta::qcore;

TEST_CASE("series arithmetic keeps the truncation order") {
  QSeries a(5, {Rational(1), Rational(2)});
  CHECK(a.coefficients().size() == 6);
  CHECK(a.truncation_order() == 5);
  QSeries b = a * a;
  CHECK(b.truncation_order() == 5);
  CHECK(b[0] == 1);
  CHECK(b[1] == 4);
  CHECK(b[2] == 4);
  CHECK(b[3] == 0);
  CHECK_THROWS_AS(a + QSeries(4), SeriesError);
}

TEST_CASE("product of truncations equals truncation of the full product") {
  gen::Source rng(0x51);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t order = static_cast<std::size_t>(rng.integer(0, 12));
    QSeries f = rng.series(2 * order + 1);
    QSeries g = rng.series(2 * order + 1);
    const QSeries full = f * g;
    QSeries ft(order), gt(order);
    for (std::size_t k = 0; k <= order; ++k) {
      ft[k] = f[k];
      gt[k] = g[k];
    }
    const QSeries truncated = ft * gt;
    for (std::size_t k = 0; k <= order; ++k) CHECK(truncated[k] == full[k]);
  }
}

TEST_CASE("ring axioms hold exactly on random series") {
  gen::Source rng(20240601);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t order = static_cast<std::size_t>(rng.integer(0, 15));
    const QSeries f = rng.series(order), g = rng.series(order), h = rng.series(order);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f + g - g == f);
    const Rational c = rng.rational();
    CHECK(c * (f + g) == c * f + c * g);
  }
}

TEST_CASE("inverse and integer powers") {
  gen::Source rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t order = static_cast<std::size_t>(rng.integer(0, 12));
    QSeries f = rng.series(order);
    if (f[0] == 0) f[0] = 3;
    CHECK(f * f.inverse() == QSeries::constant(1, order));
    CHECK(f.pow(3) == f * f * f);
    CHECK(f.pow(-2) * f.pow(2) == QSeries::constant(1, order));
    CHECK(f.pow(0) == QSeries::constant(1, order));
  }
  CHECK_THROWS_AS(QSeries::monomial(Monomial::q_power(1), 4).inverse(), SeriesError);
}

TEST_CASE("monomials") {
  const Monomial m{Rational(-2, 3), 2};
  CHECK(to_string(m) != "");
  CHECK(m.pow(2) == Monomial{Rational(4, 9), 4});
  CHECK(m / Monomial{Rational(2), 1} == Monomial{Rational(-1, 3), 1});
  const Monomial zero{Rational(0), 0};
  CHECK_THROWS_AS(m / zero, SeriesError);
  const QSeries s = QSeries::monomial(m, 3);
  CHECK(s[2] == Rational(-2, 3));
  CHECK(QSeries::monomial(Monomial::q_power(7), 3).is_zero());
  CHECK(s.times(Monomial::q_power(1))[3] == Rational(-2, 3));
}

TEST_CASE("first difference and valuation") {
  QSeries a(6), b(6);
  a[4] = 1;
  CHECK(a.valuation() == std::optional<std::size_t>(4));
  CHECK(QSeries(6).valuation() == std::nullopt);
  CHECK(first_difference(a, b) == std::optional<std::size_t>(4));
  CHECK(first_difference(a, a) == std::nullopt);
}

TEST_CASE("q-Pochhammer recurrence") {
  const std::size_t order = 40;
  const Monomial bases[] = {Monomial::q_power(1), Monomial{Rational(-1), 0},
                            Monomial{Rational(3, 2), 2}, Monomial::q_power(0)};
  for (const Monomial& a : bases) {
    for (std::size_t n = 0; n <= 12; ++n) {
      const QSeries next = q_pochhammer(a, n + 1, order);
      const QSeries step = QSeries::constant(1, order) -
                           QSeries::monomial(a * Monomial::q_power(static_cast<std::int64_t>(n)), order);
      CHECK(next == q_pochhammer(a, n, order) * step);
    }
  }
}

TEST_CASE("q-Pochhammer small values") {
  // (q;q)_2 = (1-q)(1-q^2) = 1 - q - q^2 + q^3
  const QSeries p = q_pochhammer(Monomial::q_power(1), 2, 5);
  CHECK(p == QSeries(5, {Rational(1), Rational(-1), Rational(-1), Rational(1)}));
  CHECK(q_pochhammer(Monomial::q_power(1), 0, 5) == QSeries::constant(1, 5));
  // (q^2;q^2)_2 = (1-q^2)(1-q^4)
  const QSeries p2 = q_pochhammer(Monomial::q_power(2), 2, 6, 2);
  CHECK(p2 == QSeries(6, {Rational(1), Rational(0), Rational(-1), Rational(0), Rational(-1),
                          Rational(0), Rational(1)}));
  // rational q: (1/2;1/2)_2 = (1/2)(3/4)
  CHECK(q_pochhammer(Rational(1, 2), Rational(1, 2), 2) == Rational(3, 8));
}

TEST_CASE("(1 - q^r) = (1 - q)[r]_q") {
  const std::size_t order = 60;
  const QSeries one_minus_q = QSeries(order, {Rational(1), Rational(-1)});
  for (std::size_t r = 1; r <= 50; ++r) {
    const QSeries lhs = QSeries::constant(1, order) -
                        QSeries::monomial(Monomial::q_power(static_cast<std::int64_t>(r)), order);
    CHECK(lhs == one_minus_q * q_integer(r, order));
  }
  gen::Source rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational q = rng.unit_interval();
    const auto r = static_cast<std::size_t>(rng.integer(1, 50));
    CHECK(1 - pow(q, static_cast<std::int64_t>(r)) == (1 - q) * q_integer(r, q));
  }
  CHECK(q_integer(5, Rational(1)) == 5);
  CHECK_THROWS_AS(q_integer(0, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("(q;q)_m/(1-q)^m approaches m!") {
  const std::vector<Rational> grid = {Rational(1, 2), Rational(9, 10), Rational(99, 100),
                                      Rational(999, 1000)};
  // m = 1 is exact: (q;q)_1 = 1 - q.
  CHECK(pochhammer_scaling_limit_check(1, grid) == std::vector<Rational>(grid.size(), Rational(0)));
  for (std::size_t m = 2; m <= 6; ++m) {
    const auto gaps = pochhammer_scaling_limit_check(m, grid);
    REQUIRE(gaps.size() == grid.size());
    for (std::size_t i = 1; i < gaps.size(); ++i) CHECK(gaps[i] < gaps[i - 1]);
  }
  CHECK_THROWS_AS(pochhammer_scaling_limit_check(2, {}), std::invalid_argument);
  const std::vector<Rational> bad = {Rational(1)};
  CHECK_THROWS_AS(pochhammer_scaling_limit_check(2, bad), std::invalid_argument);
}

TEST_CASE("binomials: Pascal's rule and the closed form") {
  for (std::size_t n = 1; n <= 60; ++n) {
    for (std::int64_t k = 1; k < static_cast<std::int64_t>(n); ++k) {
      CHECK(big_binomial(n, k) == big_binomial(n - 1, k - 1) + big_binomial(n - 1, k));
    }
  }
  for (std::size_t n = 0; n <= 40; ++n) {
    for (std::size_t r = 0; r <= n; ++r) {
      CHECK(big_binomial(2 * n, static_cast<std::int64_t>(n + r)) * factorial(n + r) * factorial(n - r) ==
            factorial(2 * n));
    }
  }
  CHECK(big_binomial(5, -1) == 0);
  CHECK(big_binomial(5, 6) == 0);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("central binomial dominates its row") {
  for (std::size_t n = 1; n <= 200; ++n) {
    const BigInt centre = big_binomial(2 * n, static_cast<std::int64_t>(n));
    for (std::size_t r = 0; r <= n; ++r) {
      CHECK(big_binomial(2 * n, static_cast<std::int64_t>(n + r)) <= centre);
    }
  }
}

TEST_CASE("factorial cache is safe under concurrent use") {
  std::vector<std::thread> threads;
  std::vector<BigInt> results(4);
  for (std::size_t t = 0; t < 4; ++t) {
    threads.emplace_back([t, &results] { results[t] = Combinatorics::shared().factorial(300 + 50 * t); });
  }
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < 4; ++t) CHECK(results[t] == factorial(300 + 50 * t));
}

TEST_CASE("rational parsing is decimal") {
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("-007/010") == Rational(-7, 10));
  CHECK(parse_rational("+3/6") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0x10"), std::invalid_argument);
}

TEST_CASE("precision context") {
  PrecisionContext ctx;
  CHECK(ctx.precision_bits == 192);
  CHECK(ctx.summation_policy == SummationPolicy::sequential_ascending);
  CHECK_NOTHROW(ctx.validate());
  ctx.precision_bits = 32;
  CHECK_THROWS_AS(ctx.validate(), std::invalid_argument);
}

TEST_CASE("exact conversions round correctly") {
  const Real third(Rational(1, 3), 64);
  CHECK(third.precision() == 64);
  // 1/3 at 64 bits: the error is below half an ulp.
  const Real wide(Rational(1, 3), 256);
  CHECK(ulp_distance(third, wide.rounded(64), 64) == 0.0);
  CHECK(Real(BigInt("123456789012345678901234567890"), 200) ==
        Real::from_string("123456789012345678901234567890", 200));
}

TEST_CASE("Real::pi agrees with an independent Machin evaluation") {
  CHECK(ulp_distance(Real::pi(256), oracle::pi(256), 256) <= 1.0);
}

TEST_CASE("summation policies agree to rounding") {
  std::vector<Real> terms;
  for (long k = 1; k <= 500; ++k) terms.push_back(Real(1, 128) / Real(k * k, 128));
  const Real a = sum(terms, SummationPolicy::sequential_ascending, 128);
  const Real b = sum(terms, SummationPolicy::pairwise, 128);
  CHECK(ulp_distance(a, b, 128) < 64.0);
  // sequential is reproducible
  CHECK(a == sum(terms, SummationPolicy::sequential_ascending, 128));
}

TEST_CASE("decimal output") {
  CHECK(to_decimal(Real(Rational(1, 4), 64), 5) == "2.5000e-01");
  CHECK(decimal_digits(192) >= 58);
}
