#include <bzeta/limits/finite_q.hpp>

#include <bzeta/limits/binomial_sums.hpp>
#include <bzeta/qcore/combinatorics.hpp>
#include <bzeta/qcore/pochhammer.hpp>
#include <bzeta/weights/l_series.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace bzeta::limits {

namespace {

void require_index(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + " requires an index >= 1");
}

void require_open_unit(const Rational& q) {
  if (q <= 0 || q >= 1) throw std::invalid_argument("q must lie in (0,1), got " + qcore::to_string(q));
}

std::optional<long> small_integer(const Complex& s) {
  if (!s.im.is_zero()) return std::nullopt;
  if (mpfr_integer_p(s.re.get()) == 0 || mpfr_fits_slong_p(s.re.get(), MPFR_RNDN) == 0) {
    return std::nullopt;
  }
  const long k = mpfr_get_si(s.re.get(), MPFR_RNDN);
  if (k < -4096 || k > 4096) return std::nullopt;
  return k;
}

// [r]_q^(-s) at `bits`; exact for integer s.
Complex q_integer_inverse_power(std::size_t r, const Rational& q, const Complex& s, long bits) {
  if (q == 1) return weights::inverse_power(r, s, bits);
  const Rational base = qcore::q_integer(r, q);
  if (const auto k = small_integer(s)) {
    return Complex::from_real(Real(qcore::pow(base, -*k), bits));
  }
  const Complex exponent{-s.re.rounded(bits), -s.im.rounded(bits)};
  return qcore::pow_positive(Real(base, bits), exponent);
}

Complex alpha_at(const AlphaFamily& fam, std::size_t r, const Rational& q, long bits) {
  const auto& c = fam.weight.evaluate(r);
  if (c.is_zero()) return Complex(bits);
  return weights::apply_weight(c, q_integer_inverse_power(r, q, fam.s, bits), bits);
}

// sum_r prefactor * q^r alpha_r / ((q;q)_{n-r} (q;q)_{n+r}) at working precision.
Complex weighted_beta_sum(const AlphaFamily& fam, std::size_t n, const Rational& q,
                          const Rational& prefactor, const PrecisionContext& ctx) {
  const long work = ctx.working_bits();
  std::vector<Rational> qq(2 * n + 1);
  qq[0] = 1;
  Rational q_power = 1;
  for (std::size_t k = 1; k <= 2 * n; ++k) {
    q_power *= q;
    qq[k] = qq[k - 1] * (1 - q_power);
  }
  qcore::Accumulator<Complex> total(ctx.summation_policy, work);
  Rational q_r = 1;
  for (std::size_t r = 1; r <= n; ++r) {
    q_r *= q;
    if (fam.weight.evaluate(r).is_zero()) continue;
    const Rational kernel = prefactor * q_r / (qq[n - r] * qq[n + r]);
    total.add(alpha_at(fam, r, q, work) * Real(kernel, work));
  }
  return total.result();
}

}  // namespace

Complex alpha_zeta(const AlphaFamily& fam, std::size_t r, const Rational& q,
                   const PrecisionContext& ctx) {
  ctx.validate();
  require_index(r, "alpha_zeta");
  if (q <= 0 || q > 1) throw std::invalid_argument("q must lie in (0,1], got " + qcore::to_string(q));
  return alpha_at(fam, r, q, ctx.working_bits()).rounded(ctx.precision_bits);
}

Complex beta_n(const AlphaFamily& fam, std::size_t n, const Rational& q,
               const PrecisionContext& ctx) {
  ctx.validate();
  require_index(n, "beta_n");
  require_open_unit(q);
  return weighted_beta_sum(fam, n, q, Rational(1), ctx).rounded(ctx.precision_bits);
}

Complex scaled_beta_n(const AlphaFamily& fam, std::size_t n, const Rational& q,
                      const PrecisionContext& ctx) {
  ctx.validate();
  require_index(n, "scaled_beta_n");
  require_open_unit(q);
  const Rational prefactor = qcore::pow(Rational(1) - q, static_cast<std::int64_t>(2 * n));
  return weighted_beta_sum(fam, n, q, prefactor, ctx).rounded(ctx.precision_bits);
}

Complex t_n(const AlphaFamily& fam, std::size_t n, const Rational& q, const PrecisionContext& ctx) {
  ctx.validate();
  require_index(n, "t_n");
  require_open_unit(q);
  const long work = ctx.working_bits();
  Rational prefactor = qcore::pow(Rational(1) - q, static_cast<std::int64_t>(2 * n));
  prefactor *= Rational(qcore::factorial(2 * n));
  BigInt four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
  prefactor /= Rational(four_n);
  Complex value = weighted_beta_sum(fam, n, q, prefactor, ctx);
  value *= qcore::sqrt(Real(static_cast<long>(n), work));
  return value.rounded(ctx.precision_bits);
}

std::vector<InnerLimitRow> inner_limit_numeric(const AlphaFamily& fam, std::size_t n,
                                               std::span<const Rational> q_grid,
                                               const PrecisionContext& ctx) {
  if (q_grid.empty()) throw std::invalid_argument("inner_limit_numeric needs a nonempty q grid");
  for (const auto& q : q_grid) require_open_unit(q);
  const Complex exact = inner_limit_exact(fam.weight, fam.s, n, ctx);
  std::vector<InnerLimitRow> rows;
  rows.reserve(q_grid.size());
  for (const auto& q : q_grid) {
    Complex scaled = scaled_beta_n(fam, n, q, ctx);
    Real deviation = qcore::abs(scaled - exact);
    rows.push_back({q, std::move(scaled), exact, std::move(deviation)});
  }
  return rows;
}

bool strictly_decreasing(std::span<const InnerLimitRow> rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].deviation < rows[i - 1].deviation)) return false;
  }
  return true;
}

BoundDiagnostic hypothesis_bound_diagnostic(const AlphaFamily& fam, double sigma, double constant,
                                            std::size_t r_max, std::span<const Rational> q_grid,
                                            const PrecisionContext& ctx) {
  ctx.validate();
  if (!(sigma > 0.0) || !(constant > 0.0)) {
    throw std::invalid_argument("hypothesis diagnostic requires sigma > 0 and C > 0");
  }
  if (q_grid.empty()) throw std::invalid_argument("hypothesis diagnostic needs a nonempty q grid");
  for (const auto& q : q_grid) {
    if (q <= 0 || q > 1) throw std::invalid_argument("q must lie in (0,1], got " + qcore::to_string(q));
  }

  BoundDiagnostic out;
  out.sigma = sigma;
  out.constant = constant;
  out.r_max = r_max;
  bool first = true;
  for (const auto& q : q_grid) {
    BoundSample sample{q, 0, 0.0};
    for (std::size_t r = 1; r <= r_max; ++r) {
      const double magnitude = qcore::abs(alpha_zeta(fam, r, q, ctx)).to_double();
      const double ratio = magnitude * std::pow(static_cast<double>(r), sigma) / constant;
      if (r == 1 || ratio > sample.max_ratio) {
        sample.max_ratio = ratio;
        sample.worst_r = r;
      }
    }
    if (first || sample.max_ratio > out.max_ratio) {
      out.max_ratio = sample.max_ratio;
      out.worst_r = sample.worst_r;
      out.worst_q = q;
      first = false;
    }
    out.samples.push_back(std::move(sample));
  }
  return out;
}

}  // namespace bzeta::limits
