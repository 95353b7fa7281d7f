#include <bzeta/limits/binomial_sums.hpp>

#include <bzeta/qcore/combinatorics.hpp>
#include <bzeta/weights/l_series.hpp>

#include <stdexcept>

namespace bzeta::limits {

namespace {

void require_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("binomial sums require n >= 1");
}

// sqrt(n) / 4^n at `bits`.
Real central_scale(std::size_t n, long bits) {
  Real scale = qcore::sqrt(Real(static_cast<long>(n), bits));
  scale *= qcore::exp2i(-2 * static_cast<std::int64_t>(n), bits);
  return scale;
}

Complex inner_limit_work(const ArithmeticWeight& chi, const Complex& s, std::size_t n,
                         const PrecisionContext& ctx) {
  const long work = ctx.working_bits();
  auto& comb = qcore::Combinatorics::shared();
  qcore::Accumulator<Complex> total(ctx.summation_policy, work);
  for (std::size_t r = 1; r <= n; ++r) {
    const auto& c = chi.evaluate(r);
    if (c.is_zero()) continue;
    const BigInt denominator = comb.factorial(n - r) * comb.factorial(n + r);
    const Real inverse = Real(1, work) / Real(denominator, work);
    total.add(weights::apply_weight(c, weights::inverse_power(r, s, work) * inverse, work));
  }
  return total.result();
}

}  // namespace

Complex inner_limit_exact(const ArithmeticWeight& chi, const Complex& s, std::size_t n,
                          const PrecisionContext& ctx) {
  ctx.validate();
  require_index(n);
  return inner_limit_work(chi, s, n, ctx).rounded(ctx.precision_bits);
}

Complex scaled_inner_limit(const ArithmeticWeight& chi, const Complex& s, std::size_t n,
                           const PrecisionContext& ctx) {
  ctx.validate();
  require_index(n);
  const long work = ctx.working_bits();
  Complex value = inner_limit_work(chi, s, n, ctx);
  value *= Real(qcore::Combinatorics::shared().factorial(2 * n), work);
  value *= central_scale(n, work);
  return value.rounded(ctx.precision_bits);
}

Complex a_n(const ArithmeticWeight& chi, const Complex& s, std::size_t n,
            const PrecisionContext& ctx) {
  ctx.validate();
  require_index(n);
  const long work = ctx.working_bits();
  qcore::Accumulator<Complex> total(ctx.summation_policy, work);
  // C(2n, n+r+1) = C(2n, n+r) (n-r) / (n+r+1), exact at every step.
  BigInt binom = qcore::big_binomial(2 * n, static_cast<std::int64_t>(n + 1));
  for (std::size_t r = 1; r <= n; ++r) {
    if (r > 1) {
      binom *= static_cast<unsigned long>(n - r + 1);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(n + r));
    }
    const auto& c = chi.evaluate(r);
    if (c.is_zero()) continue;
    total.add(weights::apply_weight(c, weights::inverse_power(r, s, work) * Real(binom, work), work));
  }
  Complex value = total.result();
  value *= central_scale(n, work);
  return value.rounded(ctx.precision_bits);
}

Real binomial_weight(std::size_t n, std::size_t r, const PrecisionContext& ctx) {
  ctx.validate();
  const long work = ctx.working_bits();
  Real value(qcore::big_binomial(2 * n, static_cast<std::int64_t>(n + r)), work);
  value *= central_scale(n, work);
  return value.rounded(ctx.precision_bits);
}

}  // namespace bzeta::limits
