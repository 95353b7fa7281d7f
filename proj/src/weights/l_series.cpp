#include <bzeta/weights/l_series.hpp>

#include <stdexcept>

namespace bzeta::weights {

namespace {

bool is_small_integer(const Real& x) {
  return mpfr_integer_p(x.get()) != 0 && mpfr_fits_slong_p(x.get(), MPFR_RNDN) != 0;
}

}  // namespace

Complex inverse_power(std::size_t r, const Complex& s, long bits) {
  if (r == 0) throw std::invalid_argument("inverse_power requires r >= 1");
  if (s.im.is_zero() && is_small_integer(s.re)) {
    const long k = mpfr_get_si(s.re.get(), MPFR_RNDN);
    Real power(bits);
    mpfr_ui_pow_ui(power.get(), static_cast<unsigned long>(r),
                   static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDN);
    if (k >= 0) return Complex::from_real(Real(1, bits) / power);
    return Complex::from_real(power);
  }
  const Complex exponent{-s.re.rounded(bits), -s.im.rounded(bits)};
  return qcore::pow_positive(Real(static_cast<long>(r), bits), exponent);
}

Complex apply_weight(const GaussianRational& c, Complex z, long bits) {
  if (c.im == 0) {
    z *= Real(c.re, bits);
    return z;
  }
  return z * Complex(Real(c.re, bits), Real(c.im, bits));
}

PartialLSeries partial_l_series(const ArithmeticWeight& chi, const Complex& s, std::size_t cutoff,
                                const PrecisionContext& ctx) {
  ctx.validate();
  if (cutoff == 0) throw std::invalid_argument("partial L-series needs a cutoff R >= 1");
  if (s.re <= Real(1, s.re.precision())) {
    throw std::domain_error("partial L-series requires Re(s) > 1");
  }
  const long work = ctx.working_bits();
  qcore::Accumulator<Complex> total(ctx.summation_policy, work);
  for (std::size_t r = 1; r <= cutoff; ++r) {
    const GaussianRational& c = chi.evaluate(r);
    if (c.is_zero()) continue;
    total.add(apply_weight(c, inverse_power(r, s, work), work));
  }

  const Real sigma_minus_one = s.re.rounded(work) - Real(1, work);
  Real tail = qcore::pow(Real(static_cast<long>(cutoff), work), -sigma_minus_one) / sigma_minus_one;
  tail *= qcore::sqrt(Real(chi.bound_squared(), work));
  return {total.result().rounded(ctx.precision_bits), tail.rounded(ctx.precision_bits)};
}

}  // namespace bzeta::weights
