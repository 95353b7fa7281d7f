#include "oracles.hpp"

#include <cmath>

namespace oracle {

namespace {

// atan(1/m) = sum (-1)^k / ((2k+1) m^(2k+1)).
Real atan_inverse(long m, long bits) {
  const Real m2(m * m, bits);
  Real power = Real(1, bits) / Real(m, bits);
  Real total(bits);
  const Real epsilon = bzeta::qcore::exp2i(-bits - 8, bits);
  for (long k = 0;; ++k) {
    Real term = power / Real(2 * k + 1, bits);
    if (k % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
    if (bzeta::qcore::abs(term) < epsilon) break;
    power /= m2;
  }
  return total;
}

}  // namespace

Real pi(long bits) {
  const long work = bits + 32;
  Real value = Real(16, work) * atan_inverse(5, work) - Real(4, work) * atan_inverse(239, work);
  return value.rounded(bits);
}

Real sqrt_pi(long bits) { return bzeta::qcore::sqrt(pi(bits + 32)).rounded(bits); }

Real euler_gamma(long bits) {
  const long work = bits + 32;
  const long n = 1000;
  Real harmonic(work);
  for (long k = 1; k <= n; ++k) harmonic += Real(1, work) / Real(k, work);
  const Real big_n(n, work);
  Real value = harmonic - bzeta::qcore::log(big_n) - Real(1, work) / (Real(2, work) * big_n);
  // B_2k / (2k N^2k), k = 1..10.
  static const long numerators[] = {1, -1, 1, -1, 5, -691, 7, -3617, 43867, -174611};
  static const long denominators[] = {6, 30, 42, 30, 66, 2730, 6, 510, 798, 330};
  const Real n2 = big_n * big_n;
  Real power = n2;
  for (int k = 1; k <= 10; ++k) {
    const Real bernoulli = Real(numerators[k - 1], work) / Real(denominators[k - 1], work);
    value += bernoulli / (Real(2 * k, work) * power);
    power *= n2;
  }
  return value.rounded(bits);
}

Complex alternating_sum(const std::function<Complex(long k, long bits)>& term, long bits) {
  const long work = bits + 32;
  // 5.83^-n < 2^-work
  const long n = static_cast<long>(std::ceil(static_cast<double>(work) / 2.54)) + 2;
  Real d = bzeta::qcore::pow(Real(3, work) + bzeta::qcore::sqrt(Real(8, work)), Real(n, work));
  d = (d + Real(1, work) / d) / Real(2, work);
  Real b(-1, work);
  Real c = -d;
  Complex total(work);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    total += term(k, work) * c;
    b = b * Real((k + n) * (k - n), work) / (Real(2 * k + 1, work) * Real(k + 1, work) / Real(2, work));
  }
  return (total / d).rounded(bits);
}

Complex pow_positive(const Real& x, const Complex& s) {
  const Real lx = bzeta::qcore::log(x);
  const Real modulus = bzeta::qcore::exp(s.re * lx);
  const Real angle = s.im * lx;
  return {modulus * bzeta::qcore::cos(angle), modulus * bzeta::qcore::sin(angle)};
}

Complex dirichlet_beta(const Complex& s, long bits) {
  return alternating_sum(
      [&s](long k, long work) {
        const Complex minus_s{-s.re.rounded(work), -s.im.rounded(work)};
        return oracle::pow_positive(Real(2 * k + 1, work), minus_s);
      },
      bits);
}

Complex dirichlet_eta(const Complex& s, long bits) {
  return alternating_sum(
      [&s](long k, long work) {
        const Complex minus_s{-s.re.rounded(work), -s.im.rounded(work)};
        return oracle::pow_positive(Real(k + 1, work), minus_s);
      },
      bits);
}

Real zeta(const Real& s, long bits) {
  const long work = bits + 32;
  const Complex sc = Complex::from_real(s.rounded(work));
  const Real eta = dirichlet_eta(sc, work).re;
  const Real factor = Real(1, work) - bzeta::qcore::exp(
                                          (Real(1, work) - s.rounded(work)) *
                                          bzeta::qcore::log(Real(2, work)));
  return (eta / factor).rounded(bits);
}

double relative_error(const Complex& a, const Complex& b) {
  return (bzeta::qcore::abs(a - b) / bzeta::qcore::abs(b)).to_double();
}

double relative_error(const Real& a, const Real& b) {
  return (bzeta::qcore::abs(a - b) / bzeta::qcore::abs(b)).to_double();
}

}  // namespace oracle
