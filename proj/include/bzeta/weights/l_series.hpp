#pragma once

#include <bzeta/qcore/real.hpp>
#include <bzeta/weights/weight.hpp>

#include <cstddef>

namespace bzeta::weights {

using qcore::Complex;
using qcore::PrecisionContext;
using qcore::Real;

/// r^(-s) for a positive integer r. Integer s takes an exact-power fast path.
Complex inverse_power(std::size_t r, const Complex& s, long bits);

/// c * z at the given precision; real weights skip the complex product.
Complex apply_weight(const GaussianRational& c, Complex z, long bits);

struct PartialLSeries {
  Complex value;
  /// bound * R^(1-Re s) / (Re s - 1), the integral estimate of the tail.
  Real tail_bound;
};

/// sum_{r=1}^R chi(r) / r^s at the context precision. Throws std::domain_error
/// for Re(s) <= 1 and std::invalid_argument for R = 0.
PartialLSeries partial_l_series(const ArithmeticWeight& chi, const Complex& s, std::size_t cutoff,
                                const PrecisionContext& ctx);

}  // namespace bzeta::weights
