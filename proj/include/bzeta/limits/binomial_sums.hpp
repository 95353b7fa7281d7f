#pragma once

#include <bzeta/qcore/real.hpp>
#include <bzeta/weights/weight.hpp>

#include <cstddef>

namespace bzeta::limits {

using qcore::BigInt;
using qcore::Complex;
using qcore::PrecisionContext;
using qcore::Real;
using weights::ArithmeticWeight;

/// L_n(s) = sum_{r=1}^n chi(r) / ((n-r)! (n+r)! r^s), the q -> 1 limit of
/// (1-q)^{2n} beta_n(s,q). Factorials are exact.
Complex inner_limit_exact(const ArithmeticWeight& chi, const Complex& s, std::size_t n,
                          const PrecisionContext& ctx);

/// sqrt(n) (2n)! L_n(s) / 4^n through the factorial route, rounded once.
Complex scaled_inner_limit(const ArithmeticWeight& chi, const Complex& s, std::size_t n,
                           const PrecisionContext& ctx);

/// A_n = (sqrt(n)/4^n) sum_{r=1}^n C(2n, n+r) chi(r) / r^s, binomials exact.
/// Equal to scaled_inner_limit up to rounding.
Complex a_n(const ArithmeticWeight& chi, const Complex& s, std::size_t n,
            const PrecisionContext& ctx);

/// (sqrt(n)/4^n) C(2n, n+r); tends to 1/sqrt(pi) for fixed r.
Real binomial_weight(std::size_t n, std::size_t r, const PrecisionContext& ctx);

}  // namespace bzeta::limits
