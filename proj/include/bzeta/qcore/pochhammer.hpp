#pragma once

#include <bzeta/qcore/qseries.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace bzeta::qcore {

/// (a; q^base)_n = prod_{j<n} (1 - a q^(base*j)) as a truncated series.
/// The empty product (n = 0) is the constant series 1.
QSeries q_pochhammer(const Monomial& a, std::size_t n, std::size_t order,
                     std::int64_t base = 1);

/// Same product for a series-valued a, i.e. prod_{j<n} (1 - a * q^(base*j)).
QSeries q_pochhammer(const QSeries& a, std::size_t n, std::int64_t base = 1);

/// (a; q)_n with q a fixed rational.
Rational q_pochhammer(const Rational& a, const Rational& q, std::size_t n);

/// [r]_q = 1 + q + ... + q^(r-1). Throws std::invalid_argument for r = 0.
Rational q_integer(std::size_t r, const Rational& q);
QSeries q_integer(std::size_t r, std::size_t order);

/// |(q;q)_m / (1-q)^m - m!| for each grid point, exactly.
///
/// Throws std::invalid_argument for an empty grid or a point outside (0,1).
std::vector<Rational> pochhammer_scaling_limit_check(std::size_t m,
                                                     std::span<const Rational> q_grid);

}  // namespace bzeta::qcore
