#pragma once

#include <bzeta/qcore/real.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bzeta::limits {

using qcore::Complex;
using qcore::Real;

/// How the sequence A_n is pushed to n -> infinity.
///
/// polynomial: Neville interpolation at h = 0 in the variable h = n^(-1/2),
///   i.e. an error model in all integer powers of h.
/// asymptotic: least-squares-free generalized Richardson with the error
///   exponents of A_n in h: h^(s-1+2j) when chi has nonzero mean, and h^(2k)
///   always; coinciding exponents gain an h^e log h companion.
enum class ExtrapolationMethod { polynomial, asymptotic };

struct ExtrapolationConfig {
  ExtrapolationMethod method = ExtrapolationMethod::polynomial;
  /// Number of error terms eliminated; uses the last order+1 points.
  std::size_t order = 6;
};

std::string to_string(ExtrapolationMethod method);
/// "polynomial" or "asymptotic"; throws std::invalid_argument otherwise.
ExtrapolationMethod parse_extrapolation_method(const std::string& name);
std::string describe(const ExtrapolationConfig& config);

struct ExtrapolationResult {
  Complex value;
  /// |estimate(order) - estimate(order-1)|, a heuristic, not a bound.
  Real error_estimate;
};

/// One error term h^exponent * (log h)^log_power.
struct AsymptoticTerm {
  Complex exponent;
  unsigned log_power = 0;
};

/// First `count` error terms ordered by real part of the exponent.
std::vector<AsymptoticTerm> asymptotic_terms(const Complex& s, bool has_pole, std::size_t count,
                                             long bits);

/// Value at x = 0 of the polynomial through the last order+1 points
/// (x_i, y_i), with the order-1 estimate for the error.
ExtrapolationResult neville_at_zero(std::span<const Real> x, std::span<const Complex> y,
                                    std::size_t order, long bits);

/// Solves y_i = L + sum_k c_k phi_k(h_i) over the last terms.size()+1 points
/// and returns L; the error estimate drops the oldest point and last term.
ExtrapolationResult fit_at_zero(std::span<const Real> h, std::span<const Complex> y,
                                std::span<const AsymptoticTerm> terms, long bits);

/// Extrapolates A_n over the schedule n to n -> infinity. `has_pole` selects
/// the h^(s-1) family for the asymptotic method. Throws std::invalid_argument
/// when fewer than order+1 points are given.
ExtrapolationResult extrapolate(const ExtrapolationConfig& config, std::span<const std::size_t> n,
                                std::span<const Complex> values, const Complex& s, bool has_pole,
                                long bits);

}  // namespace bzeta::limits
