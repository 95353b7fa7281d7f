#pragma once

#include <bzeta/qcore/real.hpp>
#include <bzeta/weights/weight.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace bzeta::limits {

using qcore::BigInt;
using qcore::Complex;
using qcore::PrecisionContext;
using qcore::Rational;
using qcore::Real;
using weights::ArithmeticWeight;

/// alpha_r(s,q) = chi(r) / [r]_q^s with [r]_q = 1 + q + ... + q^(r-1).
struct AlphaFamily {
  ArithmeticWeight weight;
  Complex s;
};

/// chi(r) [r]_q^(-s), with [r]_q evaluated exactly. Requires r >= 1 and 0 < q <= 1.
Complex alpha_zeta(const AlphaFamily& fam, std::size_t r, const Rational& q,
                   const PrecisionContext& ctx);

/// beta_n(s,q) = sum_{r=1}^n q^r alpha_r(s,q) / ((q;q)_{n-r} (q;q)_{n+r}).
/// The rational kernel of each term is exact and rounded once.
Complex beta_n(const AlphaFamily& fam, std::size_t n, const Rational& q,
               const PrecisionContext& ctx);

/// T_n(s,q) = sqrt(n) (2n)! (1-q)^{2n} beta_n(s,q) / 4^n.
Complex t_n(const AlphaFamily& fam, std::size_t n, const Rational& q, const PrecisionContext& ctx);

/// (1-q)^{2n} beta_n(s,q); the quantity whose q -> 1 limit is L_n.
Complex scaled_beta_n(const AlphaFamily& fam, std::size_t n, const Rational& q,
                      const PrecisionContext& ctx);

struct InnerLimitRow {
  Rational q;
  Complex scaled_beta;
  Complex exact;
  Real deviation;
};

/// (1-q)^{2n} beta_n against the exact inner limit L_n along a q grid.
/// Throws std::invalid_argument on an empty grid or points outside (0,1).
std::vector<InnerLimitRow> inner_limit_numeric(const AlphaFamily& fam, std::size_t n,
                                               std::span<const Rational> q_grid,
                                               const PrecisionContext& ctx);

/// True when every deviation is strictly smaller than the previous one.
bool strictly_decreasing(std::span<const InnerLimitRow> rows);

struct BoundSample {
  Rational q;
  std::size_t worst_r = 0;
  double max_ratio = 0.0;
};

/// Sampled check of |alpha_r(s,q)| <= C r^(-sigma). Reports ratios
/// |alpha_r| r^sigma / C; it never gates any computation.
struct BoundDiagnostic {
  double sigma = 0.0;
  double constant = 0.0;
  std::size_t r_max = 0;
  std::vector<BoundSample> samples;
  double max_ratio = 0.0;
  std::size_t worst_r = 0;
  Rational worst_q;

  bool holds_on_sample() const { return max_ratio <= 1.0; }
};

/// Throws std::invalid_argument unless sigma, C > 0 and the grid is nonempty in (0,1].
BoundDiagnostic hypothesis_bound_diagnostic(const AlphaFamily& fam, double sigma, double constant,
                                            std::size_t r_max, std::span<const Rational> q_grid,
                                            const PrecisionContext& ctx);

}  // namespace bzeta::limits
