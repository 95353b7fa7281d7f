#pragma once

#include <bzeta/qcore/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bzeta::qcore {

/// Raised when a series operation has no exact answer at the fixed truncation
/// order (mismatched orders, inversion of a series with zero constant term,
/// negative powers of q).
class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact scalar times an integer power of q, c * q^k.
struct Monomial {
  Rational coefficient{1};
  std::int64_t exponent = 0;

  static Monomial q_power(std::int64_t k) { return {Rational(1), k}; }
  static Monomial scalar(Rational c) { return {std::move(c), 0}; }

  bool is_zero() const { return coefficient == 0; }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    return {x.coefficient * y.coefficient, x.exponent + y.exponent};
  }
  /// Throws SeriesError on division by a zero monomial.
  friend Monomial operator/(const Monomial& x, const Monomial& y);
  friend bool operator==(const Monomial& x, const Monomial& y) {
    return x.coefficient == y.coefficient && x.exponent == y.exponent;
  }

  Monomial pow(std::int64_t k) const;
};

std::string to_string(const Monomial& m);

/// Truncated formal power series in q with exact rational coefficients.
///
/// All arithmetic is modulo q^(N+1) where N is the truncation order. Binary
/// operations require both operands to share N; there is no implicit
/// promotion or demotion of the order.
class QSeries {
 public:
  explicit QSeries(std::size_t truncation_order);
  QSeries(std::size_t truncation_order, std::vector<Rational> coefficients);

  static QSeries constant(const Rational& c, std::size_t truncation_order);
  /// c*q^k; a monomial beyond the truncation order is the zero series.
  /// Negative k throws SeriesError.
  static QSeries monomial(const Monomial& m, std::size_t truncation_order);

  std::size_t truncation_order() const { return coefficients_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const Rational& operator[](std::size_t power) const { return coefficients_[power]; }
  Rational& operator[](std::size_t power) { return coefficients_[power]; }

  bool is_zero() const;
  /// Lowest power with a nonzero coefficient.
  std::optional<std::size_t> valuation() const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const QSeries& rhs);
  QSeries& operator*=(const Rational& scalar);

  friend QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
  friend QSeries operator-(QSeries lhs, const QSeries& rhs) { return lhs -= rhs; }
  friend QSeries operator*(const QSeries& lhs, const QSeries& rhs);
  friend QSeries operator*(QSeries lhs, const Rational& rhs) { return lhs *= rhs; }
  friend QSeries operator*(const Rational& lhs, QSeries rhs) { return rhs *= lhs; }
  QSeries operator-() const;

  /// Multiplies by c*q^k with k >= 0.
  QSeries times(const Monomial& m) const;

  /// Multiplicative inverse; requires a nonzero constant term.
  QSeries inverse() const;
  /// Nonnegative power by repeated squaring; negative powers go through inverse().
  QSeries pow(std::int64_t exponent) const;

  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  void require_same_order(const QSeries& rhs, const char* op) const;

  std::vector<Rational> coefficients_;
};

/// First power at which two series of equal order differ.
std::optional<std::size_t> first_difference(const QSeries& a, const QSeries& b);

std::string to_string(const QSeries& series);

}  // namespace bzeta::qcore
