#pragma once

#include <bzeta/qcore/pochhammer.hpp>
#include <bzeta/qcore/qseries.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace bzeta::bailey {

using qcore::Monomial;
using qcore::QSeries;
using qcore::Rational;

/// A denominator in a Bailey relation vanished (zero constant term, or zero
/// value at the evaluation point); the parameter choice is ill-posed.
class DegenerateDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Where two elements first disagree. `power` is set for series.
struct ElementMismatch {
  std::optional<std::size_t> power;
  std::string expected;
  std::string actual;
};

/// Bailey relations over truncated series in a formal q.
class SeriesAlgebra {
 public:
  using Element = QSeries;
  static constexpr bool kTruncates = true;

  explicit SeriesAlgebra(std::size_t truncation_order) : order_(truncation_order) {}

  std::size_t order() const { return order_; }
  std::string describe() const { return "series in q mod q^" + std::to_string(order_ + 1); }

  Element zero() const { return QSeries(order_); }
  Element scalar(const Rational& c) const { return QSeries::constant(c, order_); }
  Element q() const { return monomial(Monomial::q_power(1)); }
  Element monomial(const Monomial& m) const { return QSeries::monomial(m, order_); }
  Element pochhammer(const Monomial& a, std::size_t n) const {
    return qcore::q_pochhammer(a, n, order_);
  }
  Element q_integer(std::size_t r) const { return qcore::q_integer(r, order_); }

  Element inverse(const Element& e) const;
  Element pow(const Element& e, std::int64_t k) const;
  /// Exact division by q^k is unavailable at fixed truncation; throws qcore::SeriesError.
  Element divide_by_q_power(const Element& e, std::size_t k) const;

  bool is_zero(const Element& e) const { return e.is_zero(); }
  std::optional<ElementMismatch> compare(const Element& expected, const Element& actual) const;
  std::string to_string(const Element& e) const { return qcore::to_string(e); }

 private:
  std::size_t order_;
};

/// Bailey relations evaluated at a fixed rational q in (0,1).
class RationalAlgebra {
 public:
  using Element = Rational;
  static constexpr bool kTruncates = false;

  /// Throws std::invalid_argument unless 0 < q < 1.
  explicit RationalAlgebra(Rational q);

  const Rational& q_value() const { return q_; }
  std::string describe() const { return "q = " + qcore::to_string(q_); }

  Element zero() const { return Rational(0); }
  Element scalar(const Rational& c) const { return c; }
  Element q() const { return q_; }
  Element monomial(const Monomial& m) const { return m.coefficient * qcore::pow(q_, m.exponent); }
  Element pochhammer(const Monomial& a, std::size_t n) const {
    return qcore::q_pochhammer(monomial(a), q_, n);
  }
  Element q_integer(std::size_t r) const { return qcore::q_integer(r, q_); }

  Element inverse(const Element& e) const;
  Element pow(const Element& e, std::int64_t k) const;
  Element divide_by_q_power(const Element& e, std::size_t k) const {
    return e / qcore::pow(q_, static_cast<std::int64_t>(k));
  }

  bool is_zero(const Element& e) const { return e == 0; }
  std::optional<ElementMismatch> compare(const Element& expected, const Element& actual) const;
  std::string to_string(const Element& e) const { return qcore::to_string(e); }

 private:
  Rational q_;
};

}  // namespace bzeta::bailey
