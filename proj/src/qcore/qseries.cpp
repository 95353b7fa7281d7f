#include <bzeta/qcore/qseries.hpp>

#include <sstream>

namespace bzeta::qcore {

Monomial operator/(const Monomial& x, const Monomial& y) {
  if (y.coefficient == 0) throw SeriesError("division by a zero monomial");
  return {x.coefficient / y.coefficient, x.exponent - y.exponent};
}

Monomial Monomial::pow(std::int64_t k) const {
  return {qcore::pow(coefficient, k), exponent * k};
}

std::string to_string(const Monomial& m) {
  if (m.exponent == 0) return to_string(m.coefficient);
  std::string q = m.exponent == 1 ? "q" : "q^" + std::to_string(m.exponent);
  if (m.exponent < 0) q = "q^(" + std::to_string(m.exponent) + ")";
  if (m.coefficient == 1) return q;
  if (m.coefficient == -1) return "-" + q;
  const bool simple = is_integer(m.coefficient);
  return (simple ? to_string(m.coefficient) : "(" + to_string(m.coefficient) + ")") + "*" + q;
}

QSeries::QSeries(std::size_t truncation_order) : coefficients_(truncation_order + 1) {}

QSeries::QSeries(std::size_t truncation_order, std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(truncation_order + 1);
}

QSeries QSeries::constant(const Rational& c, std::size_t truncation_order) {
  QSeries s(truncation_order);
  s.coefficients_[0] = c;
  return s;
}

QSeries QSeries::monomial(const Monomial& m, std::size_t truncation_order) {
  if (m.exponent < 0) {
    throw SeriesError("negative power q^" + std::to_string(m.exponent) +
                      " is not a power series");
  }
  QSeries s(truncation_order);
  if (static_cast<std::size_t>(m.exponent) <= truncation_order) {
    s.coefficients_[static_cast<std::size_t>(m.exponent)] = m.coefficient;
  }
  return s;
}

bool QSeries::is_zero() const { return !valuation().has_value(); }

std::optional<std::size_t> QSeries::valuation() const {
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] != 0) return k;
  }
  return std::nullopt;
}

void QSeries::require_same_order(const QSeries& rhs, const char* op) const {
  if (rhs.truncation_order() != truncation_order()) {
    std::ostringstream msg;
    msg << "series " << op << " with mismatched truncation orders " << truncation_order()
        << " and " << rhs.truncation_order();
    throw SeriesError(msg.str());
  }
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  require_same_order(rhs, "addition");
  for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] += rhs.coefficients_[k];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  require_same_order(rhs, "subtraction");
  for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] -= rhs.coefficients_[k];
  return *this;
}

QSeries operator*(const QSeries& lhs, const QSeries& rhs) {
  lhs.require_same_order(rhs, "multiplication");
  const std::size_t n = lhs.coefficients_.size();
  QSeries out(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (rhs.coefficients_[j] == 0) continue;
      out.coefficients_[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
    }
  }
  return out;
}

QSeries& QSeries::operator*=(const QSeries& rhs) { return *this = *this * rhs; }

QSeries& QSeries::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

QSeries QSeries::operator-() const {
  QSeries out(*this);
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

QSeries QSeries::times(const Monomial& m) const {
  if (m.exponent < 0) {
    throw SeriesError("multiplication by q^" + std::to_string(m.exponent) +
                      " leaves the power-series ring");
  }
  QSeries out(truncation_order());
  const auto shift = static_cast<std::size_t>(m.exponent);
  for (std::size_t k = 0; k + shift < coefficients_.size(); ++k) {
    out.coefficients_[k + shift] = coefficients_[k] * m.coefficient;
  }
  return out;
}

QSeries QSeries::inverse() const {
  if (coefficients_[0] == 0) {
    throw SeriesError("series with zero constant term is not invertible");
  }
  const std::size_t n = coefficients_.size();
  QSeries out(n - 1);
  const Rational inv0 = 1 / coefficients_[0];
  out.coefficients_[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) {
      if (coefficients_[i] != 0) acc += coefficients_[i] * out.coefficients_[k - i];
    }
    out.coefficients_[k] = -acc * inv0;
  }
  return out;
}

QSeries QSeries::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  QSeries result = constant(1, truncation_order());
  QSeries base = *this;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::optional<std::size_t> first_difference(const QSeries& a, const QSeries& b) {
  if (a.truncation_order() != b.truncation_order()) {
    throw SeriesError("comparison of series with mismatched truncation orders");
  }
  for (std::size_t k = 0; k <= a.truncation_order(); ++k) {
    if (a[k] != b[k]) return k;
  }
  return std::nullopt;
}

std::string to_string(const QSeries& series) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k <= series.truncation_order(); ++k) {
    const Rational& c = series[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && k != 0;
    if (!unit) {
      out << to_string(mag);
      if (k != 0) out << "*";
    }
    if (k == 1) out << "q";
    if (k > 1) out << "q^" << k;
  }
  if (first) out << "0";
  out << " + O(q^" << series.truncation_order() + 1 << ")";
  return out.str();
}

}  // namespace bzeta::qcore
