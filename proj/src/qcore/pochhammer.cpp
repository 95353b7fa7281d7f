#include <bzeta/qcore/pochhammer.hpp>

#include <bzeta/qcore/combinatorics.hpp>

#include <stdexcept>

namespace bzeta::qcore {

QSeries q_pochhammer(const Monomial& a, std::size_t n, std::size_t order, std::int64_t base) {
  QSeries product = QSeries::constant(1, order);
  const QSeries one = QSeries::constant(1, order);
  for (std::size_t j = 0; j < n; ++j) {
    const Monomial term{a.coefficient, a.exponent + base * static_cast<std::int64_t>(j)};
    product *= one - QSeries::monomial(term, order);
  }
  return product;
}

QSeries q_pochhammer(const QSeries& a, std::size_t n, std::int64_t base) {
  const std::size_t order = a.truncation_order();
  QSeries product = QSeries::constant(1, order);
  const QSeries one = QSeries::constant(1, order);
  for (std::size_t j = 0; j < n; ++j) {
    product *= one - a.times(Monomial::q_power(base * static_cast<std::int64_t>(j)));
  }
  return product;
}

Rational q_pochhammer(const Rational& a, const Rational& q, std::size_t n) {
  Rational product(1);
  Rational aqj = a;
  for (std::size_t j = 0; j < n; ++j) {
    product *= 1 - aqj;
    aqj *= q;
  }
  return product;
}

Rational q_integer(std::size_t r, const Rational& q) {
  if (r == 0) throw std::invalid_argument("q-integer [r]_q requires r >= 1");
  Rational total;
  Rational power(1);
  for (std::size_t k = 0; k < r; ++k) {
    total += power;
    power *= q;
  }
  return total;
}

QSeries q_integer(std::size_t r, std::size_t order) {
  if (r == 0) throw std::invalid_argument("q-integer [r]_q requires r >= 1");
  QSeries s(order);
  for (std::size_t k = 0; k < r && k <= order; ++k) s[k] = 1;
  return s;
}

std::vector<Rational> pochhammer_scaling_limit_check(std::size_t m,
                                                     std::span<const Rational> q_grid) {
  if (q_grid.empty()) throw std::invalid_argument("empty q grid");
  const Rational m_factorial(factorial(m));
  std::vector<Rational> deviations;
  deviations.reserve(q_grid.size());
  for (const Rational& q : q_grid) {
    if (q <= 0 || q >= 1) throw std::invalid_argument("grid point outside (0,1)");
    const Rational ratio = q_pochhammer(q, q, m) / pow(Rational(1 - q), static_cast<std::int64_t>(m));
    deviations.push_back(abs(ratio - m_factorial));
  }
  return deviations;
}

}  // namespace bzeta::qcore
