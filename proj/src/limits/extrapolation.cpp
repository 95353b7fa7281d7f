#include <bzeta/limits/extrapolation.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bzeta::limits {

std::string to_string(ExtrapolationMethod method) {
  switch (method) {
    case ExtrapolationMethod::polynomial: return "polynomial";
    case ExtrapolationMethod::asymptotic: return "asymptotic";
  }
  return "unknown";
}

ExtrapolationMethod parse_extrapolation_method(const std::string& name) {
  if (name == "polynomial") return ExtrapolationMethod::polynomial;
  if (name == "asymptotic") return ExtrapolationMethod::asymptotic;
  throw std::invalid_argument("unknown extrapolation method '" + name + "'");
}

std::string describe(const ExtrapolationConfig& config) {
  const std::string kind =
      config.method == ExtrapolationMethod::polynomial ? "neville" : "asymptotic-richardson";
  return kind + "(h=n^-1/2,order=" + std::to_string(config.order) + ")";
}

std::vector<AsymptoticTerm> asymptotic_terms(const Complex& s, bool has_pole, std::size_t count,
                                             long bits) {
  std::vector<Complex> exponents;
  for (std::size_t j = 0; j < count; ++j) {
    const Real shift(static_cast<long>(2 * j), bits);
    if (has_pole) exponents.push_back({s.re.rounded(bits) - Real(1, bits) + shift, s.im.rounded(bits)});
    exponents.push_back(Complex::from_real(shift + Real(2, bits)));
  }
  std::stable_sort(exponents.begin(), exponents.end(), [](const Complex& a, const Complex& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });

  std::vector<AsymptoticTerm> terms;
  for (std::size_t i = 0; i < exponents.size() && terms.size() < count; ++i) {
    const bool repeated = i > 0 && exponents[i] == exponents[i - 1];
    terms.push_back({exponents[i], repeated ? 1u : 0u});
  }
  return terms;
}

ExtrapolationResult neville_at_zero(std::span<const Real> x, std::span<const Complex> y,
                                    std::size_t order, long bits) {
  if (x.size() != y.size()) throw std::invalid_argument("neville: mismatched point counts");
  if (x.size() < order + 1) {
    throw std::invalid_argument("neville: order " + std::to_string(order) + " needs " +
                                std::to_string(order + 1) + " points, got " +
                                std::to_string(x.size()));
  }
  const std::size_t first = x.size() - (order + 1);
  std::vector<Real> xs;
  std::vector<Complex> p;
  for (std::size_t i = first; i < x.size(); ++i) {
    xs.push_back(x[i].rounded(bits));
    p.push_back(y[i].rounded(bits));
  }
  // After level k, p[i] holds the value at 0 of the interpolant through points i..i+k.
  Complex previous = p.back();
  for (std::size_t k = 1; k <= order; ++k) {
    for (std::size_t i = 0; i + k <= order; ++i) {
      const Real& xi = xs[i];
      const Real& xj = xs[i + k];
      p[i] = (p[i + 1] * xi - p[i] * xj) / (xi - xj);
    }
    if (k + 1 == order) previous = p[1];
  }
  if (order == 1) previous = y.back().rounded(bits);
  Complex value = p[0];
  Real error = order == 0 ? (x.size() > 1 ? qcore::abs(y[y.size() - 1] - y[y.size() - 2])
                                          : qcore::abs(value))
                          : qcore::abs(value - previous);
  return {std::move(value), error.rounded(bits)};
}

namespace {

Complex basis_value(const Real& h, const AsymptoticTerm& term, long bits) {
  Complex value = qcore::pow_positive(h, term.exponent);
  const Real lh = qcore::log(h);
  for (unsigned p = 0; p < term.log_power; ++p) value *= lh;
  return value.rounded(bits);
}

// Solves A x = b by Gaussian elimination with partial pivoting; returns x[0].
Complex solve_first(std::vector<std::vector<Complex>> a, std::vector<Complex> b, long bits) {
  const std::size_t m = b.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    Real best = qcore::abs(a[col][col]);
    for (std::size_t row = col + 1; row < m; ++row) {
      Real candidate = qcore::abs(a[row][col]);
      if (candidate > best) {
        best = std::move(candidate);
        pivot = row;
      }
    }
    if (best.is_zero()) throw std::domain_error("asymptotic fit: singular system");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t row = col + 1; row < m; ++row) {
      const Complex factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < m; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Complex> x(m, Complex(bits));
  for (std::size_t i = m; i-- > 0;) {
    Complex acc = b[i];
    for (std::size_t k = i + 1; k < m; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return x[0];
}

Complex fit_value(std::span<const Real> h, std::span<const Complex> y,
                  std::span<const AsymptoticTerm> terms, long bits) {
  const std::size_t m = terms.size() + 1;
  const std::size_t first = h.size() - m;
  std::vector<std::vector<Complex>> a;
  std::vector<Complex> b;
  for (std::size_t i = first; i < h.size(); ++i) {
    std::vector<Complex> row;
    row.push_back(Complex::from_real(Real(1, bits)));
    for (const auto& term : terms) row.push_back(basis_value(h[i].rounded(bits), term, bits));
    a.push_back(std::move(row));
    b.push_back(y[i].rounded(bits));
  }
  return solve_first(std::move(a), std::move(b), bits);
}

}  // namespace

ExtrapolationResult fit_at_zero(std::span<const Real> h, std::span<const Complex> y,
                                std::span<const AsymptoticTerm> terms, long bits) {
  if (h.size() != y.size()) throw std::invalid_argument("asymptotic fit: mismatched point counts");
  if (h.size() < terms.size() + 1) {
    throw std::invalid_argument("asymptotic fit: " + std::to_string(terms.size()) + " terms need " +
                                std::to_string(terms.size() + 1) + " points, got " +
                                std::to_string(h.size()));
  }
  Complex value = fit_value(h, y, terms, bits);
  Real error(bits);
  if (terms.empty()) {
    error = h.size() > 1 ? qcore::abs(y[y.size() - 1] - y[y.size() - 2]) : qcore::abs(value);
  } else {
    const Complex reduced = fit_value(h, y, terms.first(terms.size() - 1), bits);
    error = qcore::abs(value - reduced);
  }
  return {std::move(value), error.rounded(bits)};
}

ExtrapolationResult extrapolate(const ExtrapolationConfig& config, std::span<const std::size_t> n,
                                std::span<const Complex> values, const Complex& s, bool has_pole,
                                long bits) {
  if (n.size() != values.size()) throw std::invalid_argument("extrapolate: mismatched point counts");
  if (n.size() < config.order + 1) {
    throw std::invalid_argument("schedule has " + std::to_string(n.size()) +
                                " points; extrapolation order " + std::to_string(config.order) +
                                " needs at least " + std::to_string(config.order + 1));
  }
  std::vector<Real> h;
  h.reserve(n.size());
  for (const auto point : n) {
    h.push_back(Real(1, bits) / qcore::sqrt(Real(static_cast<long>(point), bits)));
  }
  if (config.method == ExtrapolationMethod::polynomial) {
    return neville_at_zero(h, values, config.order, bits);
  }
  const auto terms = asymptotic_terms(s, has_pole, config.order, bits);
  return fit_at_zero(h, values, terms, bits);
}

}  // namespace bzeta::limits
