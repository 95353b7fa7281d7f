#pragma once

#include <bzeta/bailey/algebra.hpp>
#include <bzeta/bailey/sequence.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bzeta::bailey {

/// (alpha_n, beta_n) linked by
///   beta_n = sum_{r=0}^n alpha_r / ((q;q)_{n-r} (aq;q)_{n+r})
/// relative to the monomial parameter a.
template <typename Algebra>
struct BaileyPair {
  using Element = typename Algebra::Element;

  std::string name;
  Monomial a;
  Sequence<Element> alpha;
  Sequence<Element> beta;
};

/// Deformed pair: beta_n(s) = sum_{r=0}^n q^r alpha_r(s) / ((q;q)_{n-r} (aq;q)_{n+r}).
/// The s-dependence is carried by the sequences themselves; `s_label`
/// records it for reports.
template <typename Algebra>
struct BaileyZetaPair {
  using Element = typename Algebra::Element;

  std::string name;
  Monomial a;
  std::string s_label;
  Sequence<Element> alpha;
  Sequence<Element> beta;
};

struct ChainParameters {
  Monomial rho1;
  Monomial rho2;

  /// Throws std::invalid_argument when rho1 * rho2 == 0.
  void validate() const;
};

namespace detail {

template <typename Algebra>
typename Algebra::Element bailey_kernel(const Algebra& alg, const Monomial& a, std::size_t n,
                                        std::size_t r) {
  const Monomial aq = a * Monomial::q_power(1);
  return alg.inverse(alg.pochhammer(Monomial::q_power(1), n - r) * alg.pochhammer(aq, n + r));
}

inline std::int64_t choose2(std::size_t m) {
  return static_cast<std::int64_t>(m) * (static_cast<std::int64_t>(m) - 1) / 2;
}

}  // namespace detail

template <typename Algebra>
typename Algebra::Element beta_from_alpha(const Algebra& alg,
                                          const Sequence<typename Algebra::Element>& alpha,
                                          const Monomial& a, std::size_t n) {
  typename Algebra::Element total = alg.zero();
  for (std::size_t r = 0; r <= n; ++r) {
    total += alpha(r) * detail::bailey_kernel(alg, a, n, r);
  }
  return total;
}

/// alpha_n = (1 - a q^{2n}) sum_{j=0}^n (aq;q)_{n+j-1} (-1)^{n-j} q^{C(n-j,2)} beta_j / (q;q)_{n-j}.
///
/// At n = 0 the prefactor (1-a)(aq;q)_{-1} collapses to 1, so alpha_0 = beta_0
/// even for a = 1.
template <typename Algebra>
typename Algebra::Element alpha_from_beta(const Algebra& alg,
                                          const Sequence<typename Algebra::Element>& beta,
                                          const Monomial& a, std::size_t n) {
  if (n == 0) return beta(0);
  const Monomial aq = a * Monomial::q_power(1);
  const Monomial q = Monomial::q_power(1);
  typename Algebra::Element total = alg.zero();
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t m = n - j;
    const Monomial sign_power{Rational(m % 2 == 0 ? 1 : -1), detail::choose2(m)};
    typename Algebra::Element term = alg.pochhammer(aq, n + j - 1) * alg.monomial(sign_power) * beta(j);
    total += term * alg.inverse(alg.pochhammer(q, m));
  }
  const Monomial aq2n = a * Monomial::q_power(2 * static_cast<std::int64_t>(n));
  return (alg.scalar(1) - alg.monomial(aq2n)) * total;
}

template <typename Algebra>
typename Algebra::Element zeta_beta_from_alpha(const Algebra& alg,
                                               const Sequence<typename Algebra::Element>& alpha,
                                               const Monomial& a, std::size_t n) {
  typename Algebra::Element total = alg.zero();
  for (std::size_t r = 0; r <= n; ++r) {
    const typename Algebra::Element qr = alg.monomial(Monomial::q_power(static_cast<std::int64_t>(r)));
    total += qr * alpha(r) * detail::bailey_kernel(alg, a, n, r);
  }
  return total;
}

/// Pair whose beta is generated from alpha through the Bailey relation.
template <typename Algebra>
BaileyPair<Algebra> pair_from_alpha(const Algebra& alg, std::string name, const Monomial& a,
                                    Sequence<typename Algebra::Element> alpha) {
  using E = typename Algebra::Element;
  Sequence<E> beta([alg, a, alpha](std::size_t n) -> E { return beta_from_alpha(alg, alpha, a, n); });
  return {std::move(name), a, std::move(alpha), std::move(beta)};
}

/// Pair whose alpha is generated from beta through the inversion relation.
template <typename Algebra>
BaileyPair<Algebra> pair_from_beta(const Algebra& alg, std::string name, const Monomial& a,
                                   Sequence<typename Algebra::Element> beta) {
  using E = typename Algebra::Element;
  Sequence<E> alpha([alg, a, beta](std::size_t n) -> E { return alpha_from_beta(alg, beta, a, n); });
  return {std::move(name), a, std::move(alpha), std::move(beta)};
}

/// alpha = (1, 0, 0, ...), beta_n = 1/((q;q)_n (aq;q)_n).
template <typename Algebra>
BaileyPair<Algebra> unit_pair(const Algebra& alg, const Monomial& a) {
  using E = typename Algebra::Element;
  Sequence<E> alpha([alg](std::size_t n) -> E { return n == 0 ? alg.scalar(1) : alg.zero(); });
  Sequence<E> beta([alg, a](std::size_t n) -> E {
    return alg.inverse(alg.pochhammer(Monomial::q_power(1), n) *
                       alg.pochhammer(a * Monomial::q_power(1), n));
  });
  return {"unit", a, std::move(alpha), std::move(beta)};
}

/// alpha_n = q^{n^2+n} sum_{j=-n}^{n} (-1)^j q^{-j^2}, beta_n = (-q)^n / (q^2;q^2)_n,
/// attached to a caller-chosen a. Whether it is a Bailey pair for that a is for
/// verify_pair to decide.
template <typename Algebra>
BaileyPair<Algebra> andrews_askey_roy_pair(const Algebra& alg, const Monomial& a) {
  using E = typename Algebra::Element;
  Sequence<E> alpha([alg](std::size_t n) -> E {
    const auto nn = static_cast<std::int64_t>(n);
    typename Algebra::Element total = alg.zero();
    for (std::int64_t j = -nn; j <= nn; ++j) {
      total += alg.monomial(Monomial{Rational(j % 2 == 0 ? 1 : -1), nn * nn + nn - j * j});
    }
    return total;
  });
  Sequence<E> beta([alg](std::size_t n) -> E {
    E denom = alg.scalar(1);
    for (std::size_t i = 1; i <= n; ++i) {
      denom *= alg.scalar(1) - alg.monomial(Monomial::q_power(2 * static_cast<std::int64_t>(i)));
    }
    const auto nn = static_cast<std::int64_t>(n);
    return alg.monomial(Monomial{Rational(n % 2 == 0 ? 1 : -1), nn}) * alg.inverse(denom);
  });
  return {"andrews-askey-roy", a, std::move(alpha), std::move(beta)};
}

/// One step of the Bailey chain with parameters (rho1, rho2):
///   alpha'_n = (rho1)_n (rho2)_n m^n alpha_n / ((aq/rho1)_n (aq/rho2)_n),
///   beta'_n  = sum_j (rho1)_j (rho2)_j (m)_{n-j} m^j beta_j / ((q)_{n-j} (aq/rho1)_n (aq/rho2)_n),
/// with m = aq/(rho1 rho2) and all Pochhammer symbols in base q.
template <typename Algebra>
BaileyPair<Algebra> chain_step(const Algebra& alg, const BaileyPair<Algebra>& pair,
                               const ChainParameters& params) {
  using E = typename Algebra::Element;
  params.validate();
  const Monomial a = pair.a;
  const Monomial aq = a * Monomial::q_power(1);
  const Monomial m = aq / (params.rho1 * params.rho2);
  const Monomial aq_rho1 = aq / params.rho1;
  const Monomial aq_rho2 = aq / params.rho2;
  const Monomial rho1 = params.rho1;
  const Monomial rho2 = params.rho2;

  Sequence<E> alpha([=, src = pair.alpha](std::size_t n) -> E {
    const auto nn = static_cast<std::int64_t>(n);
    E num = alg.pochhammer(rho1, n) * alg.pochhammer(rho2, n) * alg.monomial(m.pow(nn));
    E den = alg.pochhammer(aq_rho1, n) * alg.pochhammer(aq_rho2, n);
    return num * src(n) * alg.inverse(den);
  });
  Sequence<E> beta([=, src = pair.beta](std::size_t n) -> E {
    const E common = alg.inverse(alg.pochhammer(aq_rho1, n) * alg.pochhammer(aq_rho2, n));
    typename Algebra::Element total = alg.zero();
    for (std::size_t j = 0; j <= n; ++j) {
      const auto jj = static_cast<std::int64_t>(j);
      E num = alg.pochhammer(rho1, j) * alg.pochhammer(rho2, j) * alg.pochhammer(m, n - j) *
                 alg.monomial(m.pow(jj)) * src(j);
      total += num * alg.inverse(alg.pochhammer(Monomial::q_power(1), n - j));
    }
    return total * common;
  });
  return {pair.name + "+chain", a, std::move(alpha), std::move(beta)};
}

/// (alpha_n(s), beta_n(s)) -> (q^n alpha_n(s), beta_n(s)).
template <typename Algebra>
BaileyPair<Algebra> zeta_to_classical(const Algebra& alg, const BaileyZetaPair<Algebra>& zp) {
  using E = typename Algebra::Element;
  Sequence<E> alpha([alg, src = zp.alpha](std::size_t n) -> E {
    return alg.monomial(Monomial::q_power(static_cast<std::int64_t>(n))) * src(n);
  });
  return {zp.name, zp.a, std::move(alpha), zp.beta};
}

/// Inverse of zeta_to_classical. Over truncated series the division by q^n
/// is not exact and throws qcore::SeriesError.
template <typename Algebra>
BaileyZetaPair<Algebra> classical_to_zeta(const Algebra& alg, const BaileyPair<Algebra>& pair,
                                          std::string s_label) {
  using E = typename Algebra::Element;
  Sequence<E> alpha(
      [alg, src = pair.alpha](std::size_t n) -> E { return alg.divide_by_q_power(src(n), n); });
  return {pair.name, pair.a, std::move(s_label), std::move(alpha), pair.beta};
}

template <typename Algebra>
BaileyZetaPair<Algebra> zeta_pair_from_alpha(const Algebra& alg, std::string name,
                                             const Monomial& a, std::string s_label,
                                             Sequence<typename Algebra::Element> alpha) {
  using E = typename Algebra::Element;
  Sequence<E> beta(
      [alg, a, alpha](std::size_t n) -> E { return zeta_beta_from_alpha(alg, alpha, a, n); });
  return {std::move(name), a, std::move(s_label), std::move(alpha), std::move(beta)};
}

}  // namespace bzeta::bailey
