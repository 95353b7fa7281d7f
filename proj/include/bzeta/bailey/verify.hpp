#pragma once

#include <bzeta/bailey/pair.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bzeta::bailey {

struct VerificationReport {
  enum class Status { verified, mismatch, inconclusive };

  Status status = Status::verified;
  std::size_t depth = 0;
  std::string algebra;
  /// First failing n and where its coefficients diverge.
  std::optional<std::size_t> mismatch_n;
  std::optional<ElementMismatch> mismatch;
  /// n values where both sides vanish at this truncation, so nothing was compared.
  std::vector<std::size_t> vacuous;

  bool ok() const { return status == Status::verified; }
  std::string summary() const;
};

std::string to_string(VerificationReport::Status status);

namespace detail {

template <typename Algebra, typename Recompute>
VerificationReport verify_relation(const Algebra& alg,
                                   const Sequence<typename Algebra::Element>& beta,
                                   std::size_t depth, Recompute recompute) {
  VerificationReport report;
  report.depth = depth;
  report.algebra = alg.describe();
  for (std::size_t n = 0; n <= depth; ++n) {
    const typename Algebra::Element given = beta(n);
    const typename Algebra::Element expected = recompute(n);
    if (auto diff = alg.compare(expected, given)) {
      report.status = VerificationReport::Status::mismatch;
      report.mismatch_n = n;
      report.mismatch = std::move(diff);
      return report;
    }
    if constexpr (Algebra::kTruncates) {
      if (alg.is_zero(given)) report.vacuous.push_back(n);
    }
  }
  if (report.vacuous.size() == depth + 1) report.status = VerificationReport::Status::inconclusive;
  return report;
}

}  // namespace detail

/// Recomputes beta_n from alpha for n = 0..depth and compares coefficientwise.
/// Stops at the first mismatch. If every comparison agrees but every beta_n
/// vanishes at this truncation, nothing was compared and the result is
/// inconclusive. Exact algebras never report vacuous indices.
template <typename Algebra>
VerificationReport verify_pair(const Algebra& alg, const BaileyPair<Algebra>& pair,
                               std::size_t depth) {
  return detail::verify_relation(alg, pair.beta, depth, [&](std::size_t n) {
    return beta_from_alpha(alg, pair.alpha, pair.a, n);
  });
}

template <typename Algebra>
VerificationReport verify_pair(const Algebra& alg, const BaileyZetaPair<Algebra>& pair,
                               std::size_t depth) {
  return detail::verify_relation(alg, pair.beta, depth, [&](std::size_t n) {
    return zeta_beta_from_alpha(alg, pair.alpha, pair.a, n);
  });
}

template <typename Algebra>
struct CandidateOutcome {
  Monomial a;
  VerificationReport report;
};

/// Runs verify_pair for each candidate a on the same (alpha, beta) sequences.
template <typename Algebra>
std::vector<CandidateOutcome<Algebra>> search_a_param(
    const Algebra& alg, const std::string& name,
    const Sequence<typename Algebra::Element>& alpha,
    const Sequence<typename Algebra::Element>& beta, const std::vector<Monomial>& candidates,
    std::size_t depth) {
  std::vector<CandidateOutcome<Algebra>> outcomes;
  for (const Monomial& a : candidates) {
    BaileyPair<Algebra> pair{name, a, alpha, beta};
    outcomes.push_back({a, verify_pair(alg, pair, depth)});
  }
  return outcomes;
}

}  // namespace bzeta::bailey
