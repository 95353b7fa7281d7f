#include <bzeta/bailey/algebra.hpp>
#include <bzeta/bailey/pair.hpp>
#include <bzeta/bailey/verify.hpp>

#include <sstream>

namespace bzeta::bailey {

SeriesAlgebra::Element SeriesAlgebra::inverse(const Element& e) const {
  if (e[0] == 0) {
    throw DegenerateDenominator("denominator series " + qcore::to_string(e) +
                                " has zero constant term");
  }
  return e.inverse();
}

SeriesAlgebra::Element SeriesAlgebra::pow(const Element& e, std::int64_t k) const {
  if (k < 0) return inverse(e).pow(-k);
  return e.pow(k);
}

SeriesAlgebra::Element SeriesAlgebra::divide_by_q_power(const Element& e, std::size_t k) const {
  if (k == 0) return e;
  throw qcore::SeriesError("division by q^" + std::to_string(k) +
                           " is not exact at fixed truncation order");
}

std::optional<ElementMismatch> SeriesAlgebra::compare(const Element& expected,
                                                      const Element& actual) const {
  const auto power = qcore::first_difference(expected, actual);
  if (!power) return std::nullopt;
  return ElementMismatch{power, qcore::to_string(expected[*power]), qcore::to_string(actual[*power])};
}

RationalAlgebra::RationalAlgebra(Rational q) : q_(std::move(q)) {
  if (q_ <= 0 || q_ >= 1) throw std::invalid_argument("evaluation point q must lie in (0,1)");
}

RationalAlgebra::Element RationalAlgebra::inverse(const Element& e) const {
  if (e == 0) throw DegenerateDenominator("denominator vanishes at " + describe());
  return 1 / e;
}

RationalAlgebra::Element RationalAlgebra::pow(const Element& e, std::int64_t k) const {
  if (k < 0 && e == 0) throw DegenerateDenominator("zero raised to a negative power");
  return qcore::pow(e, k);
}

std::optional<ElementMismatch> RationalAlgebra::compare(const Element& expected,
                                                        const Element& actual) const {
  if (expected == actual) return std::nullopt;
  return ElementMismatch{std::nullopt, qcore::to_string(expected), qcore::to_string(actual)};
}

void ChainParameters::validate() const {
  if (rho1.is_zero() || rho2.is_zero()) {
    throw std::invalid_argument("chain parameters require rho1 * rho2 != 0");
  }
}

std::string to_string(VerificationReport::Status status) {
  switch (status) {
    case VerificationReport::Status::verified: return "verified";
    case VerificationReport::Status::mismatch: return "mismatch";
    case VerificationReport::Status::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << to_string(status) << " (depth " << depth << ", " << algebra << ")";
  if (status == Status::mismatch && mismatch_n && mismatch) {
    out << ": first mismatch at n=" << *mismatch_n;
    if (mismatch->power) out << ", power q^" << *mismatch->power;
    out << " (expected " << mismatch->expected << ", got " << mismatch->actual << ")";
  }
  if (status == Status::inconclusive) {
    out << ": beta vanishes at truncation for n =";
    for (std::size_t n : vacuous) out << ' ' << n;
  }
  return out.str();
}

}  // namespace bzeta::bailey
