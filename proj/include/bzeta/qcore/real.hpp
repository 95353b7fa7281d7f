#pragma once

#include <bzeta/qcore/rational.hpp>

#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bzeta::qcore {

enum class SummationPolicy { sequential_ascending, pairwise };

/// Numeric evaluation settings shared by every floating-point path.
///
/// Internal sums run at working_bits() and are rounded once to precision_bits
/// at the API boundary, so results are reproducible for a fixed policy.
struct PrecisionContext {
  static constexpr long kMinBits = 64;
  static constexpr long kGuardBits = 64;

  long precision_bits = 192;
  std::size_t truncation_order = 0;
  SummationPolicy summation_policy = SummationPolicy::sequential_ascending;

  /// Throws std::invalid_argument when precision_bits < 64.
  void validate() const;
  long working_bits() const { return precision_bits + kGuardBits; }
};

/// RAII owner of an mpfr_t. Arithmetic results carry the larger operand
/// precision and are rounded to nearest.
class Real {
 public:
  explicit Real(long bits = 64);
  Real(long value, long bits);
  Real(const BigInt& value, long bits);
  Real(const Rational& value, long bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_string(const std::string& text, long bits);
  static Real pi(long bits);

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  /// Copy rounded to nearest at the requested precision.
  Real rounded(long bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
/// x^y for real y.
Real pow(const Real& x, const Real& y);
/// 2^k exactly (k may be negative).
Real exp2i(std::int64_t k, long bits);

/// Shortest-form scientific string with the given significant digits;
/// deterministic for a fixed value and digit count.
std::string to_decimal(const Real& x, int digits);
/// Digits needed to round-trip a value of the given precision.
int decimal_digits(long bits);

/// |a - b| measured in units in the last place of max(|a|,|b|) at `bits`.
double ulp_distance(const Real& a, const Real& b, long bits);

struct Complex {
  Real re;
  Real im;

  explicit Complex(long bits = 64) : re(bits), im(bits) {}
  Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}
  static Complex from_real(Real real);

  long precision() const { return re.precision(); }
  Complex rounded(long bits) const { return {re.rounded(bits), im.rounded(bits)}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& a, Complex b) { return b *= a; }
  friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex operator-() const { return {-re, -im}; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

Real abs(const Complex& z);

/// x^s for positive real x through the principal branch of log.
Complex pow_positive(const Real& x, const Complex& s);

/// Streaming sum under a summation policy.
///
/// sequential_ascending adds terms left to right. pairwise keeps a binary
/// counter of partial sums (blocks of 1, 2, 4, ... terms) and merges equal
/// sized blocks, so the association tree depends only on the term count.
template <typename T>
class Accumulator {
 public:
  Accumulator(SummationPolicy policy, long bits) : policy_(policy), bits_(bits), total_(bits) {}

  void add(T term) {
    if (policy_ == SummationPolicy::sequential_ascending) {
      total_ += term;
      return;
    }
    std::size_t level = 0;
    while (level < levels_.size() && levels_[level].has_value()) {
      T merged = std::move(*levels_[level]);
      merged += term;
      term = std::move(merged);
      levels_[level].reset();
      ++level;
    }
    if (level == levels_.size()) levels_.emplace_back();
    levels_[level] = std::move(term);
  }

  T result() const {
    if (policy_ == SummationPolicy::sequential_ascending) return total_;
    T total(bits_);
    for (const auto& partial : levels_) {
      if (partial) total += *partial;
    }
    return total;
  }

 private:
  SummationPolicy policy_;
  long bits_;
  T total_;
  std::vector<std::optional<T>> levels_;
};

Complex sum(std::vector<Complex> terms, SummationPolicy policy, long bits);
Real sum(std::vector<Real> terms, SummationPolicy policy, long bits);

}  // namespace bzeta::qcore
