#include <bzeta/qcore/real.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bzeta::qcore {

void PrecisionContext::validate() const {
  if (precision_bits < kMinBits) {
    throw std::invalid_argument("precision_bits must be >= " + std::to_string(kMinBits));
  }
}

Real::Real(long bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, long bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const BigInt& value, long bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value, long bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_string(const std::string& text, long bits) {
  Real r(bits);
  if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("malformed real literal '" + text + "'");
  }
  return r;
}

Real Real::pi(long bits) {
  Real r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::rounded(long bits) const {
  Real r(bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

namespace {

long max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

template <typename Op>
Real binary(const Real& a, const Real& b, Op op) {
  Real r(max_prec(a, b));
  op(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

template <typename Op>
Real unary(const Real& x, Op op) {
  Real r(x.precision());
  op(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }
Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real pow(const Real& x, const Real& y) { return binary(x, y, mpfr_pow); }

Real exp2i(std::int64_t k, long bits) {
  Real r(bits);
  mpfr_set_ui_2exp(r.get(), 1, static_cast<mpfr_exp_t>(k), MPFR_RNDN);
  return r;
}

std::string to_decimal(const Real& x, int digits) {
  char* buffer = nullptr;
  const int len = mpfr_asprintf(&buffer, "%.*Re", digits - 1, x.get());
  if (len < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buffer, static_cast<std::size_t>(len));
  mpfr_free_str(buffer);
  return out;
}

int decimal_digits(long bits) {
  return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30102999566398120)) + 1;
}

double ulp_distance(const Real& a, const Real& b, long bits) {
  const long work = std::max({a.precision(), b.precision(), bits}) + 16;
  Real diff = abs(a.rounded(work) - b.rounded(work));
  if (diff.is_zero()) return 0.0;
  const Real scale = std::max(abs(a), abs(b));
  if (scale.is_zero()) return std::numeric_limits<double>::infinity();
  // ulp(x) = 2^(e - bits) where x = m * 2^e with 1/2 <= |m| < 1.
  const mpfr_exp_t e = mpfr_get_exp(scale.get());
  Real ulp = exp2i(static_cast<std::int64_t>(e) - bits, work);
  return (diff / ulp).to_double();
}

Complex Complex::from_real(Real real) {
  const long bits = real.precision();
  return {std::move(real), Real(bits)};
}

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real r = re * rhs.re - im * rhs.im;
  Real i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Complex operator/(const Complex& a, const Complex& b) {
  const Real denom = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom};
}

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Complex pow_positive(const Real& x, const Complex& s) {
  if (x.sign() <= 0) throw std::domain_error("pow_positive requires a positive base");
  if (s.im.is_zero()) return Complex::from_real(pow(x, s.re));
  const Real lx = log(x);
  const Real modulus = exp(s.re * lx);
  const Real angle = s.im * lx;
  return {modulus * cos(angle), modulus * sin(angle)};
}

Complex sum(std::vector<Complex> terms, SummationPolicy policy, long bits) {
  Accumulator<Complex> acc(policy, bits);
  for (auto& t : terms) acc.add(std::move(t));
  return acc.result();
}

Real sum(std::vector<Real> terms, SummationPolicy policy, long bits) {
  Accumulator<Real> acc(policy, bits);
  for (auto& t : terms) acc.add(std::move(t));
  return acc.result();
}

}  // namespace bzeta::qcore
