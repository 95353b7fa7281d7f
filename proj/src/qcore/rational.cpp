#include <bzeta/qcore/rational.hpp>

#include <cctype>
#include <stdexcept>

namespace bzeta::qcore {

Rational parse_rational(const std::string& text) {
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  }
  if (trimmed.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = trimmed.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  if (slash == std::string::npos) {
    if (!valid_int(trimmed)) throw std::invalid_argument("malformed rational '" + text + "'");
    return Rational(BigInt(strip_plus(trimmed), 10));
  }
  const std::string num = trimmed.substr(0, slash);
  const std::string den = trimmed.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  BigInt d(strip_plus(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational r(BigInt(strip_plus(num), 10), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) throw std::domain_error("zero raised to a negative power");
    return Rational(0);
  }
  const auto e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

}  // namespace bzeta::qcore
