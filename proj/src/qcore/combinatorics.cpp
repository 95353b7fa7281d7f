#include <bzeta/qcore/combinatorics.hpp>

#include <mutex>

namespace bzeta::qcore {

Combinatorics& Combinatorics::shared() {
  static Combinatorics instance;
  return instance;
}

BigInt Combinatorics::factorial(std::size_t m) {
  {
    std::shared_lock lock(mutex_);
    if (m < factorials_.size()) return factorials_[m];
  }
  std::unique_lock lock(mutex_);
  factorials_.reserve(m + 1);
  while (factorials_.size() <= m) {
    factorials_.push_back(factorials_.back() * static_cast<unsigned long>(factorials_.size()));
  }
  return factorials_[m];
}

BigInt Combinatorics::binomial(std::size_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
  const auto kk = static_cast<std::size_t>(k);
  return factorial(n) / (factorial(kk) * factorial(n - kk));
}

std::size_t Combinatorics::cached_size() const {
  std::shared_lock lock(mutex_);
  return factorials_.size();
}

BigInt big_binomial(std::size_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(std::size_t m) { return Combinatorics::shared().factorial(m); }

}  // namespace bzeta::qcore
