#pragma once

#include <bzeta/qcore/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <shared_mutex>
#include <vector>

namespace bzeta::qcore {

/// Exact factorial cache shared across threads.
///
/// The table only grows; concurrent lookups take a shared lock and extension
/// takes the exclusive lock.
class Combinatorics {
 public:
  static Combinatorics& shared();

  BigInt factorial(std::size_t m);
  /// C(n, k), zero outside 0 <= k <= n.
  BigInt binomial(std::size_t n, std::int64_t k);

  std::size_t cached_size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::vector<BigInt> factorials_{BigInt(1)};
};

/// C(n, k) as an exact integer; zero when k < 0 or k > n.
BigInt big_binomial(std::size_t n, std::int64_t k);

BigInt factorial(std::size_t m);

}  // namespace bzeta::qcore
