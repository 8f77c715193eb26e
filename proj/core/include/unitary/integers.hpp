#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace unitary {

/// One prime-power part of a factorization: p^e with p prime and e >= 1.
struct PrimePower {
  std::int64_t p = 0;
  int e = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical decomposition n = prod p_i^{e_i}, primes strictly increasing.
/// The part list is empty exactly when n = 1.
struct Factorization {
  std::int64_t n = 1;
  std::vector<PrimePower> parts;

  int omega() const { return static_cast<int>(parts.size()); }
};

// Overflow-checked arithmetic on signed 64-bit values. Silent wraparound is
// never acceptable in this library; these throw std::overflow_error instead.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, int exp);

/// Deterministic primality test, exact for every n < 2^63.
bool is_prime(std::int64_t n);

/// Factorize 1 <= n < 2^63. Trial division by sieved small primes, then a
/// deterministic Miller-Rabin / Brent-rho split for large cofactors.
/// Throws std::domain_error for n < 1.
Factorization factorize(std::int64_t n);

/// Number of distinct prime divisors; omega(1) = 0.
int omega(std::int64_t n);

/// Exponent of the prime p in n (0 when p does not divide n).
/// Throws std::domain_error when p is not prime.
int v_p(std::int64_t n, std::int64_t p);

/// Product of the distinct primes dividing n; rad(1) = 1.
std::int64_t rad(std::int64_t n);

/// All divisors of n in ascending order, fully materialized.
std::vector<std::int64_t> divisors(std::int64_t n);

/// All ordered pairs (a, b) with ab = n and gcd(a, b) = 1, sorted by a.
/// There are exactly 2^omega(n) of them.
std::vector<std::pair<std::int64_t, std::int64_t>> unitary_divisor_pairs(std::int64_t n);

/// gcd for a, b >= 1.
std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// All primes <= limit, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

/// All prime powers p^e <= limit (e >= 1), ascending.
std::vector<PrimePower> prime_powers_up_to(std::int64_t limit);

/// Smallest-prime-factor sieve for bulk factorization of 1..limit.
class SmallestFactorSieve {
 public:
  explicit SmallestFactorSieve(std::int64_t limit);

  std::int64_t limit() const { return static_cast<std::int64_t>(spf_.size()) - 1; }
  std::int32_t smallest_factor(std::int64_t n) const { return spf_[static_cast<std::size_t>(n)]; }
  Factorization factorize(std::int64_t n) const;
  const std::vector<std::int64_t>& primes() const { return primes_; }

 private:
  std::vector<std::int32_t> spf_;
  std::vector<std::int64_t> primes_;
};

}  // namespace unitary
