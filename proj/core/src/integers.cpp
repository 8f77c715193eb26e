#include "unitary/integers.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace unitary {
namespace {

constexpr std::int64_t kTrialDivisionBound = 1'000'000;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = m > 1 ? 1 : 0;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin witness set, exact for all n < 2^64.
constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : kWitnesses) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < r - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's cycle-finding rho with fixed, deterministic parameters.
u64 brent_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 saved = x;
    int power = 1, lam = 0;
    auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      if (lam == power) {
        saved = y;
        power *= 2;
        lam = 0;
      }
      y = step(y);
      ++lam;
      u64 diff = saved > y ? saved - y : y - saved;
      if (diff == 0) break;
      d = std::gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

const std::vector<std::int64_t>& small_primes() {
  static const std::vector<std::int64_t> primes = primes_up_to(kTrialDivisionBound);
  return primes;
}

void factor_large(u64 n, std::vector<std::pair<u64, int>>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out.emplace_back(n, 1);
    return;
  }
  u64 d = brent_rho(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in addition");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in multiplication");
  }
  return r;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  if (exp < 0) throw std::domain_error("checked_pow: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

bool is_prime(std::int64_t n) { return n >= 2 && miller_rabin(static_cast<u64>(n)); }

Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::domain_error("factorize: argument must be >= 1");
  Factorization f;
  f.n = n;
  std::int64_t m = n;
  for (std::int64_t p : small_primes()) {
    if (p * p > m) break;
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      f.parts.push_back({p, e});
    }
  }
  if (m > 1) {
    if (m <= kTrialDivisionBound * kTrialDivisionBound && is_prime(m)) {
      f.parts.push_back({m, 1});
    } else {
      std::vector<std::pair<u64, int>> large;
      factor_large(static_cast<u64>(m), large);
      std::sort(large.begin(), large.end());
      for (std::size_t i = 0; i < large.size();) {
        std::size_t j = i;
        int e = 0;
        while (j < large.size() && large[j].first == large[i].first) {
          e += large[j].second;
          ++j;
        }
        f.parts.push_back({static_cast<std::int64_t>(large[i].first), e});
        i = j;
      }
    }
  }
  return f;
}

int omega(std::int64_t n) { return factorize(n).omega(); }

int v_p(std::int64_t n, std::int64_t p) {
  if (n < 1) throw std::domain_error("v_p: n must be >= 1");
  if (!is_prime(p)) throw std::domain_error("v_p: p = " + std::to_string(p) + " is not prime");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::int64_t rad(std::int64_t n) {
  std::int64_t r = 1;
  for (const auto& pp : factorize(n).parts) r = checked_mul(r, pp.p);
  return r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  Factorization f = factorize(n);
  std::vector<std::int64_t> ds{1};
  for (const auto& pp : f.parts) {
    std::size_t old = ds.size();
    std::int64_t q = 1;
    for (int i = 0; i < pp.e; ++i) {
      q = checked_mul(q, pp.p);
      for (std::size_t j = 0; j < old; ++j) ds.push_back(checked_mul(ds[j], q));
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<std::pair<std::int64_t, std::int64_t>> unitary_divisor_pairs(std::int64_t n) {
  Factorization f = factorize(n);
  const int k = f.omega();
  std::vector<std::int64_t> blocks(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) blocks[static_cast<std::size_t>(i)] = checked_pow(f.parts[static_cast<std::size_t>(i)].p, f.parts[static_cast<std::size_t>(i)].e);

  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  pairs.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::int64_t a = 1;
    for (int i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) a = checked_mul(a, blocks[static_cast<std::size_t>(i)]);
    }
    pairs.emplace_back(a, n / a);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw std::domain_error("gcd64: arguments must be >= 1");
  return std::gcd(a, b);
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (!composite[static_cast<std::size_t>(i)]) {
      primes.push_back(i);
      for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
  }
  return primes;
}

std::vector<PrimePower> prime_powers_up_to(std::int64_t limit) {
  std::vector<std::pair<std::int64_t, PrimePower>> keyed;
  for (std::int64_t p : primes_up_to(limit)) {
    std::int64_t q = p;
    int e = 1;
    while (q <= limit) {
      keyed.push_back({q, {p, e}});
      if (q > limit / p) break;
      q *= p;
      ++e;
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PrimePower> pps;
  pps.reserve(keyed.size());
  for (const auto& [q, pp] : keyed) pps.push_back(pp);
  return pps;
}

SmallestFactorSieve::SmallestFactorSieve(std::int64_t limit) {
  if (limit < 1) throw std::domain_error("SmallestFactorSieve: limit must be >= 1");
  if (limit > std::numeric_limits<std::int32_t>::max()) {
    throw std::domain_error("SmallestFactorSieve: limit too large");
  }
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf_[static_cast<std::size_t>(i)] == 0) {
      spf_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i);
      primes_.push_back(i);
    }
    for (std::int64_t p : primes_) {
      if (p > spf_[static_cast<std::size_t>(i)] || i * p > limit) break;
      spf_[static_cast<std::size_t>(i * p)] = static_cast<std::int32_t>(p);
    }
  }
}

Factorization SmallestFactorSieve::factorize(std::int64_t n) const {
  if (n < 1 || n > limit()) throw std::domain_error("SmallestFactorSieve: n out of range");
  Factorization f;
  f.n = n;
  while (n > 1) {
    std::int64_t p = spf_[static_cast<std::size_t>(n)];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.parts.push_back({p, e});
  }
  return f;
}

}  // namespace unitary
