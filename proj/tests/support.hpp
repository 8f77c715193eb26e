#pragma once

// Independent oracles and deterministic random-kernel generators used by the
// unit and acceptance suites. Everything here is intentionally written the
// slow, obvious way and never calls the library code path it checks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "unitary/kernel.hpp"

namespace testsupport {

// Primality by trial division up to sqrt(n).
inline bool prime_by_trial_division(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Euler totient by directly counting coprime residues.
inline std::int64_t totient_by_count(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (std::gcd(i, n) == 1) ++count;
  }
  return count;
}

// Divisor count by direct scan.
inline std::int64_t divisor_count_by_scan(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) ++count;
  }
  return count;
}

// Coprime factorization pairs by direct scan.
inline std::vector<std::pair<std::int64_t, std::int64_t>> unitary_pairs_by_scan(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t a = 1; a <= n; ++a) {
    if (n % a == 0 && std::gcd(a, n / a) == 1) pairs.emplace_back(a, n / a);
  }
  return pairs;
}

// Distinct prime divisor count by trial division.
inline int omega_by_trial_division(std::int64_t n) {
  int count = 0;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p == 0) {
      ++count;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ++count;
  return count;
}

// Designated reference for zeta constants: the partial sum below N plus the
// first Euler-Maclaurin corrections, zeta(s) ~ sum_{n<N} n^-s
//   + N^{1-s}/(s-1) + N^{-s}/2. Error is O(|s| N^{-Re(s)-1}).
inline std::complex<double> zeta_euler_maclaurin(std::complex<double> s, std::int64_t big_n) {
  std::complex<double> acc = 0.0;
  for (std::int64_t n = 1; n < big_n; ++n) {
    const double lg = std::log(static_cast<double>(n));
    acc += std::polar(std::exp(-s.real() * lg), -s.imag() * lg);
  }
  const double lgN = std::log(static_cast<double>(big_n));
  const std::complex<double> n1ms = std::polar(std::exp((1.0 - s.real()) * lgN), -s.imag() * lgN);
  const std::complex<double> nms = std::polar(std::exp(-s.real() * lgN), -s.imag() * lgN);
  return acc + n1ms / (s - 1.0) + nms * 0.5;
}

// --- deterministic pseudo-random kernels -----------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline double unit_double(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;  // [0, 1)
}

// Point in the closed unit disk, a deterministic function of (seed, p).
inline std::complex<double> disk_point(std::uint64_t seed, std::int64_t p) {
  const std::uint64_t h1 = splitmix64(seed ^ static_cast<std::uint64_t>(p) * 0x100000001b3ULL);
  const std::uint64_t h2 = splitmix64(h1);
  const double r = std::sqrt(unit_double(h1));
  const double theta = 2.0 * 3.141592653589793238462643 * unit_double(h2);
  return std::polar(r, theta);
}

// Completely multiplicative kernel with |F(p)| <= 1 drawn from the seed.
inline unitary::Kernel random_cm_kernel(std::uint64_t seed) {
  unitary::KernelFlags fl;
  fl.completely_multiplicative = true;
  return unitary::Kernel(
      "rand_cm_" + std::to_string(seed),
      [seed](std::int64_t p, int e) {
        const std::complex<double> base = disk_point(seed, p);
        std::complex<double> v = 1.0;
        for (int i = 0; i < e; ++i) v *= base;
        return v;
      },
      0.0, fl);
}

// General multiplicative kernel with values in the unit disk per (p, e).
inline unitary::Kernel random_kernel(std::uint64_t seed) {
  return unitary::Kernel(
      "rand_" + std::to_string(seed),
      [seed](std::int64_t p, int e) {
        return disk_point(seed ^ (static_cast<std::uint64_t>(e) << 48), p);
      },
      0.0, unitary::KernelFlags{});
}

// Integer-valued multiplicative kernel with values in [-3, 3].
inline unitary::Kernel random_int_kernel(std::uint64_t seed) {
  auto value = [seed](std::int64_t p, int e) -> std::int64_t {
    const std::uint64_t h =
        splitmix64(seed ^ static_cast<std::uint64_t>(p) * 31 ^ (static_cast<std::uint64_t>(e) << 40));
    return static_cast<std::int64_t>(h % 7) - 3;
  };
  unitary::KernelFlags fl;
  fl.real_valued = true;
  fl.integer_valued = true;
  return unitary::Kernel(
      "rand_int_" + std::to_string(seed),
      [value](std::int64_t p, int e) {
        return std::complex<double>(static_cast<double>(value(p, e)));
      },
      2.0, fl, value);
}

// Completely multiplicative +/-1 kernel (integer-valued, unit growth).
inline unitary::Kernel random_sign_kernel(std::uint64_t seed) {
  auto sign = [seed](std::int64_t p) -> std::int64_t {
    return splitmix64(seed ^ static_cast<std::uint64_t>(p)) & 1 ? 1 : -1;
  };
  unitary::KernelFlags fl;
  fl.completely_multiplicative = true;
  fl.real_valued = true;
  fl.integer_valued = true;
  return unitary::Kernel(
      "rand_sign_" + std::to_string(seed),
      [sign](std::int64_t p, int e) {
        return std::complex<double>(e % 2 == 0 ? 1.0 : static_cast<double>(sign(p)));
      },
      0.0, fl,
      [sign](std::int64_t p, int e) -> std::int64_t { return e % 2 == 0 ? 1 : sign(p); });
}

}  // namespace testsupport
