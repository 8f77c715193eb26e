#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "unitary/kernel.hpp"

namespace unitary::catalog {

/// Constant function 1; neutral element of pointwise multiplication.
Kernel one();

/// delta_1: 1 at n = 1, 0 elsewhere; neutral element of the box addition.
Kernel delta1();

/// Identity n -> n.
Kernel id();

/// n -> n^s for a fixed complex exponent s.
Kernel id_power(std::complex<double> s);

/// n -> 2^omega(n).
Kernel two_omega();

/// n -> (-1)^omega(n) / rad(n).
Kernel mob_rad();

/// Multiplicative function with prime-power values cos(y ln p^e).
Kernel cosa(double y);

/// Multiplicative function with prime-power values sin(y ln p^e).
Kernel sina(double y);

/// Euler totient, exact at prime powers: p^e - p^{e-1}.
Kernel phi();

/// Indicator of the prime set: 1 at p^e when p is listed, else 0.
Kernel indicator_primes(std::vector<std::int64_t> primes);

/// Indicator of the complement: 1 at p^e when p is NOT listed.
Kernel indicator_primes_complement(std::vector<std::int64_t> primes);

/// Indicator of a single integer's prime-power pattern: value 1 at p^e
/// exactly when p^e is a full prime-power block of n. indicator_of(1) is
/// delta1. These are the probe functions used by the weight axiom checks.
Kernel indicator_of(std::int64_t n);

}  // namespace unitary::catalog
