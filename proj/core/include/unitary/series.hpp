#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitary/kernel.hpp"

namespace unitary {

/// Truncated Dirichlet series: value is the exact partial sum of F(n)/n^s
/// for n <= truncation, and tail_bound certifies the discarded remainder by
/// the integral test, tail <= N^{1+c-sigma} / (sigma - c - 1).
struct SeriesValue {
  std::complex<double> value;
  double tail_bound = 0.0;
  std::int64_t truncation = 0;
  double sigma = 0.0;
  double growth = 0.0;
};

/// Evaluate the partial sum with compensated, ascending-order accumulation.
/// Chunks may be summed on up to max_threads workers; chunk partials are
/// always reduced in fixed ascending order, so the result is bit-identical
/// for every thread count. Throws std::domain_error when Re(s) is not
/// strictly above growth + 1 or when the truncation point is below the
/// kernel's growth certification point.
SeriesValue series_eval(const Kernel& f, std::complex<double> s, std::int64_t truncation,
                        int max_threads = 1);

struct IdentityReport {
  std::string identity;
  std::complex<double> s;
  std::int64_t truncation = 0;
  std::complex<double> lhs;
  std::complex<double> rhs;
  double abs_err = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// D(F,s) D(G,s) versus D(F x G, 2s) D(F box G, s) for completely
/// multiplicative F, G (flags are required). Tolerance combines the four
/// certified tails through the products plus 1e-9 float slack.
IdentityReport verify_refactorization(const Kernel& f, const Kernel& g, std::complex<double> s,
                                      std::int64_t truncation, int max_threads = 1);

/// D(F,s) D(G, conj(s)) versus D(F x G, 2x) D(F x Id^{-iy} box G x Id^{iy}, x)
/// with s = x + iy; F, G completely multiplicative.
IdentityReport verify_realimsplit(const Kernel& f, const Kernel& g, std::complex<double> s,
                                  std::int64_t truncation, int max_threads = 1);

/// |zeta(z)|^2 versus zeta(2x) * sum_{m<=N} 2^omega(m)/m^x: prod cos(y ln p^e),
/// the box square of the cosine kernel. Requires x above the certified
/// abscissa of that kernel (1.45).
IdentityReport hardy_general(std::complex<double> z, std::int64_t truncation,
                             int max_threads = 1);

/// The truncated sum_{m<=N} 2^omega(m) / m^x alone (the y = 0 ratio, which
/// converges to zeta(x)^2 / zeta(2x); 2.5 at x = 2).
double hardy_classic_ratio(double x, std::int64_t truncation, int max_threads = 1);

/// Under F x G = delta1 (verified at prime powers <= truncation):
/// D(F,s) D(G,s) versus D(F box G, s).
IdentityReport verify_orthproduct(const Kernel& f, const Kernel& g, std::complex<double> s,
                                  std::int64_t truncation, int max_threads = 1);

/// For a prime set A and completely multiplicative F:
/// D(1_A x F, s) D(1_cA x F, s) versus D(F, s).
IdentityReport verify_primecompfactor(const std::vector<std::int64_t>& primes, const Kernel& f,
                                      std::complex<double> s, std::int64_t truncation,
                                      int max_threads = 1);

/// Coefficient-level identity behind the series refactorization:
/// (F star G)(n) = sum over r^2 | n of F(r) G(r) (F box G)(n / r^2),
/// checked for every n <= limit. Exact integer arithmetic when both kernels
/// are integer-valued.
struct CoefficientIdentityReport {
  std::int64_t limit = 0;
  bool exact = false;
  bool passed = false;
  double max_abs_err = 0.0;
  std::optional<std::int64_t> witness;
};

CoefficientIdentityReport coefficient_identity(const Kernel& f, const Kernel& g,
                                               std::int64_t limit);

/// Finite rearrangement of sum_{np<=N} n^-s p^-s / omega(np) against
/// sum_{2<=m<=N} m^-s on the same index set; equality holds to float error
/// (tolerance 1e-10).
IdentityReport zeta_minus_one(std::complex<double> s, std::int64_t truncation);

/// The omega-weighted refinement of the same rearrangement:
/// sum_n n^-s/(omega(n)+1) [ sum_{p<=N/n} p^-s + 1/omega(n) sum_{p|n, np<=N} p^-s ]
/// against sum_{2<=m<=N} m^-s. The n = 1 inner term multiplies an empty sum
/// and is defined as 0.
IdentityReport zeta_minus_one_next(std::complex<double> s, std::int64_t truncation);

}  // namespace unitary
