#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "unitary/integers.hpp"

namespace unitary {

struct KernelFlags {
  bool completely_multiplicative = false;
  bool real_valued = false;
  bool integer_valued = false;
};

/// A multiplicative function represented by its prime-power rule
/// (p, e) -> value, e >= 1. The value at 1 is implicitly 1 and never stored.
///
/// growth_exponent certifies |F(n)| <= n^c for every n >= growth_valid_from;
/// the series module uses it to bound truncation tails. Integer-valued
/// kernels carry a second, overflow-checked integer rule so exact
/// comparisons never round-trip through doubles.
class Kernel {
 public:
  using ComplexRule = std::function<std::complex<double>(std::int64_t p, int e)>;
  using IntegerRule = std::function<std::int64_t(std::int64_t p, int e)>;

  Kernel(std::string name, ComplexRule rule, double growth_exponent, KernelFlags flags,
         IntegerRule integer_rule = nullptr, std::int64_t growth_valid_from = 1);

  const std::string& name() const { return name_; }
  double growth_exponent() const { return growth_; }
  std::int64_t growth_valid_from() const { return growth_valid_from_; }
  const KernelFlags& flags() const { return flags_; }

  /// Rule value at the prime power p^e (e >= 1).
  std::complex<double> at(std::int64_t p, int e) const { return rule_(p, e); }
  /// Exact integer rule value; requires flags().integer_valued.
  std::int64_t at_int(std::int64_t p, int e) const;

  /// F(n) = prod of rule values over the prime powers of n; F(1) = 1.
  std::complex<double> eval(std::int64_t n) const;
  std::complex<double> eval(const Factorization& f) const;

  /// Exact evaluation for integer-valued kernels (overflow-checked).
  std::int64_t eval_int(std::int64_t n) const;
  std::int64_t eval_int(const Factorization& f) const;

  /// Lazily re-verify the declared flags on all prime powers p^e <= bound.
  /// Returns the first offending prime power, or nullopt when consistent.
  std::optional<PrimePower> verify_flags(std::int64_t bound) const;

 private:
  std::string name_;
  ComplexRule rule_;
  IntegerRule int_rule_;
  double growth_;
  std::int64_t growth_valid_from_;
  KernelFlags flags_;
};

/// Ring addition: prime-power rules add pointwise.
Kernel box_add(const Kernel& f, const Kernel& g);

/// Ring multiplication: [F x G](m) = F(m) G(m); rules multiply pointwise.
Kernel pointwise_mul(const Kernel& f, const Kernel& g);

/// Additive inverse: rule negates, so eval(n) picks up (-1)^omega(n).
Kernel box_inverse(const Kernel& f);

/// External scalar operation: rule (p, e) -> lambda * F(p, e).
Kernel scalar_ext(std::complex<double> lambda, const Kernel& f);

/// k-fold pointwise multiplication of f with itself, k >= 1.
Kernel pow_pointwise(const Kernel& f, int k);

/// Split into real and imaginary parts: f = first + i * second at every
/// prime power, both parts real-valued.
std::pair<Kernel, Kernel> decompose_real_imag(const Kernel& f);

/// Definitional unitary convolution: sum of F(a) G(b) over ordered pairs
/// ab = m with gcd(a, b) = 1. Kept as a cross-check for box_add.
std::complex<double> box_convolve_definitional(const Kernel& f, const Kernel& g, std::int64_t m);
std::int64_t box_convolve_definitional_int(const Kernel& f, const Kernel& g, std::int64_t m);

/// Full Dirichlet convolution value: sum of F(a) G(b) over all ab = n.
std::complex<double> dirichlet_convolve(const Kernel& f, const Kernel& g, std::int64_t n);
std::int64_t dirichlet_convolve_int(const Kernel& f, const Kernel& g, std::int64_t n);

}  // namespace unitary
