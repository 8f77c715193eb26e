#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unitary/kernel.hpp"

namespace unitary {

/// Exact root of unity e^{2*pi*i*num/den} with 0 <= num < den.
struct RootOfUnity {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::complex<double> to_complex() const;
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// (Z/kZ)* decomposed into cyclic factors via CRT, with a discrete-log
/// table mapping every unit to its exponent vector against the generators.
class UnitGroup {
 public:
  explicit UnitGroup(std::int64_t modulus);  // modulus >= 2

  std::int64_t modulus() const { return modulus_; }
  std::int64_t phi() const { return phi_; }
  const std::vector<std::int64_t>& generators() const { return generators_; }
  const std::vector<std::int64_t>& orders() const { return orders_; }
  /// lcm of the cyclic orders (1 for the trivial group).
  std::int64_t exponent() const { return exponent_; }

  bool is_unit(std::int64_t n) const;
  /// Exponent vector of a unit residue; throws for non-units.
  const std::vector<int>& dlog(std::int64_t n) const;

 private:
  std::int64_t modulus_;
  std::int64_t phi_ = 1;
  std::int64_t exponent_ = 1;
  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> orders_;
  std::vector<std::vector<int>> dlog_;  // indexed by residue; empty for non-units
};

/// Dirichlet character mod k, stored as one exponent per group generator.
/// Values are exact roots of unity (or 0 off the units) and only become
/// complex doubles at evaluation boundaries.
class Character {
 public:
  Character(std::shared_ptr<const UnitGroup> group, std::vector<int> exponents);

  std::int64_t modulus() const { return group_->modulus(); }
  const std::vector<int>& exponents() const { return exponents_; }
  const UnitGroup& group() const { return *group_; }

  bool is_principal() const;
  /// Order of the character in the dual group.
  std::int64_t order() const;
  bool is_real() const { return order() <= 2; }

  /// Exact value at n: nullopt encodes 0 (gcd(n, k) > 1).
  std::optional<RootOfUnity> root_at(std::int64_t n) const;
  std::complex<double> operator()(std::int64_t n) const;

  /// chi^m in the dual group (exact exponent arithmetic).
  Character power(std::int64_t m) const;

  /// The completely multiplicative kernel (p, e) -> chi(p)^e.
  Kernel kernel() const;

  std::string label() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }

 private:
  std::shared_ptr<const UnitGroup> group_;
  std::vector<int> exponents_;
};

/// The complete dual group mod k (phi(k) characters, principal first).
std::vector<Character> characters(std::int64_t k);

Character principal_character(std::int64_t k);

std::int64_t euler_phi(std::int64_t k);

struct PowerPrincipalReport {
  std::int64_t modulus = 0;
  std::int64_t bound = 0;
  bool passed = false;
  std::optional<std::int64_t> witness;  // first n where chi^phi(k) != chi_0
};

/// Check pow_pointwise(chi.kernel(), phi(k)) == principal kernel on all
/// n <= bound (evaluated multiplicatively, tolerance 1e-12).
PowerPrincipalReport char_power_principal(const Character& chi, std::int64_t bound);

/// Indicator kernel of the character's zero set {p^e : chi(p) = 0},
/// i.e. of the primes dividing the modulus.
struct ZeroSetIndicator {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> zero_primes;
  Kernel kernel;
};

ZeroSetIndicator zero_set_indicator(const Character& chi);

/// Box-sum of all phi(k) characters evaluated at a, with the two closed
/// forms it is compared against:
///   S  = prod over p | a of (sum over chi of chi(p^{v_p(a)}))
///   V1 = phi(k)^{omega(a)} * prod over p | a of [p^{v_p(a)} == 1 mod k]
///   V2 = phi(k)^{omega(a)} * [k divides a - 1]
/// S always agrees with V1; V2 can differ, and both outcomes are reported.
struct CharacterBoxSum {
  std::int64_t modulus = 0;
  std::int64_t a = 0;
  std::complex<double> s;
  std::int64_t v1 = 0;
  std::int64_t v2 = 0;
  bool s_equals_v1 = false;
  bool s_equals_v2 = false;
};

CharacterBoxSum box_sum_all_characters(std::int64_t k, std::int64_t a);

/// Facts needed to force a derivation operator to vanish on chi, verified
/// at every prime power p^e <= bound:
///   (i)   g = chi box 1_{Z} never vanishes,
///   (ii)  chi x 1_{Z} vanishes,
///   (iii) g^{phi(k)} is idempotent under x,
///   (iv)  1_{Z} is idempotent,
/// with g(p^e) the nonzero multiplier exhibited by the forcing argument.
/// For principal characters the multiplier 2*chi - 1 is also checked to be
/// a unit (+/-1) everywhere.
struct DerivationCertificate {
  std::int64_t modulus = 0;
  std::vector<int> exponents;
  std::int64_t bound = 0;
  bool passed = false;
  bool box_nonvanishing = false;
  bool product_vanishes = false;
  bool power_idempotent = false;
  bool zero_indicator_idempotent = false;
  bool principal = false;
  bool principal_multiplier_unit = true;
  double min_multiplier_abs = 0.0;
  std::optional<PrimePower> witness;
  std::string detail;
};

DerivationCertificate derivation_certificate(const Character& chi, std::int64_t bound);

}  // namespace unitary
