#include "unitary/characters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace unitary {
namespace {

using u128 = unsigned __int128;

std::int64_t mulmod64(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<u128>(a) * static_cast<u128>(b) % m);
}

std::int64_t powmod64(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t r = m > 1 ? 1 : 0;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod64(r, base, m);
    base = mulmod64(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::int64_t phi_of(const Factorization& f) {
  std::int64_t phi = 1;
  for (const auto& pp : f.parts) {
    phi = checked_mul(phi, checked_pow(pp.p, pp.e - 1));
    phi = checked_mul(phi, pp.p - 1);
  }
  return phi;
}

// Least primitive root modulo an odd prime power q = p^e.
std::int64_t primitive_root(std::int64_t p, int e) {
  const std::int64_t q = checked_pow(p, e);
  const std::int64_t phi = checked_pow(p, e - 1) * (p - 1);
  const Factorization phi_parts = factorize(phi);
  for (std::int64_t g = 2; g < q; ++g) {
    if (std::gcd(g, q) != 1) continue;
    bool primitive = true;
    for (const auto& pp : phi_parts.parts) {
      if (powmod64(g, phi / pp.p, q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

// x with x = r (mod q) and x = 1 modulo the cofactor k/q, gcd(q, k/q) = 1.
std::int64_t crt_lift(std::int64_t r, std::int64_t q, std::int64_t k) {
  const std::int64_t rest = k / q;
  if (rest == 1) return r % k;
  // x = r + q*t with q*t = (1 - r) mod rest
  std::int64_t qinv = powmod64(q % rest, phi_of(factorize(rest)) - 1, rest);
  std::int64_t delta = ((1 - r) % rest + rest) % rest;
  std::int64_t t = mulmod64(delta, qinv, rest);
  return (r + q * t) % k;
}

}  // namespace

std::complex<double> RootOfUnity::to_complex() const {
  // Quadrant points come out exact; real characters stay exactly real.
  if (num == 0) return {1.0, 0.0};
  if (2 * num == den) return {-1.0, 0.0};
  if (4 * num == den) return {0.0, 1.0};
  if (4 * num == 3 * den) return {0.0, -1.0};
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(num) /
                       static_cast<double>(den);
  return {std::cos(theta), std::sin(theta)};
}

UnitGroup::UnitGroup(std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw std::domain_error("UnitGroup: modulus must be >= 2");
  const Factorization f = factorize(modulus);
  phi_ = phi_of(f);

  for (const auto& pp : f.parts) {
    const std::int64_t q = checked_pow(pp.p, pp.e);
    if (pp.p == 2) {
      if (pp.e == 1) continue;  // trivial factor
      generators_.push_back(crt_lift(q - 1, q, modulus_));
      orders_.push_back(2);
      if (pp.e >= 3) {
        generators_.push_back(crt_lift(3, q, modulus_));
        orders_.push_back(std::int64_t{1} << (pp.e - 2));
      }
    } else {
      generators_.push_back(crt_lift(primitive_root(pp.p, pp.e), q, modulus_));
      orders_.push_back(checked_pow(pp.p, pp.e - 1) * (pp.p - 1));
    }
  }
  for (std::int64_t d : orders_) exponent_ = std::lcm(exponent_, d);

  // Enumerate every exponent tuple once; the walk doubles as a proof that
  // the generators generate.
  std::vector<std::vector<std::int64_t>> powers(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    powers[i].resize(static_cast<std::size_t>(orders_[i]));
    powers[i][0] = 1;
    for (std::int64_t j = 1; j < orders_[i]; ++j) {
      powers[i][static_cast<std::size_t>(j)] =
          mulmod64(powers[i][static_cast<std::size_t>(j - 1)], generators_[i], modulus_);
    }
  }
  dlog_.assign(static_cast<std::size_t>(modulus_), {});
  std::vector<char> seen(static_cast<std::size_t>(modulus_), 0);
  std::vector<int> tuple(generators_.size(), 0);
  std::int64_t filled = 0;
  while (true) {
    std::int64_t r = 1;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      r = mulmod64(r, powers[i][static_cast<std::size_t>(tuple[i])], modulus_);
    }
    if (seen[static_cast<std::size_t>(r)]) {
      throw std::logic_error("UnitGroup: generator decomposition is not free");
    }
    seen[static_cast<std::size_t>(r)] = 1;
    dlog_[static_cast<std::size_t>(r)] = tuple;
    ++filled;
    std::size_t i = 0;
    for (; i < tuple.size(); ++i) {
      if (++tuple[i] < orders_[i]) break;
      tuple[i] = 0;
    }
    if (i == tuple.size()) break;
  }
  if (filled != phi_) throw std::logic_error("UnitGroup: generators do not generate");
}

bool UnitGroup::is_unit(std::int64_t n) const {
  std::int64_t r = n % modulus_;
  if (r < 0) r += modulus_;
  return std::gcd(r, modulus_) == 1;
}

const std::vector<int>& UnitGroup::dlog(std::int64_t n) const {
  std::int64_t r = n % modulus_;
  if (r < 0) r += modulus_;
  if (std::gcd(r, modulus_) != 1) throw std::domain_error("UnitGroup::dlog: not a unit");
  return dlog_[static_cast<std::size_t>(r)];
}

Character::Character(std::shared_ptr<const UnitGroup> group, std::vector<int> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (!group_) throw std::invalid_argument("Character: missing group");
  if (exponents_.size() != group_->generators().size()) {
    throw std::invalid_argument("Character: exponent vector has wrong length");
  }
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] < 0 || exponents_[i] >= group_->orders()[i]) {
      throw std::invalid_argument("Character: exponent out of range");
    }
  }
}

bool Character::is_principal() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

std::int64_t Character::order() const {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const std::int64_t d = group_->orders()[i];
    ord = std::lcm(ord, d / std::gcd<std::int64_t>(d, exponents_[i]));
  }
  return ord;
}

std::optional<RootOfUnity> Character::root_at(std::int64_t n) const {
  if (!group_->is_unit(n)) return std::nullopt;
  const std::vector<int>& x = group_->dlog(n);
  const std::int64_t L = group_->exponent();
  std::int64_t num = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const std::int64_t d = group_->orders()[i];
    num = (num + static_cast<std::int64_t>(exponents_[i]) * x[i] % L * (L / d)) % L;
  }
  return RootOfUnity{num, L};
}

std::complex<double> Character::operator()(std::int64_t n) const {
  const auto r = root_at(n);
  return r ? r->to_complex() : std::complex<double>(0.0);
}

Character Character::power(std::int64_t m) const {
  std::vector<int> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::int64_t d = group_->orders()[i];
    e[i] = static_cast<int>(((exponents_[i] * (m % d)) % d + d) % d);
  }
  return Character(group_, std::move(e));
}

Kernel Character::kernel() const {
  const Character chi = *this;
  KernelFlags fl;
  fl.completely_multiplicative = true;
  fl.real_valued = is_real();
  fl.integer_valued = is_real();  // order <= 2 means values in {-1, 0, 1}
  Kernel::IntegerRule irule;
  if (fl.integer_valued) {
    irule = [chi](std::int64_t p, int e) -> std::int64_t {
      const auto r = chi.root_at(p);
      if (!r) return 0;
      const std::int64_t half = (2 * r->num) % r->den;
      if (half != 0) throw std::logic_error("character kernel: non-real value");
      const bool negative = r->num != 0;  // num/den == 1/2
      return (negative && e % 2 == 1) ? -1 : 1;
    };
  }
  return Kernel(
      label(),
      [chi](std::int64_t p, int e) -> std::complex<double> {
        const auto r = chi.root_at(p);
        if (!r) return 0.0;
        return RootOfUnity{(r->num * (e % r->den)) % r->den, r->den}.to_complex();
      },
      0.0, fl, std::move(irule));
}

std::string Character::label() const {
  std::string s = "chi_" + std::to_string(modulus()) + "[";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    s += (i ? "," : "") + std::to_string(exponents_[i]);
  }
  return s + "]";
}

std::vector<Character> characters(std::int64_t k) {
  auto group = std::make_shared<const UnitGroup>(k);
  std::vector<Character> chars;
  chars.reserve(static_cast<std::size_t>(group->phi()));
  std::vector<int> tuple(group->generators().size(), 0);
  while (true) {
    chars.emplace_back(group, tuple);
    std::size_t i = 0;
    for (; i < tuple.size(); ++i) {
      if (++tuple[i] < group->orders()[i]) break;
      tuple[i] = 0;
    }
    if (i == tuple.size()) break;
  }
  return chars;
}

Character principal_character(std::int64_t k) {
  auto group = std::make_shared<const UnitGroup>(k);
  return Character(group, std::vector<int>(group->generators().size(), 0));
}

std::int64_t euler_phi(std::int64_t k) { return phi_of(factorize(k)); }

PowerPrincipalReport char_power_principal(const Character& chi, std::int64_t bound) {
  PowerPrincipalReport report;
  report.modulus = chi.modulus();
  report.bound = bound;
  const Kernel powered = pow_pointwise(chi.kernel(), static_cast<int>(euler_phi(chi.modulus())));
  const Kernel principal = principal_character(chi.modulus()).kernel();
  for (std::int64_t n = 1; n <= bound; ++n) {
    const Factorization f = factorize(n);
    if (std::abs(powered.eval(f) - principal.eval(f)) > 1e-12) {
      report.passed = false;
      report.witness = n;
      return report;
    }
  }
  report.passed = true;
  return report;
}

ZeroSetIndicator zero_set_indicator(const Character& chi) {
  const std::int64_t k = chi.modulus();
  std::vector<std::int64_t> zero_primes;
  for (const auto& pp : factorize(k).parts) zero_primes.push_back(pp.p);
  KernelFlags fl;
  fl.completely_multiplicative = true;
  fl.real_valued = true;
  fl.integer_valued = true;
  auto member = [zero_primes](std::int64_t p) {
    return std::find(zero_primes.begin(), zero_primes.end(), p) != zero_primes.end();
  };
  Kernel kernel(
      "zeroset_" + std::to_string(k),
      [member](std::int64_t p, int) { return std::complex<double>(member(p) ? 1.0 : 0.0); }, 0.0,
      fl, [member](std::int64_t p, int) -> std::int64_t { return member(p) ? 1 : 0; });
  return ZeroSetIndicator{k, std::move(zero_primes), std::move(kernel)};
}

CharacterBoxSum box_sum_all_characters(std::int64_t k, std::int64_t a) {
  if (k < 2 || a < 2) throw std::domain_error("box_sum_all_characters: need k, a >= 2");
  CharacterBoxSum out;
  out.modulus = k;
  out.a = a;
  const std::vector<Character> chars = characters(k);
  const Factorization fa = factorize(a);
  const std::int64_t phi = euler_phi(k);

  std::complex<double> s = 1.0;
  std::int64_t v1 = 1;
  for (const auto& pp : fa.parts) {
    std::complex<double> local = 0.0;
    for (const auto& chi : chars) local += chi.kernel().at(pp.p, pp.e);
    s *= local;
    const std::int64_t q = checked_pow(pp.p, pp.e);
    v1 = checked_mul(v1, (q % k + k) % k == 1 % k ? phi : 0);
  }
  out.s = s;
  out.v1 = v1;
  out.v2 = (a - 1) % k == 0 ? checked_pow(phi, fa.omega()) : 0;
  out.s_equals_v1 = std::abs(s - std::complex<double>(static_cast<double>(v1))) <= 1e-10;
  out.s_equals_v2 = std::abs(s - std::complex<double>(static_cast<double>(out.v2))) <= 1e-10;
  return out;
}

DerivationCertificate derivation_certificate(const Character& chi, std::int64_t bound) {
  DerivationCertificate cert;
  cert.modulus = chi.modulus();
  cert.exponents = chi.exponents();
  cert.bound = bound;
  cert.principal = chi.is_principal();

  const Kernel chi_k = chi.kernel();
  const ZeroSetIndicator zs = zero_set_indicator(chi);
  const Kernel g = box_add(chi_k, zs.kernel);
  const Kernel product = pointwise_mul(chi_k, zs.kernel);
  const int phi = static_cast<int>(euler_phi(chi.modulus()));
  const Kernel h = pow_pointwise(g, phi);

  cert.box_nonvanishing = true;
  cert.product_vanishes = true;
  cert.power_idempotent = true;
  cert.zero_indicator_idempotent = true;
  cert.min_multiplier_abs = std::numeric_limits<double>::infinity();

  for (const auto& pp : prime_powers_up_to(bound)) {
    const std::complex<double> gv = g.at(pp.p, pp.e);
    const double ga = std::abs(gv);
    cert.min_multiplier_abs = std::min(cert.min_multiplier_abs, ga);
    if (ga == 0.0) {
      cert.box_nonvanishing = false;
      cert.witness = pp;
      cert.detail = "box_add(chi, zero-set indicator) vanishes";
      break;
    }
    if (std::abs(product.at(pp.p, pp.e)) != 0.0) {
      cert.product_vanishes = false;
      cert.witness = pp;
      cert.detail = "chi x zero-set indicator does not vanish";
      break;
    }
    const std::complex<double> hv = h.at(pp.p, pp.e);
    if (std::abs(hv * hv - hv) > 1e-10) {
      cert.power_idempotent = false;
      cert.witness = pp;
      cert.detail = "g^phi(k) is not idempotent";
      break;
    }
    const std::complex<double> zv = zs.kernel.at(pp.p, pp.e);
    if (zv * zv != zv) {
      cert.zero_indicator_idempotent = false;
      cert.witness = pp;
      cert.detail = "zero-set indicator is not idempotent";
      break;
    }
    if (cert.principal) {
      const std::complex<double> mult = 2.0 * chi_k.at(pp.p, pp.e) - 1.0;
      if (std::abs(std::abs(mult) - 1.0) > 1e-12) {
        cert.principal_multiplier_unit = false;
        cert.witness = pp;
        cert.detail = "2*chi - 1 is not a unit";
        break;
      }
    }
  }

  cert.passed = cert.box_nonvanishing && cert.product_vanishes && cert.power_idempotent &&
                cert.zero_indicator_idempotent &&
                (!cert.principal || cert.principal_multiplier_unit);
  return cert;
}

}  // namespace unitary
