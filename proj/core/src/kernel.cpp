#include "unitary/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace unitary {
namespace {

// 2^omega(n) <= n^0.45 for all n >= 1000 (the worst ratio past 1000 is at
// n = 2310), so adding two kernels costs at most this much extra growth.
constexpr double kBoxGrowthMargin = 0.45;
constexpr std::int64_t kBoxGrowthValidFrom = 1000;

std::string compose_name(const char* op, const Kernel& f, const Kernel& g) {
  return std::string(op) + "(" + f.name() + "," + g.name() + ")";
}

}  // namespace

Kernel::Kernel(std::string name, ComplexRule rule, double growth_exponent, KernelFlags flags,
               IntegerRule integer_rule, std::int64_t growth_valid_from)
    : name_(std::move(name)),
      rule_(std::move(rule)),
      int_rule_(std::move(integer_rule)),
      growth_(growth_exponent),
      growth_valid_from_(growth_valid_from),
      flags_(flags) {
  if (!rule_) throw std::invalid_argument("Kernel: missing rule");
  if (flags_.integer_valued && !int_rule_) {
    throw std::invalid_argument("Kernel: integer_valued kernel needs an integer rule");
  }
}

std::int64_t Kernel::at_int(std::int64_t p, int e) const {
  if (!flags_.integer_valued) {
    throw std::domain_error("Kernel::at_int: kernel '" + name_ + "' is not integer-valued");
  }
  return int_rule_(p, e);
}

std::complex<double> Kernel::eval(const Factorization& f) const {
  std::complex<double> v = 1.0;
  for (const auto& pp : f.parts) v *= rule_(pp.p, pp.e);
  return v;
}

std::complex<double> Kernel::eval(std::int64_t n) const { return eval(factorize(n)); }

std::int64_t Kernel::eval_int(const Factorization& f) const {
  if (!flags_.integer_valued) {
    throw std::domain_error("Kernel::eval_int: kernel '" + name_ + "' is not integer-valued");
  }
  std::int64_t v = 1;
  for (const auto& pp : f.parts) v = checked_mul(v, int_rule_(pp.p, pp.e));
  return v;
}

std::int64_t Kernel::eval_int(std::int64_t n) const { return eval_int(factorize(n)); }

std::optional<PrimePower> Kernel::verify_flags(std::int64_t bound) const {
  for (const auto& pp : prime_powers_up_to(bound)) {
    const std::complex<double> v = rule_(pp.p, pp.e);
    if (flags_.real_valued && v.imag() != 0.0) return pp;
    if (flags_.integer_valued) {
      const auto iv = static_cast<double>(int_rule_(pp.p, pp.e));
      if (v.imag() != 0.0 || v.real() != iv) return pp;
    }
    if (flags_.completely_multiplicative && pp.e > 1) {
      std::complex<double> base = rule_(pp.p, 1), powed = 1.0;
      for (int i = 0; i < pp.e; ++i) powed *= base;
      if (std::abs(powed - v) > 1e-9 * std::max(1.0, std::abs(v))) return pp;
    }
  }
  return std::nullopt;
}

Kernel box_add(const Kernel& f, const Kernel& g) {
  KernelFlags fl;
  fl.completely_multiplicative = false;
  fl.real_valued = f.flags().real_valued && g.flags().real_valued;
  fl.integer_valued = f.flags().integer_valued && g.flags().integer_valued;
  Kernel::IntegerRule irule;
  if (fl.integer_valued) {
    irule = [f, g](std::int64_t p, int e) { return checked_add(f.at_int(p, e), g.at_int(p, e)); };
  }
  return Kernel(
      compose_name("box", f, g),
      [f, g](std::int64_t p, int e) { return f.at(p, e) + g.at(p, e); },
      std::max(f.growth_exponent(), g.growth_exponent()) + kBoxGrowthMargin, fl, std::move(irule),
      std::max({f.growth_valid_from(), g.growth_valid_from(), kBoxGrowthValidFrom}));
}

Kernel pointwise_mul(const Kernel& f, const Kernel& g) {
  KernelFlags fl;
  fl.completely_multiplicative =
      f.flags().completely_multiplicative && g.flags().completely_multiplicative;
  fl.real_valued = f.flags().real_valued && g.flags().real_valued;
  fl.integer_valued = f.flags().integer_valued && g.flags().integer_valued;
  Kernel::IntegerRule irule;
  if (fl.integer_valued) {
    irule = [f, g](std::int64_t p, int e) { return checked_mul(f.at_int(p, e), g.at_int(p, e)); };
  }
  return Kernel(
      compose_name("mul", f, g),
      [f, g](std::int64_t p, int e) { return f.at(p, e) * g.at(p, e); },
      f.growth_exponent() + g.growth_exponent(), fl, std::move(irule),
      std::max(f.growth_valid_from(), g.growth_valid_from()));
}

Kernel box_inverse(const Kernel& f) {
  KernelFlags fl;
  fl.completely_multiplicative = false;
  fl.real_valued = f.flags().real_valued;
  fl.integer_valued = f.flags().integer_valued;
  Kernel::IntegerRule irule;
  if (fl.integer_valued) {
    irule = [f](std::int64_t p, int e) { return -f.at_int(p, e); };
  }
  return Kernel(
      "inv(" + f.name() + ")", [f](std::int64_t p, int e) { return -f.at(p, e); },
      f.growth_exponent(), fl, std::move(irule), f.growth_valid_from());
}

Kernel scalar_ext(std::complex<double> lambda, const Kernel& f) {
  KernelFlags fl;
  const bool identity_scalar = lambda == std::complex<double>(1.0, 0.0);
  fl.completely_multiplicative = identity_scalar && f.flags().completely_multiplicative;
  fl.real_valued = f.flags().real_valued && lambda.imag() == 0.0;
  const bool integer_scalar =
      lambda.imag() == 0.0 && lambda.real() == std::floor(lambda.real()) &&
      std::abs(lambda.real()) < 9.0e15;
  fl.integer_valued = f.flags().integer_valued && integer_scalar;
  Kernel::IntegerRule irule;
  if (fl.integer_valued) {
    const auto il = static_cast<std::int64_t>(lambda.real());
    irule = [f, il](std::int64_t p, int e) { return checked_mul(il, f.at_int(p, e)); };
  }
  double growth = f.growth_exponent();
  std::int64_t valid_from = f.growth_valid_from();
  if (std::abs(lambda) > 1.0) {
    growth += kBoxGrowthMargin * std::log2(std::abs(lambda));
    valid_from = std::max(valid_from, kBoxGrowthValidFrom);
  }
  return Kernel(
      "scal(" + std::to_string(lambda.real()) +
          (lambda.imag() != 0.0 ? "+" + std::to_string(lambda.imag()) + "i" : "") + "," +
          f.name() + ")",
      [f, lambda](std::int64_t p, int e) { return lambda * f.at(p, e); }, growth, fl,
      std::move(irule), valid_from);
}

Kernel pow_pointwise(const Kernel& f, int k) {
  if (k < 1) throw std::domain_error("pow_pointwise: exponent must be >= 1");
  KernelFlags fl = f.flags();
  Kernel::IntegerRule irule;
  if (fl.integer_valued) {
    irule = [f, k](std::int64_t p, int e) {
      std::int64_t v = 1, b = f.at_int(p, e);
      for (int i = 0; i < k; ++i) v = checked_mul(v, b);
      return v;
    };
  }
  return Kernel(
      "pow(" + f.name() + "," + std::to_string(k) + ")",
      [f, k](std::int64_t p, int e) {
        std::complex<double> v = 1.0, b = f.at(p, e);
        for (int i = 0; i < k; ++i) v *= b;
        return v;
      },
      f.growth_exponent() * k, fl, std::move(irule), f.growth_valid_from());
}

std::pair<Kernel, Kernel> decompose_real_imag(const Kernel& f) {
  KernelFlags fl;
  fl.real_valued = true;
  Kernel re(
      "re(" + f.name() + ")",
      [f](std::int64_t p, int e) { return std::complex<double>(f.at(p, e).real(), 0.0); },
      f.growth_exponent(), fl, nullptr, f.growth_valid_from());
  Kernel im(
      "im(" + f.name() + ")",
      [f](std::int64_t p, int e) { return std::complex<double>(f.at(p, e).imag(), 0.0); },
      f.growth_exponent(), fl, nullptr, f.growth_valid_from());
  return {std::move(re), std::move(im)};
}

std::complex<double> box_convolve_definitional(const Kernel& f, const Kernel& g, std::int64_t m) {
  std::complex<double> acc = 0.0;
  for (const auto& [a, b] : unitary_divisor_pairs(m)) acc += f.eval(a) * g.eval(b);
  return acc;
}

std::int64_t box_convolve_definitional_int(const Kernel& f, const Kernel& g, std::int64_t m) {
  std::int64_t acc = 0;
  for (const auto& [a, b] : unitary_divisor_pairs(m)) {
    acc = checked_add(acc, checked_mul(f.eval_int(a), g.eval_int(b)));
  }
  return acc;
}

std::complex<double> dirichlet_convolve(const Kernel& f, const Kernel& g, std::int64_t n) {
  std::complex<double> acc = 0.0;
  for (std::int64_t d : divisors(n)) acc += f.eval(d) * g.eval(n / d);
  return acc;
}

std::int64_t dirichlet_convolve_int(const Kernel& f, const Kernel& g, std::int64_t n) {
  std::int64_t acc = 0;
  for (std::int64_t d : divisors(n)) {
    acc = checked_add(acc, checked_mul(f.eval_int(d), g.eval_int(n / d)));
  }
  return acc;
}

}  // namespace unitary
