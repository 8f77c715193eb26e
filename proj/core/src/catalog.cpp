#include "unitary/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace unitary::catalog {
namespace {

KernelFlags flags(bool cm, bool real, bool integer) {
  KernelFlags f;
  f.completely_multiplicative = cm;
  f.real_valued = real;
  f.integer_valued = integer;
  return f;
}

}  // namespace

Kernel one() {
  return Kernel(
      "one", [](std::int64_t, int) { return std::complex<double>(1.0); }, 0.0,
      flags(true, true, true), [](std::int64_t, int) -> std::int64_t { return 1; });
}

Kernel delta1() {
  return Kernel(
      "delta1", [](std::int64_t, int) { return std::complex<double>(0.0); }, 0.0,
      flags(true, true, true), [](std::int64_t, int) -> std::int64_t { return 0; });
}

Kernel id() {
  return Kernel(
      "id",
      [](std::int64_t p, int e) { return std::complex<double>(std::pow(static_cast<double>(p), e)); },
      1.0, flags(true, true, true),
      [](std::int64_t p, int e) { return checked_pow(p, e); });
}

Kernel id_power(std::complex<double> s) {
  return Kernel(
      "idpow(" + std::to_string(s.real()) + "," + std::to_string(s.imag()) + ")",
      [s](std::int64_t p, int e) {
        const double lg = static_cast<double>(e) * std::log(static_cast<double>(p));
        return std::polar(std::exp(s.real() * lg), s.imag() * lg);
      },
      s.real(), flags(true, s.imag() == 0.0, false));
}

Kernel two_omega() {
  // 2^omega(n) <= n^0.45 once n >= 1000; see the growth note in kernel.cpp.
  return Kernel(
      "twoomega", [](std::int64_t, int) { return std::complex<double>(2.0); }, 0.45,
      flags(false, true, true), [](std::int64_t, int) -> std::int64_t { return 2; }, 1000);
}

Kernel mob_rad() {
  return Kernel(
      "mobrad",
      [](std::int64_t p, int) { return std::complex<double>(-1.0 / static_cast<double>(p)); }, 0.0,
      flags(false, true, false));
}

Kernel cosa(double y) {
  return Kernel(
      "cosa(" + std::to_string(y) + ")",
      [y](std::int64_t p, int e) {
        return std::complex<double>(std::cos(y * e * std::log(static_cast<double>(p))));
      },
      0.0, flags(false, true, false));
}

Kernel sina(double y) {
  return Kernel(
      "sina(" + std::to_string(y) + ")",
      [y](std::int64_t p, int e) {
        return std::complex<double>(std::sin(y * e * std::log(static_cast<double>(p))));
      },
      0.0, flags(false, true, false));
}

Kernel phi() {
  return Kernel(
      "phi",
      [](std::int64_t p, int e) {
        const double q = std::pow(static_cast<double>(p), e);
        return std::complex<double>(q - q / static_cast<double>(p));
      },
      1.0, flags(false, true, true),
      [](std::int64_t p, int e) { return checked_pow(p, e) - checked_pow(p, e - 1); });
}

Kernel indicator_primes(std::vector<std::int64_t> primes) {
  std::sort(primes.begin(), primes.end());
  std::string name = "ind(";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    name += (i ? "," : "") + std::to_string(primes[i]);
  }
  name += ")";
  auto member = [primes](std::int64_t p) {
    return std::binary_search(primes.begin(), primes.end(), p);
  };
  return Kernel(
      name,
      [member](std::int64_t p, int) { return std::complex<double>(member(p) ? 1.0 : 0.0); }, 0.0,
      flags(true, true, true),
      [member](std::int64_t p, int) -> std::int64_t { return member(p) ? 1 : 0; });
}

Kernel indicator_primes_complement(std::vector<std::int64_t> primes) {
  std::sort(primes.begin(), primes.end());
  std::string name = "coind(";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    name += (i ? "," : "") + std::to_string(primes[i]);
  }
  name += ")";
  auto member = [primes](std::int64_t p) {
    return std::binary_search(primes.begin(), primes.end(), p);
  };
  return Kernel(
      name,
      [member](std::int64_t p, int) { return std::complex<double>(member(p) ? 0.0 : 1.0); }, 0.0,
      flags(true, true, true),
      [member](std::int64_t p, int) -> std::int64_t { return member(p) ? 0 : 1; });
}

Kernel indicator_of(std::int64_t n) {
  const Factorization f = factorize(n);
  return Kernel(
      "ind1(" + std::to_string(n) + ")",
      [f](std::int64_t p, int e) {
        for (const auto& pp : f.parts) {
          if (pp.p == p) return std::complex<double>(pp.e == e ? 1.0 : 0.0);
        }
        return std::complex<double>(0.0);
      },
      0.0, flags(false, true, true),
      [f](std::int64_t p, int e) -> std::int64_t {
        for (const auto& pp : f.parts) {
          if (pp.p == p) return pp.e == e ? 1 : 0;
        }
        return 0;
      });
}

}  // namespace unitary::catalog
