#include "unitary/series.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "unitary/catalog.hpp"

namespace unitary {
namespace {

// Neumaier-compensated accumulator, one compensation term per component.
class CompensatedSum {
 public:
  void add(std::complex<double> v) {
    add_part(sum_re_, comp_re_, v.real());
    add_part(sum_im_, comp_im_, v.imag());
  }
  void add(const CompensatedSum& other) {
    add_part(sum_re_, comp_re_, other.sum_re_);
    add_part(sum_re_, comp_re_, other.comp_re_);
    add_part(sum_im_, comp_im_, other.sum_im_);
    add_part(sum_im_, comp_im_, other.comp_im_);
  }
  std::complex<double> total() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double sum_re_ = 0.0, comp_re_ = 0.0;
  double sum_im_ = 0.0, comp_im_ = 0.0;
};

std::complex<double> complex_npow(std::int64_t n, std::complex<double> exponent) {
  const double lg = std::log(static_cast<double>(n));
  return std::polar(std::exp(exponent.real() * lg), exponent.imag() * lg);
}

// Multiplicative fill of F(1..limit) through a smallest-prime-factor sieve;
// the kernel rule is only consulted at prime powers.
std::vector<std::complex<double>> bulk_eval(const Kernel& f, std::int64_t limit) {
  SmallestFactorSieve sieve(limit);
  std::vector<std::complex<double>> values(static_cast<std::size_t>(limit) + 1);
  values[0] = 0.0;
  if (limit >= 1) values[1] = 1.0;
  for (std::int64_t n = 2; n <= limit; ++n) {
    const std::int64_t p = sieve.smallest_factor(n);
    std::int64_t m = n;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    values[static_cast<std::size_t>(n)] =
        m == 1 ? f.at(p, e) : values[static_cast<std::size_t>(m)] * f.at(p, e);
  }
  return values;
}

constexpr std::int64_t kChunk = 1 << 15;

int resolve_threads(int max_threads, std::int64_t work_items) {
  int t = max_threads;
  if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  const auto chunks = static_cast<int>((work_items + kChunk - 1) / kChunk);
  return std::max(1, std::min(t, chunks));
}

// Sum of coeff[n] * n^{-s} for 1 <= n <= limit. Fixed chunk boundaries and
// an ascending final reduction keep the result independent of thread count.
std::complex<double> weighted_power_sum(const std::vector<std::complex<double>>& coeff,
                                        std::int64_t limit, std::complex<double> s,
                                        int max_threads) {
  const std::int64_t chunks = (limit + kChunk - 1) / kChunk;
  std::vector<CompensatedSum> partials(static_cast<std::size_t>(chunks));
  const int threads = resolve_threads(max_threads, limit);

  auto run_chunk = [&](std::int64_t c) {
    const std::int64_t lo = c * kChunk + 1;
    const std::int64_t hi = std::min(limit, (c + 1) * kChunk);
    CompensatedSum acc;
    for (std::int64_t n = lo; n <= hi; ++n) {
      const auto v = coeff[static_cast<std::size_t>(n)];
      if (v != std::complex<double>(0.0)) acc.add(v * complex_npow(n, -s));
    }
    partials[static_cast<std::size_t>(c)] = acc;
  };

  if (threads == 1) {
    for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::int64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }

  CompensatedSum total;
  for (const auto& p : partials) total.add(p);
  return total.total();
}

double integral_tail_bound(std::int64_t truncation, double sigma, double growth) {
  return std::pow(static_cast<double>(truncation), 1.0 + growth - sigma) /
         (sigma - growth - 1.0);
}

// |A*B - (A +- ta)(B +- tb)| <= |A| tb + |B| ta + ta tb
double product_tolerance(const SeriesValue& a, const SeriesValue& b) {
  return std::abs(a.value) * b.tail_bound + std::abs(b.value) * a.tail_bound +
         a.tail_bound * b.tail_bound;
}

constexpr double kFloatSlack = 1e-9;
constexpr double kRearrangementTolerance = 1e-10;

IdentityReport make_report(std::string identity, std::complex<double> s, std::int64_t truncation,
                           std::complex<double> lhs, std::complex<double> rhs,
                           double tolerance) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.s = s;
  r.truncation = truncation;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  r.tolerance = tolerance;
  r.passed = r.abs_err <= tolerance;
  return r;
}

void require_completely_multiplicative(const Kernel& k, const char* who) {
  if (!k.flags().completely_multiplicative) {
    throw std::domain_error(std::string(who) + ": kernel '" + k.name() +
                            "' is not flagged completely multiplicative");
  }
}

// omega(1..limit) by sieving over primes.
std::vector<std::int32_t> omega_table(std::int64_t limit) {
  std::vector<std::int32_t> om(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t p : primes_up_to(limit)) {
    for (std::int64_t m = p; m <= limit; m += p) ++om[static_cast<std::size_t>(m)];
  }
  return om;
}

}  // namespace

SeriesValue series_eval(const Kernel& f, std::complex<double> s, std::int64_t truncation,
                        int max_threads) {
  if (truncation < 1) throw std::domain_error("series_eval: truncation must be >= 1");
  const double sigma = s.real();
  const double c = f.growth_exponent();
  if (!(sigma > c + 1.0)) {
    throw std::domain_error("series_eval: Re(s) = " + std::to_string(sigma) +
                            " is not above the certified abscissa " + std::to_string(c + 1.0) +
                            " of kernel '" + f.name() + "'");
  }
  if (truncation < f.growth_valid_from()) {
    throw std::domain_error("series_eval: truncation " + std::to_string(truncation) +
                            " lies below the growth certification point " +
                            std::to_string(f.growth_valid_from()) + " of kernel '" + f.name() +
                            "'");
  }

  const auto coeff = bulk_eval(f, truncation);
  SeriesValue out;
  out.value = weighted_power_sum(coeff, truncation, s, max_threads);
  out.truncation = truncation;
  out.sigma = sigma;
  out.growth = c;
  out.tail_bound = integral_tail_bound(truncation, sigma, c);
  return out;
}

IdentityReport verify_refactorization(const Kernel& f, const Kernel& g, std::complex<double> s,
                                      std::int64_t truncation, int max_threads) {
  require_completely_multiplicative(f, "verify_refactorization");
  require_completely_multiplicative(g, "verify_refactorization");
  const SeriesValue a = series_eval(f, s, truncation, max_threads);
  const SeriesValue b = series_eval(g, s, truncation, max_threads);
  const SeriesValue c = series_eval(pointwise_mul(f, g), 2.0 * s, truncation, max_threads);
  const SeriesValue d = series_eval(box_add(f, g), s, truncation, max_threads);
  const double tol = product_tolerance(a, b) + product_tolerance(c, d) + kFloatSlack;
  return make_report("refactor", s, truncation, a.value * b.value, c.value * d.value, tol);
}

IdentityReport verify_realimsplit(const Kernel& f, const Kernel& g, std::complex<double> s,
                                  std::int64_t truncation, int max_threads) {
  require_completely_multiplicative(f, "verify_realimsplit");
  require_completely_multiplicative(g, "verify_realimsplit");
  const double x = s.real();
  const double y = s.imag();
  const SeriesValue a = series_eval(f, s, truncation, max_threads);
  const SeriesValue b = series_eval(g, std::conj(s), truncation, max_threads);
  const SeriesValue c =
      series_eval(pointwise_mul(f, g), std::complex<double>(2.0 * x, 0.0), truncation,
                  max_threads);
  const Kernel shifted = box_add(pointwise_mul(f, catalog::id_power({0.0, -y})),
                                 pointwise_mul(g, catalog::id_power({0.0, y})));
  const SeriesValue d =
      series_eval(shifted, std::complex<double>(x, 0.0), truncation, max_threads);
  const double tol = product_tolerance(a, b) + product_tolerance(c, d) + kFloatSlack;
  return make_report("realimsplit", s, truncation, a.value * b.value, c.value * d.value, tol);
}

IdentityReport hardy_general(std::complex<double> z, std::int64_t truncation, int max_threads) {
  const double x = z.real();
  const double y = z.imag();
  const Kernel one = catalog::one();
  const SeriesValue a = series_eval(one, z, truncation, max_threads);
  const SeriesValue b = series_eval(one, std::conj(z), truncation, max_threads);
  const SeriesValue zeta2x =
      series_eval(one, std::complex<double>(2.0 * x, 0.0), truncation, max_threads);
  const Kernel cos_square = box_add(catalog::cosa(y), catalog::cosa(y));
  const SeriesValue csum =
      series_eval(cos_square, std::complex<double>(x, 0.0), truncation, max_threads);
  const double tol = product_tolerance(a, b) + product_tolerance(zeta2x, csum) + kFloatSlack;
  return make_report("hardy", z, truncation, a.value * b.value, zeta2x.value * csum.value, tol);
}

double hardy_classic_ratio(double x, std::int64_t truncation, int max_threads) {
  const SeriesValue sv = series_eval(catalog::two_omega(), std::complex<double>(x, 0.0),
                                     truncation, max_threads);
  return sv.value.real();
}

IdentityReport verify_orthproduct(const Kernel& f, const Kernel& g, std::complex<double> s,
                                  std::int64_t truncation, int max_threads) {
  const Kernel product = pointwise_mul(f, g);
  for (const auto& pp : prime_powers_up_to(truncation)) {
    if (std::abs(product.at(pp.p, pp.e)) > 1e-12) {
      throw std::domain_error("verify_orthproduct: F x G is not delta1 (violated at " +
                              std::to_string(pp.p) + "^" + std::to_string(pp.e) + ")");
    }
  }
  const SeriesValue a = series_eval(f, s, truncation, max_threads);
  const SeriesValue b = series_eval(g, s, truncation, max_threads);
  const SeriesValue d = series_eval(box_add(f, g), s, truncation, max_threads);
  const double tol = product_tolerance(a, b) + d.tail_bound + kFloatSlack;
  return make_report("orthproduct", s, truncation, a.value * b.value, d.value, tol);
}

IdentityReport verify_primecompfactor(const std::vector<std::int64_t>& primes, const Kernel& f,
                                      std::complex<double> s, std::int64_t truncation,
                                      int max_threads) {
  require_completely_multiplicative(f, "verify_primecompfactor");
  const Kernel in_set = pointwise_mul(catalog::indicator_primes(primes), f);
  const Kernel in_complement = pointwise_mul(catalog::indicator_primes_complement(primes), f);
  const SeriesValue a = series_eval(in_set, s, truncation, max_threads);
  const SeriesValue b = series_eval(in_complement, s, truncation, max_threads);
  const SeriesValue c = series_eval(f, s, truncation, max_threads);
  const double tol = product_tolerance(a, b) + c.tail_bound + kFloatSlack;
  return make_report("primecomp", s, truncation, a.value * b.value, c.value, tol);
}

CoefficientIdentityReport coefficient_identity(const Kernel& f, const Kernel& g,
                                               std::int64_t limit) {
  require_completely_multiplicative(f, "coefficient_identity");
  require_completely_multiplicative(g, "coefficient_identity");
  CoefficientIdentityReport out;
  out.limit = limit;
  out.exact = f.flags().integer_valued && g.flags().integer_valued;
  out.passed = true;

  const Kernel box = box_add(f, g);
  for (std::int64_t n = 1; n <= limit; ++n) {
    if (out.exact) {
      std::int64_t rhs = 0;
      for (std::int64_t r = 1; r * r <= n; ++r) {
        if (n % (r * r) != 0) continue;
        rhs = checked_add(rhs, checked_mul(checked_mul(f.eval_int(r), g.eval_int(r)),
                                           box.eval_int(n / (r * r))));
      }
      if (dirichlet_convolve_int(f, g, n) != rhs) {
        out.passed = false;
        out.witness = n;
        return out;
      }
    } else {
      std::complex<double> rhs = 0.0;
      for (std::int64_t r = 1; r * r <= n; ++r) {
        if (n % (r * r) != 0) continue;
        rhs += f.eval(r) * g.eval(r) * box.eval(n / (r * r));
      }
      const double err = std::abs(dirichlet_convolve(f, g, n) - rhs);
      out.max_abs_err = std::max(out.max_abs_err, err);
      if (err > 1e-12) {
        out.passed = false;
        out.witness = n;
        return out;
      }
    }
  }
  return out;
}

IdentityReport zeta_minus_one(std::complex<double> s, std::int64_t truncation) {
  if (!(s.real() > 1.0)) throw std::domain_error("zeta_minus_one: need Re(s) > 1");
  const auto om = omega_table(truncation);

  CompensatedSum lhs;
  for (std::int64_t p : primes_up_to(truncation)) {
    const std::complex<double> pw = complex_npow(p, -s);
    for (std::int64_t n = 1; n <= truncation / p; ++n) {
      lhs.add(pw * complex_npow(n, -s) / static_cast<double>(om[static_cast<std::size_t>(n * p)]));
    }
  }
  CompensatedSum rhs;
  for (std::int64_t m = 2; m <= truncation; ++m) rhs.add(complex_npow(m, -s));

  return make_report("zeta-minus-one", s, truncation, lhs.total(), rhs.total(),
                     kRearrangementTolerance);
}

IdentityReport zeta_minus_one_next(std::complex<double> s, std::int64_t truncation) {
  if (!(s.real() > 1.0)) throw std::domain_error("zeta_minus_one_next: need Re(s) > 1");
  const auto om = omega_table(truncation);
  const auto primes = primes_up_to(truncation);

  // Prefix sums of p^{-s} over primes, so sum_{p <= N/n} is O(log) per n.
  std::vector<std::complex<double>> prime_prefix(primes.size() + 1, 0.0);
  {
    CompensatedSum acc;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      acc.add(complex_npow(primes[i], -s));
      prime_prefix[i + 1] = acc.total();
    }
  }
  auto prime_sum_up_to = [&](std::int64_t limit) {
    const auto it = std::upper_bound(primes.begin(), primes.end(), limit);
    return prime_prefix[static_cast<std::size_t>(it - primes.begin())];
  };

  const SmallestFactorSieve sieve(truncation);
  CompensatedSum lhs;
  for (std::int64_t n = 1; n <= truncation; ++n) {
    const double omn = om[static_cast<std::size_t>(n)];
    std::complex<double> inner = prime_sum_up_to(truncation / n);
    if (omn > 0) {
      std::complex<double> own = 0.0;
      std::int64_t m = n;
      while (m > 1) {
        const std::int64_t p = sieve.smallest_factor(m);
        while (m % p == 0) m /= p;
        if (p <= truncation / n) own += complex_npow(p, -s);
      }
      inner += own / omn;
    }
    // omn == 0 only at n = 1, where the inner divisor sum is empty (0).
    lhs.add(complex_npow(n, -s) * inner / (omn + 1.0));
  }

  CompensatedSum rhs;
  for (std::int64_t m = 2; m <= truncation; ++m) rhs.add(complex_npow(m, -s));

  return make_report("zeta-minus-one-next", s, truncation, lhs.total(), rhs.total(),
                     kRearrangementTolerance);
}

}  // namespace unitary
