#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "unitary/catalog.hpp"
#include "unitary/characters.hpp"
#include "unitary/series.hpp"

using namespace unitary;
namespace cat = unitary::catalog;

TEST_CASE("series_eval basics") {
  SUBCASE("delta1 sums to exactly 1 with zero-width tail") {
    const SeriesValue sv = series_eval(cat::delta1(), {3.0, 0.0}, 1000);
    CHECK(sv.value == std::complex<double>(1.0));
    CHECK(sv.tail_bound < 2e-6);
  }
  SUBCASE("partial zeta(2) lands within its certified tail of the oracle") {
    const SeriesValue sv = series_eval(cat::one(), {2.0, 0.0}, 100000);
    const std::complex<double> zeta2 = testsupport::zeta_euler_maclaurin({2.0, 0.0}, 200000);
    CHECK(std::abs(zeta2.real() - 1.6449340668482264) < 1e-9);
    CHECK(std::abs(sv.value - zeta2) <= sv.tail_bound);
  }
  SUBCASE("partial sum of 2^omega(m)/m^2 approaches 2.5") {
    const SeriesValue sv = series_eval(cat::two_omega(), {2.0, 0.0}, 100000);
    CHECK(std::abs(sv.value - 2.5) <= sv.tail_bound);
    CHECK(sv.value.real() < 2.5);
    CHECK(sv.value.real() > 2.4998);
  }
}

TEST_CASE("series_eval rejects out-of-region evaluation") {
  CHECK_THROWS_AS(series_eval(cat::id(), {1.8, 0.0}, 1000), std::domain_error);
  CHECK_THROWS_AS(series_eval(cat::one(), {1.0, 0.0}, 1000), std::domain_error);
  // truncation below the growth certification point of the 2^omega family
  CHECK_THROWS_AS(series_eval(cat::two_omega(), {2.0, 0.0}, 500), std::domain_error);
  CHECK_THROWS_AS(series_eval(cat::one(), {2.0, 0.0}, 0), std::domain_error);
}

TEST_CASE("series_eval is bit-identical across thread counts") {
  const Kernel k = box_add(cat::cosa(0.7), cat::cosa(0.7));
  const SeriesValue a = series_eval(k, {1.6, 0.4}, 200000, 1);
  const SeriesValue b = series_eval(k, {1.6, 0.4}, 200000, 4);
  const SeriesValue c = series_eval(k, {1.6, 0.4}, 200000, 3);
  CHECK(a.value.real() == b.value.real());
  CHECK(a.value.imag() == b.value.imag());
  CHECK(a.value.real() == c.value.real());
  CHECK(a.value.imag() == c.value.imag());
}

TEST_CASE("tail certification on a grid") {
  struct Probe {
    Kernel kernel;
    double sigma;
  };
  const Probe probes[] = {
      {cat::one(), 1.5},         {cat::one(), 2.0},       {cat::delta1(), 1.5},
      {cat::id(), 2.5},          {cat::id(), 3.5},        {cat::two_omega(), 1.5},
      {cat::two_omega(), 2.0},   {cat::mob_rad(), 1.5},   {cat::cosa(1.0), 1.5},
      {cat::sina(2.0), 1.5},     {cat::phi(), 2.5},
  };
  for (const auto& probe : probes) {
    for (std::int64_t n : {std::int64_t{1000}, std::int64_t{10000}, std::int64_t{100000}}) {
      const SeriesValue at_n = series_eval(probe.kernel, {probe.sigma, 0.0}, n);
      const SeriesValue at_2n = series_eval(probe.kernel, {probe.sigma, 0.0}, 2 * n);
      REQUIRE(std::abs(at_2n.value - at_n.value) <= at_n.tail_bound);
    }
  }
}

TEST_CASE("refactorization") {
  SUBCASE("F = G = one at s = 2: both sides near zeta(2)^2") {
    const IdentityReport r = verify_refactorization(cat::one(), cat::one(), {2.0, 0.0}, 100000);
    CHECK(r.passed);
    const std::complex<double> zeta2 = testsupport::zeta_euler_maclaurin({2.0, 0.0}, 200000);
    CHECK(std::abs(r.lhs - zeta2 * zeta2) <= r.tolerance + 1e-6);
    CHECK(std::abs(r.lhs.real() - 2.705808) < 1e-3);
  }
  SUBCASE("F = G = delta1 is 1 = 1") {
    const IdentityReport r = verify_refactorization(cat::delta1(), cat::delta1(), {2.0, 0.0}, 1000);
    CHECK(r.passed);
    CHECK(std::abs(r.lhs - 1.0) <= 1e-12);
    CHECK(std::abs(r.rhs - 1.0) <= 1e-12);
  }
  SUBCASE("a character against one") {
    const Kernel chi = characters(3)[1].kernel();
    const IdentityReport r = verify_refactorization(chi, cat::one(), {2.0, 0.0}, 100000);
    CHECK(r.passed);
  }
  SUBCASE("random completely multiplicative pairs at s = 3") {
    for (int i = 0; i < 10; ++i) {
      const Kernel f = testsupport::random_cm_kernel(800 + static_cast<std::uint64_t>(i));
      const Kernel g = testsupport::random_cm_kernel(900 + static_cast<std::uint64_t>(i));
      const IdentityReport r = verify_refactorization(f, g, {3.0, 0.0}, 20000);
      REQUIRE(r.passed);
    }
  }
  SUBCASE("rejects kernels without the flag") {
    CHECK_THROWS_AS(verify_refactorization(cat::two_omega(), cat::one(), {3.0, 0.0}, 1000),
                    std::domain_error);
  }
}

TEST_CASE("real/imaginary split of the refactorization") {
  SUBCASE("y = 0 degenerates to the real case") {
    const IdentityReport r = verify_realimsplit(cat::one(), cat::one(), {2.0, 0.0}, 50000);
    CHECK(r.passed);
  }
  SUBCASE("F = G = one at s = 2+i") {
    const IdentityReport r = verify_realimsplit(cat::one(), cat::one(), {2.0, 1.0}, 100000);
    CHECK(r.passed);
  }
  SUBCASE("characters mod 5 at s = 2+0.5i") {
    const Kernel chi = characters(5)[1].kernel();
    const IdentityReport r = verify_realimsplit(chi, chi, {2.0, 0.5}, 100000);
    CHECK(r.passed);
  }
}

TEST_CASE("generalized Hardy identity") {
  SUBCASE("y = 0 ratio converges to 2.5") {
    const double ratio = hardy_classic_ratio(2.0, 100000);
    CHECK(ratio > 2.4998);
    CHECK(ratio <= 2.5);
    const IdentityReport r = hardy_general({2.0, 0.0}, 100000);
    CHECK(r.passed);
  }
  SUBCASE("z = 2+i") {
    const IdentityReport r = hardy_general({2.0, 1.0}, 100000);
    CHECK(r.passed);
    // |zeta(z)|^2 is real and positive
    CHECK(r.lhs.real() > 0.0);
    CHECK(std::abs(r.lhs.imag()) < 1e-6);
  }
  SUBCASE("z = 3+2i converges faster") {
    const IdentityReport r = hardy_general({3.0, 2.0}, 10000);
    CHECK(r.passed);
    CHECK(r.abs_err < 1e-3);
  }
}

TEST_CASE("orthogonal product rule") {
  SUBCASE("complementary prime indicators") {
    const Kernel f = pointwise_mul(cat::indicator_primes({2, 3}), cat::one());
    const Kernel g = pointwise_mul(cat::indicator_primes_complement({2, 3}), cat::one());
    const IdentityReport r = verify_orthproduct(f, g, {2.0, 0.0}, 50000);
    CHECK(r.passed);
  }
  SUBCASE("delta1 against anything") {
    const Kernel g = testsupport::random_cm_kernel(4242);
    const IdentityReport r = verify_orthproduct(cat::delta1(), g, {2.0, 0.0}, 20000);
    CHECK(r.passed);
  }
  SUBCASE("random kernels restricted to disjoint prime supports") {
    const Kernel f = pointwise_mul(cat::indicator_primes({2, 7, 11}),
                                   testsupport::random_cm_kernel(777));
    const Kernel g = pointwise_mul(cat::indicator_primes_complement({2, 7, 11}),
                                   testsupport::random_cm_kernel(778));
    const IdentityReport r = verify_orthproduct(f, g, {2.0, 0.0}, 50000);
    CHECK(r.passed);
  }
  SUBCASE("precondition is enforced") {
    CHECK_THROWS_AS(verify_orthproduct(cat::one(), cat::one(), {2.0, 0.0}, 10000),
                    std::domain_error);
  }
}

TEST_CASE("prime-complement factorization") {
  SUBCASE("A = {2}, F = one at s = 2 matches the Euler factor split") {
    const IdentityReport r = verify_primecompfactor({2}, cat::one(), {2.0, 0.0}, 100000);
    CHECK(r.passed);
    // the {2}-part alone is the lacunary series 1/(1 - 2^-2) = 4/3
    const SeriesValue part =
        series_eval(pointwise_mul(cat::indicator_primes({2}), cat::one()), {2.0, 0.0}, 100000);
    CHECK(std::abs(part.value - 4.0 / 3.0) <= 1e-4);
  }
  SUBCASE("empty prime set") {
    const IdentityReport r = verify_primecompfactor({}, cat::one(), {2.0, 0.0}, 20000);
    CHECK(r.passed);
  }
  SUBCASE("A = {2,5,11} with a character mod 3") {
    const Kernel chi = characters(3)[1].kernel();
    const IdentityReport r = verify_primecompfactor({2, 5, 11}, chi, {2.0, 0.0}, 50000);
    CHECK(r.passed);
  }
}

TEST_CASE("coefficient identity") {
  SUBCASE("F = G = one is the d(n) identity, exact to 1e4") {
    const auto r = coefficient_identity(cat::one(), cat::one(), 10000);
    CHECK(r.passed);
    CHECK(r.exact);
  }
  SUBCASE("spot value at n = 16: d(16) = 5 = 2 + 2 + 1") {
    CHECK(dirichlet_convolve_int(cat::one(), cat::one(), 16) == 5);
    CHECK(testsupport::divisor_count_by_scan(16) == 5);
    const Kernel box = box_add(cat::one(), cat::one());
    CHECK(box.eval_int(16) + box.eval_int(4) + box.eval_int(1) == 5);
  }
  SUBCASE("F = G = id is exact") {
    const auto r = coefficient_identity(cat::id(), cat::id(), 2000);
    CHECK(r.passed);
    CHECK(r.exact);
  }
  SUBCASE("random sign kernels are exact") {
    const auto r = coefficient_identity(testsupport::random_sign_kernel(17),
                                        testsupport::random_sign_kernel(18), 2000);
    CHECK(r.passed);
    CHECK(r.exact);
  }
  SUBCASE("complex completely multiplicative kernels within 1e-12") {
    const auto r = coefficient_identity(testsupport::random_cm_kernel(19),
                                        testsupport::random_cm_kernel(20), 1000);
    CHECK(r.passed);
    CHECK_FALSE(r.exact);
  }
}

TEST_CASE("zeta minus one rearrangements") {
  SUBCASE("first form at s = 2, N = 1e4") {
    const IdentityReport r = zeta_minus_one({2.0, 0.0}, 10000);
    CHECK(r.passed);
    CHECK(r.abs_err <= 1e-12);
  }
  SUBCASE("first form at s = 3, N = 1e3") {
    const IdentityReport r = zeta_minus_one({3.0, 0.0}, 1000);
    CHECK(r.passed);
    CHECK(r.abs_err <= 1e-12);
  }
  SUBCASE("second form at s = 2, N = 1e3") {
    const IdentityReport r = zeta_minus_one_next({2.0, 0.0}, 1000);
    CHECK(r.passed);
    CHECK(r.abs_err <= 1e-10);
  }
  SUBCASE("second form at s = 4, N = 500") {
    const IdentityReport r = zeta_minus_one_next({4.0, 0.0}, 500);
    CHECK(r.passed);
  }
  SUBCASE("N = 1 gives empty sums on both sides") {
    CHECK(zeta_minus_one({2.0, 0.0}, 1).abs_err == 0.0);
    CHECK(zeta_minus_one_next({2.0, 0.0}, 1).abs_err == 0.0);
  }
  SUBCASE("complex s") {
    const IdentityReport r = zeta_minus_one({2.0, 0.7}, 2000);
    CHECK(r.passed);
  }
}
