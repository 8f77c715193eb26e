#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "support.hpp"
#include "unitary/catalog.hpp"
#include "unitary/weight.hpp"

using namespace unitary;
namespace cat = unitary::catalog;

TEST_CASE("coprime weight values") {
  const WeightFn w = WeightFn::coprime(100);
  CHECK(w(3, 4) == std::complex<double>(1.0));
  CHECK(w(2, 2) == std::complex<double>(0.0));
  CHECK(w(1, 97) == std::complex<double>(1.0));
  CHECK_THROWS_AS(w(11, 13), std::domain_error);  // outside certified domain
  CHECK_THROWS_AS(w(0, 5), std::domain_error);
}

TEST_CASE("w_convolve specializes to both convolutions") {
  const WeightFn coprime = WeightFn::coprime(2000);
  const WeightFn ones = WeightFn::ones(2000);
  const Kernel f = testsupport::random_kernel(5);
  const Kernel g = testsupport::random_kernel(6);
  for (std::int64_t m = 1; m <= 400; ++m) {
    REQUIRE(std::abs(w_convolve(f, g, coprime, m) - box_convolve_definitional(f, g, m)) <= 1e-12);
    REQUIRE(std::abs(w_convolve(f, g, ones, m) - dirichlet_convolve(f, g, m)) <= 1e-12);
  }
}

TEST_CASE("w_convolve picks out single weight values on indicator probes") {
  const WeightFn w = WeightFn::coprime(5000);
  // 1_a conv 1_b at ab recovers W(a, b) when a and b are coprime blocks.
  const Kernel ia = cat::indicator_of(8), ib = cat::indicator_of(9);
  CHECK(w_convolve(ia, ib, w, 72) == w(8, 9));
}

TEST_CASE("delta1 is neutral for the coprime-weight convolution") {
  const WeightFn w = WeightFn::coprime(2000);
  const Kernel f = testsupport::random_kernel(13);
  const Kernel delta = cat::delta1();
  for (std::int64_t m = 1; m <= 400; ++m) {
    REQUIRE(std::abs(w_convolve(f, delta, w, m) - f.eval(m)) <= 1e-12);
    REQUIRE(std::abs(w_convolve(delta, f, w, m) - f.eval(m)) <= 1e-12);
  }
}

TEST_CASE("commutativity checker") {
  CHECK(check_commutativity(WeightFn::coprime(500), 500).passed);
  CHECK(check_commutativity(WeightFn::ones(500), 500).passed);

  const WeightFn skew("skew",
                      [](std::int64_t a, std::int64_t) {
                        return std::complex<double>(static_cast<double>(a));
                      },
                      500, false);
  const AxiomReport r = check_commutativity(skew, 500);
  REQUIRE_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->point == std::vector<std::int64_t>{1, 2});
  CHECK(recheck_witness(skew, r));
}

TEST_CASE("stability checker") {
  CHECK(check_stability(WeightFn::coprime(800), 800).passed);
  CHECK(check_stability(WeightFn::ones(800), 800).passed);

  // Weights of the shape f(gcd) are stable exactly when f is multiplicative;
  // capping the gcd at 3 is not, and (2,2,3,3) is the least violation.
  const WeightFn capped("gcd_capped",
                        [](std::int64_t a, std::int64_t b) {
                          return std::complex<double>(std::gcd(a, b) <= 3 ? 1.0 : 0.0);
                        },
                        800, true);
  const AxiomReport r = check_stability(capped, 800);
  REQUIRE_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->point == std::vector<std::int64_t>{2, 2, 3, 3});
  CHECK(recheck_witness(capped, r));

  // The parity weight [a+b even] does satisfy the restricted condition: a
  // coprimality-constrained quadruple has at most one even argument.
  const WeightFn parity("parity",
                        [](std::int64_t a, std::int64_t b) {
                          return std::complex<double>((a + b) % 2 == 0 ? 1.0 : 0.0);
                        },
                        800, true);
  CHECK(check_stability(parity, 800).passed);
}

TEST_CASE("identity checker") {
  CHECK(check_identity(WeightFn::coprime(500), 500).passed);
  CHECK(check_identity(WeightFn::ones(500), 500).passed);

  const WeightFn broken = WeightFn::coprime(500).with_override(1, 4, 0.0);
  const AxiomReport r = check_identity(broken, 500);
  REQUIRE_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->point == std::vector<std::int64_t>{1, 4});
  CHECK(recheck_witness(broken, r));
}

TEST_CASE("associativity checker") {
  CHECK(check_associativity(WeightFn::coprime(600), 600).passed);
  CHECK(check_associativity(WeightFn::ones(600), 600).passed);

  const WeightFn loose("loose",
                       [](std::int64_t a, std::int64_t b) {
                         return std::complex<double>(std::gcd(a, b) <= 2 ? 1.0 : 0.0);
                       },
                       600, true);
  const AxiomReport r = check_associativity(loose, 600);
  REQUIRE_FALSE(r.passed);
  CHECK(recheck_witness(loose, r));
}

TEST_CASE("distributivity checker") {
  CHECK(check_distributivity(WeightFn::coprime(600), 600).passed);

  SUBCASE("the Dirichlet weight is not distributive over x") {
    const AxiomReport r = check_distributivity(WeightFn::ones(600), 600);
    REQUIRE_FALSE(r.passed);
    REQUIRE(r.witness.has_value());
    // first witness is the split (1,1) at 2^2 = 4
    CHECK(r.witness->point == std::vector<std::int64_t>{2, 2, 1});
    CHECK(recheck_witness(WeightFn::ones(600), r));
  }
  SUBCASE("perturbing W(2,2) to 1 is caught at m = 4") {
    const WeightFn perturbed = WeightFn::coprime(600).with_override(2, 2, 1.0);
    const AxiomReport r = check_distributivity(perturbed, 600);
    REQUIRE_FALSE(r.passed);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->point == std::vector<std::int64_t>{2, 2, 1});
    CHECK(recheck_witness(perturbed, r));
  }
}

TEST_CASE("weight factorization over equal prime-power pairs") {
  CHECK(verify_weight_factorization(WeightFn::coprime(1000), 1000).passed);
  CHECK(verify_weight_factorization(WeightFn::ones(1000), 1000).passed);

  // A stable commutative weight built from a prime-power pair table:
  // W(n, q) = prod over p | gcd of t(p^v). Construct, then check.
  auto table_value = [](std::int64_t p, std::int64_t v) {
    return 1.0 / static_cast<double>(p + v);
  };
  const WeightFn synthetic(
      "synthetic",
      [table_value](std::int64_t n, std::int64_t q) {
        std::complex<double> acc = 1.0;
        for (const auto& pp : factorize(std::gcd(n, q)).parts) acc *= table_value(pp.p, pp.e);
        return acc;
      },
      1000, false);
  CHECK(check_commutativity(synthetic, 1000).passed);
  CHECK(check_stability(synthetic, 1000).passed);
  CHECK(check_identity(synthetic, 1000).passed);
  CHECK(verify_weight_factorization(synthetic, 1000).passed);
}

TEST_CASE("unicity search") {
  const UnicityResult result = unicity_search(40, 800, /*seed=*/12345);
  CHECK(result.baseline_all_pass);
  CHECK(result.baseline.size() == 5);
  REQUIRE(result.trials.size() == 40);
  CHECK(result.every_trial_failed);
  for (const auto& trial : result.trials) {
    REQUIRE(trial.any_failed);
    const WeightFn perturbed = WeightFn::coprime(800).with_override(
        trial.perturbation.a, trial.perturbation.b, trial.perturbation.replaced);
    bool rechecked = false;
    for (const auto& report : trial.reports) {
      if (!report.passed) {
        REQUIRE(report.witness.has_value());
        REQUIRE(recheck_witness(perturbed, report));
        rechecked = true;
      }
    }
    REQUIRE(rechecked);
  }
}

TEST_CASE("unicity search is deterministic per seed") {
  const UnicityResult a = unicity_search(10, 400, 7);
  const UnicityResult b = unicity_search(10, 400, 7);
  REQUIRE(a.trials.size() == b.trials.size());
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    CHECK(a.trials[i].perturbation.a == b.trials[i].perturbation.a);
    CHECK(a.trials[i].perturbation.b == b.trials[i].perturbation.b);
  }
}

TEST_CASE("fixed perturbations hit the expected axioms") {
  const WeightFn base = WeightFn::coprime(5000);
  SUBCASE("W(2,2) := 1 breaks distributivity") {
    const auto r = check_distributivity(base.with_override(2, 2, 1.0), 5000);
    REQUIRE_FALSE(r.passed);
  }
  SUBCASE("W(1,8) := 0 breaks the identity") {
    const auto r = check_identity(base.with_override(1, 8, 0.0), 5000);
    REQUIRE_FALSE(r.passed);
    CHECK(r.witness->point == std::vector<std::int64_t>{1, 8});
  }
}

TEST_CASE("weight files load with defaults and overrides") {
  const std::string path = "weight_test_tmp.tsv";
  {
    std::ofstream out(path);
    out << "# perturbed coprime table\n";
    out << "default coprime\n";
    out << "bound 400\n";
    out << "2 2 1.0\n";
  }
  const WeightFn w = WeightFn::from_file(path, 100);
  CHECK(w.domain_bound() == 400);
  CHECK(w(2, 2) == std::complex<double>(1.0));
  CHECK(w(2, 3) == std::complex<double>(1.0));
  CHECK(w(2, 4) == std::complex<double>(0.0));
  CHECK(w.exact01());
  const auto reports = check_all_axioms(w, 400);
  bool any_failed = false;
  for (const auto& r : reports) any_failed |= !r.passed;
  CHECK(any_failed);
  std::remove(path.c_str());
}
