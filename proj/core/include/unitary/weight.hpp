#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unitary/kernel.hpp"

namespace unitary {

/// Weight of a generalized convolution: a total map (a, b) -> complex on the
/// certified domain a*b <= domain_bound(). Queries outside the domain throw.
class WeightFn {
 public:
  using Rule = std::function<std::complex<double>(std::int64_t a, std::int64_t b)>;

  WeightFn(std::string name, Rule rule, std::int64_t domain_bound, bool exact01);

  std::complex<double> operator()(std::int64_t a, std::int64_t b) const;

  const std::string& name() const { return name_; }
  std::int64_t domain_bound() const { return domain_bound_; }
  /// True when every value is exactly 0 or 1; such weights compare exactly.
  bool exact01() const { return exact01_; }

  /// Copy of this weight with a single entry replaced.
  WeightFn with_override(std::int64_t a, std::int64_t b, std::complex<double> value) const;

  /// W(a, b) = 1 when gcd(a, b) = 1, else 0.
  static WeightFn coprime(std::int64_t domain_bound);
  /// W == 1 everywhere (the Dirichlet convolution weight).
  static WeightFn ones(std::int64_t domain_bound);
  /// Load from a text file: optional "default coprime|ones" and "bound B"
  /// directives plus "a b value" override lines; '#' starts a comment.
  static WeightFn from_file(const std::string& path, std::int64_t default_bound);

 private:
  std::string name_;
  Rule rule_;
  std::int64_t domain_bound_;
  bool exact01_;
};

/// Weighted convolution value: sum of F(a) G(b) W(a, b) over ordered ab = m.
std::complex<double> w_convolve(const Kernel& f, const Kernel& g, const WeightFn& w,
                                std::int64_t m);

enum class WeightAxiom {
  commutativity,
  stability,
  identity,
  associativity,
  distributivity,
  weight_factorization,
};

std::string_view to_string(WeightAxiom axiom);

/// A failing scan point, together with the two sides of the violated
/// equation so the violation can be re-evaluated independently.
struct AxiomWitness {
  std::vector<std::int64_t> point;
  std::complex<double> lhs;
  std::complex<double> rhs;
};

struct AxiomReport {
  WeightAxiom axiom{};
  bool passed = false;
  std::int64_t bound = 0;
  std::optional<AxiomWitness> witness;
};

// Scans are exhaustive and lexicographic; a failing report carries the
// lexicographically least witness.

/// W(a, b) = W(b, a) for all ab <= bound.
AxiomReport check_commutativity(const WeightFn& w, std::int64_t bound);

/// W(a, b) W(c, d) = W(ac, bd) for all quadruples with (ab, cd) = 1 and
/// abcd <= bound.
AxiomReport check_stability(const WeightFn& w, std::int64_t bound);

/// W(1, p^e) = W(p^e, 1) = 1 for all prime powers p^e <= bound (plus
/// W(1,1) = 1), which makes delta1 the neutral element.
AxiomReport check_identity(const WeightFn& w, std::int64_t bound);

/// W(a, b) W(ab, c) = W(b, c) W(bc, a) for all triples with abc <= bound.
AxiomReport check_associativity(const WeightFn& w, std::int64_t bound);

/// Distributivity probed on the indicator family: for every prime power
/// p^n <= bound and split l + f = n, compare
/// [1_{p^l} convolved 1_{p^f}] x 1_{p^n} with [1_{p^l} x 1_{p^n}] convolved
/// [1_{p^f} x 1_{p^n}] at p^n. Witness point is (p, n, l).
AxiomReport check_distributivity(const WeightFn& w, std::int64_t bound);

/// All five checkers in increasing cost order; when stop_at_first_failure is
/// set the scan ends with the first failing report.
std::vector<AxiomReport> check_all_axioms(const WeightFn& w, std::int64_t bound,
                                          bool stop_at_first_failure = false);

/// For stable commutative weights with identity: W(n, q) must equal the
/// product of W(p^v, p^v) over the primes p | gcd(n, q) with v = v_p(gcd).
/// Scans all pairs nq <= bound.
AxiomReport verify_weight_factorization(const WeightFn& w, std::int64_t bound);

/// Re-evaluate a failing report's witness equation against w.
/// Returns true when the witness still violates the axiom.
bool recheck_witness(const WeightFn& w, const AxiomReport& report);

struct WeightPerturbation {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::complex<double> original;
  std::complex<double> replaced;
};

struct UnicityTrial {
  WeightPerturbation perturbation;
  std::vector<AxiomReport> reports;
  bool any_failed = false;
};

struct UnicityResult {
  std::vector<AxiomReport> baseline;
  bool baseline_all_pass = false;
  std::vector<UnicityTrial> trials;
  bool every_trial_failed = false;
};

/// Verify that the coprime weight passes every axiom up to bound while each
/// of `perturbations` random single-entry edits (either a same-prime pair
/// (p^i, p^j) with i, j >= 1 flipped to 1, or some W(1, p^e) set to 0)
/// breaks at least one axiom. Deterministic for a fixed seed.
UnicityResult unicity_search(int perturbations, std::int64_t bound, std::uint64_t seed);

}  // namespace unitary
