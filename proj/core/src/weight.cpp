#include "unitary/weight.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "unitary/catalog.hpp"

namespace unitary {
namespace {

constexpr double kTolerance = 1e-12;

bool weights_equal(const WeightFn& w, std::complex<double> x, std::complex<double> y) {
  if (w.exact01()) return x == y;
  return std::abs(x - y) <= kTolerance;
}

AxiomReport pass_report(WeightAxiom axiom, std::int64_t bound) {
  AxiomReport r;
  r.axiom = axiom;
  r.passed = true;
  r.bound = bound;
  return r;
}

AxiomReport fail_report(WeightAxiom axiom, std::int64_t bound, std::vector<std::int64_t> point,
                        std::complex<double> lhs, std::complex<double> rhs) {
  AxiomReport r;
  r.axiom = axiom;
  r.passed = false;
  r.bound = bound;
  r.witness = AxiomWitness{std::move(point), lhs, rhs};
  return r;
}

// The two sides of the distributivity probe at m = p^n with split (l, n-l):
// lhs = [1_{p^l} conv 1_{p^f}](p^n) * 1_{p^n}(p^n),
// rhs = [(1_{p^l} x 1_{p^n}) conv (1_{p^f} x 1_{p^n})](p^n).
std::pair<std::complex<double>, std::complex<double>> distributivity_probe(
    const WeightFn& w, std::int64_t p, int n, int l) {
  const std::int64_t m = checked_pow(p, n);
  const Kernel fl = catalog::indicator_of(checked_pow(p, l));
  const Kernel ff = catalog::indicator_of(checked_pow(p, n - l));
  const Kernel fn = catalog::indicator_of(m);
  const std::complex<double> lhs = w_convolve(fl, ff, w, m) * fn.eval(m);
  const std::complex<double> rhs =
      w_convolve(pointwise_mul(fl, fn), pointwise_mul(ff, fn), w, m);
  return {lhs, rhs};
}

}  // namespace

WeightFn::WeightFn(std::string name, Rule rule, std::int64_t domain_bound, bool exact01)
    : name_(std::move(name)), rule_(std::move(rule)), domain_bound_(domain_bound),
      exact01_(exact01) {
  if (!rule_) throw std::invalid_argument("WeightFn: missing rule");
  if (domain_bound_ < 1) throw std::domain_error("WeightFn: domain bound must be >= 1");
}

std::complex<double> WeightFn::operator()(std::int64_t a, std::int64_t b) const {
  if (a < 1 || b < 1) throw std::domain_error("WeightFn: arguments must be >= 1");
  if (b > domain_bound_ / a) {
    throw std::domain_error("WeightFn '" + name_ + "': query (" + std::to_string(a) + "," +
                            std::to_string(b) + ") outside certified domain a*b <= " +
                            std::to_string(domain_bound_));
  }
  return rule_(a, b);
}

WeightFn WeightFn::with_override(std::int64_t a, std::int64_t b,
                                 std::complex<double> value) const {
  Rule base = rule_;
  const bool still_exact =
      exact01_ && value.imag() == 0.0 && (value.real() == 0.0 || value.real() == 1.0);
  return WeightFn(
      name_ + "[" + std::to_string(a) + "," + std::to_string(b) + ":=" +
          std::to_string(value.real()) + "]",
      [base, a, b, value](std::int64_t x, std::int64_t y) {
        if (x == a && y == b) return value;
        return base(x, y);
      },
      domain_bound_, still_exact);
}

WeightFn WeightFn::coprime(std::int64_t domain_bound) {
  return WeightFn(
      "coprime",
      [](std::int64_t a, std::int64_t b) {
        return std::complex<double>(std::gcd(a, b) == 1 ? 1.0 : 0.0);
      },
      domain_bound, true);
}

WeightFn WeightFn::ones(std::int64_t domain_bound) {
  return WeightFn(
      "ones", [](std::int64_t, std::int64_t) { return std::complex<double>(1.0); }, domain_bound,
      true);
}

WeightFn WeightFn::from_file(const std::string& path, std::int64_t default_bound) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("WeightFn::from_file: cannot open " + path);

  std::string default_rule = "coprime";
  std::int64_t bound = default_bound;
  auto overrides = std::make_shared<std::map<std::pair<std::int64_t, std::int64_t>,
                                             std::complex<double>>>();
  bool exact = true;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "default") {
      if (!(ls >> default_rule) || (default_rule != "coprime" && default_rule != "ones")) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": expected 'default coprime' or 'default ones'");
      }
    } else if (first == "bound") {
      if (!(ls >> bound) || bound < 1) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad bound");
      }
    } else {
      std::int64_t a = 0, b = 0;
      double v = 0.0;
      std::istringstream entry(line);
      if (!(entry >> a >> b >> v) || a < 1 || b < 1) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": expected 'a b value' with a,b >= 1");
      }
      (*overrides)[{a, b}] = v;
      if (v != 0.0 && v != 1.0) exact = false;
    }
  }

  return WeightFn(
      "file:" + path,
      [overrides, default_rule](std::int64_t a, std::int64_t b) {
        if (auto it = overrides->find({a, b}); it != overrides->end()) return it->second;
        if (default_rule == "ones") return std::complex<double>(1.0);
        return std::complex<double>(std::gcd(a, b) == 1 ? 1.0 : 0.0);
      },
      bound, exact);
}

std::complex<double> w_convolve(const Kernel& f, const Kernel& g, const WeightFn& w,
                                std::int64_t m) {
  if (m > w.domain_bound()) {
    throw std::domain_error("w_convolve: m exceeds the weight's certified domain");
  }
  std::complex<double> acc = 0.0;
  for (std::int64_t a : divisors(m)) acc += f.eval(a) * g.eval(m / a) * w(a, m / a);
  return acc;
}

std::string_view to_string(WeightAxiom axiom) {
  switch (axiom) {
    case WeightAxiom::commutativity: return "commutativity";
    case WeightAxiom::stability: return "stability";
    case WeightAxiom::identity: return "identity";
    case WeightAxiom::associativity: return "associativity";
    case WeightAxiom::distributivity: return "distributivity";
    case WeightAxiom::weight_factorization: return "weight_factorization";
  }
  return "unknown";
}

AxiomReport check_commutativity(const WeightFn& w, std::int64_t bound) {
  for (std::int64_t a = 1; a <= bound; ++a) {
    for (std::int64_t b = 1; b <= bound / a; ++b) {
      const auto lhs = w(a, b), rhs = w(b, a);
      if (!weights_equal(w, lhs, rhs)) {
        return fail_report(WeightAxiom::commutativity, bound, {a, b}, lhs, rhs);
      }
    }
  }
  return pass_report(WeightAxiom::commutativity, bound);
}

AxiomReport check_stability(const WeightFn& w, std::int64_t bound) {
  for (std::int64_t a = 1; a <= bound; ++a) {
    for (std::int64_t b = 1; b <= bound / a; ++b) {
      const std::int64_t ab = a * b;
      for (std::int64_t c = 1; c <= bound / ab; ++c) {
        for (std::int64_t d = 1; d <= bound / (ab * c); ++d) {
          if (std::gcd(ab, c * d) != 1) continue;
          const auto lhs = w(a, b) * w(c, d);
          const auto rhs = w(a * c, b * d);
          if (!weights_equal(w, lhs, rhs)) {
            return fail_report(WeightAxiom::stability, bound, {a, b, c, d}, lhs, rhs);
          }
        }
      }
    }
  }
  return pass_report(WeightAxiom::stability, bound);
}

AxiomReport check_identity(const WeightFn& w, std::int64_t bound) {
  const std::complex<double> one = 1.0;
  if (!weights_equal(w, w(1, 1), one)) {
    return fail_report(WeightAxiom::identity, bound, {1, 1}, w(1, 1), one);
  }
  for (const auto& pp : prime_powers_up_to(bound)) {
    const std::int64_t q = checked_pow(pp.p, pp.e);
    if (!weights_equal(w, w(1, q), one)) {
      return fail_report(WeightAxiom::identity, bound, {1, q}, w(1, q), one);
    }
    if (!weights_equal(w, w(q, 1), one)) {
      return fail_report(WeightAxiom::identity, bound, {q, 1}, w(q, 1), one);
    }
  }
  return pass_report(WeightAxiom::identity, bound);
}

AxiomReport check_associativity(const WeightFn& w, std::int64_t bound) {
  for (std::int64_t a = 1; a <= bound; ++a) {
    for (std::int64_t b = 1; b <= bound / a; ++b) {
      const std::int64_t ab = a * b;
      for (std::int64_t c = 1; c <= bound / ab; ++c) {
        const auto lhs = w(a, b) * w(ab, c);
        const auto rhs = w(b, c) * w(b * c, a);
        if (!weights_equal(w, lhs, rhs)) {
          return fail_report(WeightAxiom::associativity, bound, {a, b, c}, lhs, rhs);
        }
      }
    }
  }
  return pass_report(WeightAxiom::associativity, bound);
}

AxiomReport check_distributivity(const WeightFn& w, std::int64_t bound) {
  for (const auto& pp : prime_powers_up_to(bound)) {
    for (int l = 0; l <= pp.e; ++l) {
      const auto [lhs, rhs] = distributivity_probe(w, pp.p, pp.e, l);
      if (!weights_equal(w, lhs, rhs)) {
        return fail_report(WeightAxiom::distributivity, bound, {pp.p, pp.e, l}, lhs, rhs);
      }
    }
  }
  return pass_report(WeightAxiom::distributivity, bound);
}

std::vector<AxiomReport> check_all_axioms(const WeightFn& w, std::int64_t bound,
                                          bool stop_at_first_failure) {
  std::vector<AxiomReport> reports;
  const auto run = [&](AxiomReport r) {
    const bool failed = !r.passed;
    reports.push_back(std::move(r));
    return failed && stop_at_first_failure;
  };
  if (run(check_identity(w, bound))) return reports;
  if (run(check_commutativity(w, bound))) return reports;
  if (run(check_distributivity(w, bound))) return reports;
  if (run(check_associativity(w, bound))) return reports;
  run(check_stability(w, bound));
  return reports;
}

AxiomReport verify_weight_factorization(const WeightFn& w, std::int64_t bound) {
  for (std::int64_t n = 1; n <= bound; ++n) {
    for (std::int64_t q = 1; q <= bound / n; ++q) {
      const std::int64_t g = std::gcd(n, q);
      std::complex<double> expected = 1.0;
      for (const auto& pp : factorize(g).parts) {
        const std::int64_t pv = checked_pow(pp.p, pp.e);
        expected *= w(pv, pv);
      }
      const auto lhs = w(n, q);
      if (!weights_equal(w, lhs, expected)) {
        return fail_report(WeightAxiom::weight_factorization, bound, {n, q}, lhs, expected);
      }
    }
  }
  return pass_report(WeightAxiom::weight_factorization, bound);
}

bool recheck_witness(const WeightFn& w, const AxiomReport& report) {
  if (!report.witness) return false;
  const auto& pt = report.witness->point;
  switch (report.axiom) {
    case WeightAxiom::commutativity:
      return !weights_equal(w, w(pt[0], pt[1]), w(pt[1], pt[0]));
    case WeightAxiom::stability:
      return !weights_equal(w, w(pt[0], pt[1]) * w(pt[2], pt[3]),
                            w(pt[0] * pt[2], pt[1] * pt[3]));
    case WeightAxiom::identity:
      return !weights_equal(w, w(pt[0], pt[1]), std::complex<double>(1.0));
    case WeightAxiom::associativity:
      return !weights_equal(w, w(pt[0], pt[1]) * w(pt[0] * pt[1], pt[2]),
                            w(pt[1], pt[2]) * w(pt[1] * pt[2], pt[0]));
    case WeightAxiom::distributivity: {
      const auto [lhs, rhs] =
          distributivity_probe(w, pt[0], static_cast<int>(pt[1]), static_cast<int>(pt[2]));
      return !weights_equal(w, lhs, rhs);
    }
    case WeightAxiom::weight_factorization: {
      std::complex<double> expected = 1.0;
      for (const auto& pp : factorize(std::gcd(pt[0], pt[1])).parts) {
        const std::int64_t pv = checked_pow(pp.p, pp.e);
        expected *= w(pv, pv);
      }
      return !weights_equal(w, w(pt[0], pt[1]), expected);
    }
  }
  return false;
}

UnicityResult unicity_search(int perturbations, std::int64_t bound, std::uint64_t seed) {
  UnicityResult result;
  const WeightFn base = WeightFn::coprime(bound);

  result.baseline = check_all_axioms(base, bound);
  result.baseline_all_pass = true;
  for (const auto& r : result.baseline) result.baseline_all_pass &= r.passed;

  // Perturbable prime-power pairs (p^i, p^j) with i, j >= 1 and p^{i+j}
  // inside the scanned domain, so at least one checker can see the edit.
  std::vector<std::pair<std::int64_t, std::int64_t>> pair_sites;
  std::vector<std::int64_t> identity_sites;
  for (const auto& pp : prime_powers_up_to(bound)) {
    identity_sites.push_back(checked_pow(pp.p, pp.e));
    for (int i = 1; i < pp.e; ++i) {
      pair_sites.emplace_back(checked_pow(pp.p, i), checked_pow(pp.p, pp.e - i));
    }
  }

  std::mt19937_64 rng(seed);
  result.every_trial_failed = true;
  for (int t = 0; t < perturbations; ++t) {
    WeightPerturbation pert;
    const bool flip_pair = !pair_sites.empty() && (rng() % 2 == 0);
    if (flip_pair) {
      const auto& [a, b] = pair_sites[rng() % pair_sites.size()];
      pert = {a, b, base(a, b), std::complex<double>(1.0)};
    } else {
      const std::int64_t q = identity_sites[rng() % identity_sites.size()];
      pert = {1, q, base(1, q), std::complex<double>(0.0)};
    }
    const WeightFn perturbed = base.with_override(pert.a, pert.b, pert.replaced);

    UnicityTrial trial;
    trial.perturbation = pert;
    trial.reports = check_all_axioms(perturbed, bound, /*stop_at_first_failure=*/true);
    for (const auto& r : trial.reports) trial.any_failed |= !r.passed;
    result.every_trial_failed &= trial.any_failed;
    result.trials.push_back(std::move(trial));
  }
  return result;
}

}  // namespace unitary
