// Batch front-end for the unitary-ring library: kernel evaluation, identity
// verification, weight axiom checks, and character tables. Reports are JSON
// (or CSV) on stdout; diagnostics go to stderr.
//
// Exit codes: 0 = pass, 1 = usage error, 2 = verification failure.

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "unitary/catalog.hpp"
#include "unitary/characters.hpp"
#include "unitary/expr.hpp"
#include "unitary/series.hpp"
#include "unitary/weight.hpp"

using json = nlohmann::ordered_json;
using namespace unitary;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json report_json(const IdentityReport& r) {
  json j;
  j["schema"] = "1";
  j["identity"] = r.identity;
  j["s"] = complex_json(r.s);
  j["N"] = r.truncation;
  j["lhs"] = complex_json(r.lhs);
  j["rhs"] = complex_json(r.rhs);
  j["abs_err"] = r.abs_err;
  j["tolerance"] = r.tolerance;
  j["status"] = r.passed ? "pass" : "fail";
  return j;
}

void print_report_csv(const std::vector<IdentityReport>& reports) {
  std::printf("identity,s_re,s_im,N,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,tolerance,status\n");
  for (const auto& r : reports) {
    std::printf("%s,%.17g,%.17g,%lld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s\n",
                r.identity.c_str(), r.s.real(), r.s.imag(),
                static_cast<long long>(r.truncation), r.lhs.real(), r.lhs.imag(), r.rhs.real(),
                r.rhs.imag(), r.abs_err, r.tolerance, r.passed ? "pass" : "fail");
  }
}

int thread_budget() {
  if (const char* env = std::getenv("UNITARY_RING_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return 0;  // auto
}

struct VerifyOptions {
  std::string identity;
  std::string f_expr = "one";
  std::string g_expr = "one";
  std::string s_text = "2";
  std::vector<std::string> z_texts;
  double x = 2.0;
  double y = 1.0;
  std::int64_t n = 100000;
  std::int64_t k = 5;
  std::int64_t a = 6;
  std::int64_t index = -1;
  std::int64_t bound = 5000;
  std::vector<std::int64_t> primes;
  std::string format = "json";
};

json axiom_report_json(const AxiomReport& r) {
  json j;
  j["axiom"] = std::string(to_string(r.axiom));
  j["status"] = r.passed ? "pass" : "fail";
  j["bound"] = r.bound;
  if (r.witness) {
    j["witness"] = {{"point", r.witness->point},
                    {"lhs", complex_json(r.witness->lhs)},
                    {"rhs", complex_json(r.witness->rhs)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

WeightFn resolve_weight(const std::string& source, std::int64_t bound) {
  if (source == "coprime") return WeightFn::coprime(bound);
  if (source == "ones") return WeightFn::ones(bound);
  if (source.rfind("file:", 0) == 0) return WeightFn::from_file(source.substr(5), bound);
  throw CLI::ValidationError("--weight", "expected 'coprime', 'ones' or 'file:PATH'");
}

void emit(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

// --- verify subcommand dispatch ---------------------------------------------

int run_series_identity(const VerifyOptions& opt) {
  const int threads = thread_budget();
  std::vector<IdentityReport> reports;

  if (opt.identity == "refactor" || opt.identity == "realimsplit" ||
      opt.identity == "orthproduct") {
    const Kernel f = parse_kernel_expr(opt.f_expr);
    const Kernel g = parse_kernel_expr(opt.g_expr);
    const std::complex<double> s = parse_complex_literal(opt.s_text);
    if (opt.identity == "refactor") {
      reports.push_back(verify_refactorization(f, g, s, opt.n, threads));
    } else if (opt.identity == "realimsplit") {
      reports.push_back(verify_realimsplit(f, g, s, opt.n, threads));
    } else {
      reports.push_back(verify_orthproduct(f, g, s, opt.n, threads));
    }
  } else if (opt.identity == "primecomp") {
    const Kernel f = parse_kernel_expr(opt.f_expr);
    const std::complex<double> s = parse_complex_literal(opt.s_text);
    reports.push_back(verify_primecompfactor(opt.primes, f, s, opt.n, threads));
  } else if (opt.identity == "hardy") {
    std::vector<std::string> zs = opt.z_texts;
    if (zs.empty()) zs.push_back("2+1i");
    for (const auto& z_text : zs) {
      reports.push_back(hardy_general(parse_complex_literal(z_text), opt.n, threads));
    }
  } else if (opt.identity == "zeta-minus-one") {
    reports.push_back(zeta_minus_one(parse_complex_literal(opt.s_text), opt.n));
  } else if (opt.identity == "zeta-minus-one-next") {
    reports.push_back(zeta_minus_one_next(parse_complex_literal(opt.s_text), opt.n));
  } else {
    throw CLI::ValidationError("verify", "unknown identity '" + opt.identity + "'");
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass &= r.passed;

  if (opt.format == "csv") {
    print_report_csv(reports);
  } else if (reports.size() == 1) {
    emit(report_json(reports.front()));
  } else {
    json j;
    j["schema"] = "1";
    j["identity"] = opt.identity;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r));
    j["status"] = all_pass ? "pass" : "fail";
    emit(j);
  }
  return all_pass ? kExitPass : kExitFail;
}

int run_hardy_classic(const VerifyOptions& opt) {
  const int threads = thread_budget();
  const double ratio = hardy_classic_ratio(opt.x, opt.n, threads);
  IdentityReport r = hardy_general({opt.x, 0.0}, opt.n, threads);
  r.identity = "hardy-classic";

  json j = report_json(r);
  j["ratio_partial_sum"] = ratio;
  if (opt.format == "csv") {
    print_report_csv({r});
  } else {
    emit(j);
  }
  return r.passed ? kExitPass : kExitFail;
}

int run_sumchar(const VerifyOptions& opt) {
  const CharacterBoxSum r = box_sum_all_characters(opt.k, opt.a);
  json j;
  j["schema"] = "1";
  j["identity"] = "sumchar";
  j["k"] = r.modulus;
  j["a"] = r.a;
  j["s"] = complex_json(r.s);
  j["v1_per_prime_form"] = r.v1;
  j["v2_final_form"] = r.v2;
  j["s_equals_v1"] = r.s_equals_v1;
  j["s_equals_v2"] = r.s_equals_v2;
  j["status"] = r.s_equals_v1 ? "pass" : "fail";
  emit(j);
  return r.s_equals_v1 ? kExitPass : kExitFail;
}

int run_derivation_cert(const VerifyOptions& opt) {
  const auto chars = characters(opt.k);
  std::vector<DerivationCertificate> certs;
  if (opt.index >= 0) {
    if (opt.index >= static_cast<std::int64_t>(chars.size())) {
      throw CLI::ValidationError("--index", "character index out of range");
    }
    certs.push_back(derivation_certificate(chars[static_cast<std::size_t>(opt.index)], opt.bound));
  } else {
    for (const auto& chi : chars) certs.push_back(derivation_certificate(chi, opt.bound));
  }

  bool all_pass = true;
  json arr = json::array();
  for (const auto& c : certs) {
    all_pass &= c.passed;
    json j;
    j["modulus"] = c.modulus;
    j["exponents"] = c.exponents;
    j["bound"] = c.bound;
    j["box_nonvanishing"] = c.box_nonvanishing;
    j["product_vanishes"] = c.product_vanishes;
    j["power_idempotent"] = c.power_idempotent;
    j["zero_indicator_idempotent"] = c.zero_indicator_idempotent;
    j["principal"] = c.principal;
    j["min_multiplier_abs"] = c.min_multiplier_abs;
    j["status"] = c.passed ? "pass" : "fail";
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(j);
  }
  json out;
  out["schema"] = "1";
  out["identity"] = "derivation-cert";
  out["k"] = opt.k;
  out["bound"] = opt.bound;
  out["certificates"] = arr;
  out["status"] = all_pass ? "pass" : "fail";
  emit(out);
  return all_pass ? kExitPass : kExitFail;
}

int run_scan_identity(const VerifyOptions& opt) {
  std::string name = opt.identity;
  bool passed = true;
  json extra;
  std::complex<double> worst_lhs = 0.0, worst_rhs = 0.0;
  double max_err = 0.0;
  std::optional<std::int64_t> witness;

  if (name == "eulerchar") {
    const Kernel composed = pointwise_mul(catalog::id(), box_add(catalog::one(), catalog::mob_rad()));
    const Kernel phi = catalog::phi();
    for (std::int64_t m = 1; m <= opt.bound; ++m) {
      const std::complex<double> lhs = composed.eval(m);
      const auto rhs = static_cast<double>(phi.eval_int(m));
      const double err = std::abs(lhs - rhs);
      if (err > max_err) {
        max_err = err;
        worst_lhs = lhs;
        worst_rhs = rhs;
      }
      if (err > 1e-6) {
        passed = false;
        if (!witness) witness = m;
      }
    }
  } else if (name == "ideplusone") {
    const Kernel boxed = box_add(catalog::id(), catalog::one());
    for (std::int64_t m = 1; m <= opt.bound; ++m) {
      std::int64_t direct = 0;
      for (const auto& [a, b] : unitary_divisor_pairs(m)) direct = checked_add(direct, a);
      const std::int64_t lhs = boxed.eval_int(m);
      if (lhs != direct) {
        passed = false;
        if (!witness) {
          witness = m;
          worst_lhs = static_cast<double>(lhs);
          worst_rhs = static_cast<double>(direct);
        }
      }
    }
  } else if (name == "twotime") {
    const Kernel f = parse_kernel_expr(opt.f_expr);
    const Kernel doubled = box_add(f, f);
    const Kernel expected = pointwise_mul(catalog::two_omega(), f);
    for (std::int64_t m = 1; m <= opt.bound; ++m) {
      const Factorization fact = factorize(m);
      const std::complex<double> lhs = doubled.eval(fact);
      const std::complex<double> rhs = expected.eval(fact);
      const double err = std::abs(lhs - rhs);
      if (err > max_err) {
        max_err = err;
        worst_lhs = lhs;
        worst_rhs = rhs;
      }
      if (err > 1e-9) {
        passed = false;
        if (!witness) witness = m;
      }
    }
    extra["f"] = opt.f_expr;
  } else if (name == "cosasina") {
    const Kernel k = box_add(pow_pointwise(catalog::cosa(opt.y), 2),
                             pow_pointwise(catalog::sina(opt.y), 2));
    for (const auto& pp : prime_powers_up_to(opt.bound)) {
      const std::complex<double> lhs = k.at(pp.p, pp.e);
      const double err = std::abs(lhs - 1.0);
      if (err > max_err) {
        max_err = err;
        worst_lhs = lhs;
        worst_rhs = 1.0;
      }
      if (err > 1e-12) {
        passed = false;
        if (!witness) witness = checked_pow(pp.p, pp.e);
      }
    }
    extra["y"] = opt.y;
  } else {
    throw CLI::ValidationError("verify", "unknown identity '" + name + "'");
  }

  json j;
  j["schema"] = "1";
  j["identity"] = name;
  j["s"] = nullptr;
  j["N"] = opt.bound;
  j["lhs"] = complex_json(worst_lhs);
  j["rhs"] = complex_json(worst_rhs);
  j["abs_err"] = max_err;
  j["tolerance"] = name == "cosasina" ? 1e-12 : (name == "ideplusone" ? 0.0 : 1e-6);
  j["status"] = passed ? "pass" : "fail";
  if (witness) j["witness"] = *witness;
  for (auto& [key, value] : extra.items()) j[key] = value;
  emit(j);
  return passed ? kExitPass : kExitFail;
}

int run_verify(const VerifyOptions& opt) {
  if (opt.identity == "hardy-classic") return run_hardy_classic(opt);
  if (opt.identity == "sumchar") return run_sumchar(opt);
  if (opt.identity == "derivation-cert") return run_derivation_cert(opt);
  if (opt.identity == "eulerchar" || opt.identity == "ideplusone" ||
      opt.identity == "twotime" || opt.identity == "cosasina") {
    return run_scan_identity(opt);
  }
  return run_series_identity(opt);
}

// --- axioms subcommand -------------------------------------------------------

int run_axioms(const std::string& weight_source, std::int64_t bound, int perturbations,
               std::uint64_t seed, const std::string& format) {
  if (perturbations > 0) {
    const UnicityResult result = unicity_search(perturbations, bound, seed);
    json j;
    j["schema"] = "1";
    j["mode"] = "unicity-search";
    j["bound"] = bound;
    j["seed"] = seed;
    j["baseline"] = json::array();
    for (const auto& r : result.baseline) j["baseline"].push_back(axiom_report_json(r));
    j["baseline_all_pass"] = result.baseline_all_pass;
    j["trials"] = json::array();
    for (const auto& t : result.trials) {
      json tj;
      tj["perturbation"] = {{"a", t.perturbation.a},
                            {"b", t.perturbation.b},
                            {"original", complex_json(t.perturbation.original)},
                            {"replaced", complex_json(t.perturbation.replaced)}};
      tj["reports"] = json::array();
      for (const auto& r : t.reports) tj["reports"].push_back(axiom_report_json(r));
      tj["any_failed"] = t.any_failed;
      j["trials"].push_back(tj);
    }
    j["every_trial_failed"] = result.every_trial_failed;
    const bool ok = result.baseline_all_pass && result.every_trial_failed;
    j["status"] = ok ? "pass" : "fail";
    emit(j);
    return ok ? kExitPass : kExitFail;
  }

  const WeightFn w = resolve_weight(weight_source, bound);
  const auto reports = check_all_axioms(w, bound);
  bool all_pass = true;
  for (const auto& r : reports) all_pass &= r.passed;

  if (format == "csv") {
    std::printf("axiom,status,witness\n");
    for (const auto& r : reports) {
      std::string point;
      if (r.witness) {
        for (std::size_t i = 0; i < r.witness->point.size(); ++i) {
          point += (i ? " " : "") + std::to_string(r.witness->point[i]);
        }
      }
      std::printf("%s,%s,\"%s\"\n", std::string(to_string(r.axiom)).c_str(),
                  r.passed ? "pass" : "fail", point.c_str());
    }
  } else {
    json j;
    j["schema"] = "1";
    j["weight"] = w.name();
    j["bound"] = bound;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(axiom_report_json(r));
    j["status"] = all_pass ? "pass" : "fail";
    emit(j);
  }
  return all_pass ? kExitPass : kExitFail;
}

// --- characters subcommand ---------------------------------------------------

int run_characters(std::int64_t k, const std::string& format) {
  const auto chars = characters(k);
  if (format == "csv") {
    std::printf("character");
    for (std::int64_t r = 0; r < k; ++r) std::printf(",%lld", static_cast<long long>(r));
    std::printf("\n");
    for (const auto& chi : chars) {
      std::printf("%s", chi.label().c_str());
      for (std::int64_t r = 0; r < k; ++r) {
        const std::complex<double> v = chi(r);
        std::printf(",\"%.12g,%.12g\"", v.real(), v.imag());
      }
      std::printf("\n");
    }
  } else {
    json j;
    j["schema"] = "1";
    j["k"] = k;
    j["phi"] = static_cast<std::int64_t>(chars.size());
    j["characters"] = json::array();
    for (const auto& chi : chars) {
      json cj;
      cj["label"] = chi.label();
      cj["exponents"] = chi.exponents();
      cj["order"] = chi.order();
      cj["values"] = json::array();
      for (std::int64_t r = 0; r < k; ++r) cj["values"].push_back(complex_json(chi(r)));
      j["characters"].push_back(cj);
    }
    emit(j);
  }
  return kExitPass;
}

// --- eval subcommand ---------------------------------------------------------

int run_eval(const std::string& expr, std::int64_t n) {
  const Kernel k = parse_kernel_expr(expr);
  if (k.flags().integer_valued) {
    std::printf("%lld\n", static_cast<long long>(k.eval_int(n)));
  } else {
    const std::complex<double> v = k.eval(n);
    if (v.imag() == 0.0) {
      std::printf("%.15g\n", v.real());
    } else {
      std::printf("%.15g%+.15gi\n", v.real(), v.imag());
    }
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unitary-ring: multiplicative-function ring calculator and identity verifier"};
  app.require_subcommand(1);

  // eval
  std::string eval_expr;
  std::int64_t eval_n = 1;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a kernel expression at n");
  eval_cmd->add_option("--expr", eval_expr, "kernel expression, e.g. 'box(one,inv(one))'")
      ->required();
  eval_cmd->add_option("--n", eval_n, "argument")->required()->check(CLI::PositiveNumber);

  // verify
  VerifyOptions vopt;
  CLI::App* verify_cmd = app.add_subcommand("verify", "verify a named identity");
  verify_cmd
      ->add_option("identity", vopt.identity,
                   "one of: refactor, realimsplit, hardy, hardy-classic, orthproduct, "
                   "primecomp, zeta-minus-one, zeta-minus-one-next, sumchar, derivation-cert, "
                   "eulerchar, ideplusone, twotime, cosasina")
      ->required();
  verify_cmd->add_option("--f", vopt.f_expr, "first kernel expression");
  verify_cmd->add_option("--g", vopt.g_expr, "second kernel expression");
  verify_cmd->add_option("--s", vopt.s_text, "complex s, e.g. '3' or '2+0.5i'");
  verify_cmd->add_option("--z", vopt.z_texts, "complex z for hardy (repeatable)");
  verify_cmd->add_option("--x", vopt.x, "real part for hardy-classic");
  verify_cmd->add_option("--y", vopt.y, "frequency for cosasina");
  verify_cmd->add_option("--n", vopt.n, "truncation point")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--k", vopt.k, "character modulus");
  verify_cmd->add_option("--a", vopt.a, "argument for sumchar");
  verify_cmd->add_option("--index", vopt.index, "character index (default: all)");
  verify_cmd->add_option("--bound", vopt.bound, "scan bound")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--primes", vopt.primes, "prime set for primecomp (comma-separated)")
      ->delimiter(',');
  verify_cmd->add_option("--format", vopt.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // axioms
  std::string weight_source = "coprime";
  std::int64_t axiom_bound = 5000;
  int perturbations = 0;
  std::uint64_t seed = 1;
  std::string axiom_format = "json";
  CLI::App* axioms_cmd = app.add_subcommand("axioms", "run the weight axiom checkers");
  axioms_cmd->add_option("--weight", weight_source, "coprime | ones | file:PATH");
  axioms_cmd->add_option("--bound", axiom_bound, "scan bound")->check(CLI::PositiveNumber);
  axioms_cmd->add_option("--perturbations", perturbations,
                         "run the unicity search with this many random perturbations");
  axioms_cmd->add_option("--seed", seed, "seed for the perturbation search");
  axioms_cmd->add_option("--format", axiom_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // characters
  std::int64_t char_k = 5;
  std::string char_format = "csv";
  CLI::App* chars_cmd = app.add_subcommand("characters", "print the character table mod k");
  chars_cmd->add_option("--k", char_k, "modulus (>= 2)")->required();
  chars_cmd->add_option("--format", char_format, "csv|json")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*eval_cmd) return run_eval(eval_expr, eval_n);
    if (*verify_cmd) return run_verify(vopt);
    if (*axioms_cmd) {
      return run_axioms(weight_source, axiom_bound, perturbations, seed, axiom_format);
    }
    if (*chars_cmd) {
      if (char_k < 2) throw CLI::ValidationError("--k", "modulus must be >= 2");
      return run_characters(char_k, char_format);
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "expression error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
