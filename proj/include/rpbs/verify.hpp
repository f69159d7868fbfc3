#pragma once

// Batch verification of a representation on a window: relations, vacuum
// conditions, lemma families, basis census, metric, grading and cyclicity.

#include "rpbs/fock.hpp"
#include "rpbs/free_algebra.hpp"
#include "rpbs/grading.hpp"
#include "rpbs/metric.hpp"
#include "rpbs/reach.hpp"
#include "rpbs/relations.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace rpbs {

struct VerifyConfig {
  int p = 2;
  int window_m = 8;
  int guard = 3;
  int lemma_bound = 6;
  bool mutate = false;  // corrupt one catalog relation; the run must then fail
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<CheckResult> checks;
  std::size_t beta_kets = 0;
  std::size_t basis_size = 0;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

/// The catalog with "[b-,{b+,b-}] = 2*b-" replaced by a wrong coefficient.
inline std::vector<RelationEntry> mutated_catalog() {
  auto cat = relation_catalog();
  for (auto& e : cat) {
    if (e.name == "[b-,{b+,b-}] = 2*b-") {
      e.name = "[b-,{b+,b-}] = 3*b-";
      e.element = e.element - gen(Generator::BMinus);
    }
  }
  return cat;
}

namespace detail {

inline CheckResult check_entries(const std::string& name, const std::vector<RelationEntry>& entries,
                                 const RepParams& params) {
  CheckResult r{name, true, ""};
  std::size_t kets = 0;
  for (const auto& e : entries) {
    if (max_rise(e.element) > params.window_m) continue;
    const auto rep = check_identity(e.element, params);
    kets += rep.kets_checked;
    if (!rep.holds) {
      r.passed = false;
      r.detail = e.name + " fails on " + to_string(rep.counterexample->ket) + ": image " +
                 to_string(rep.counterexample->image);
      return r;
    }
  }
  r.detail = std::to_string(entries.size()) + " identities, " + std::to_string(kets) + " ket evaluations";
  return r;
}

}  // namespace detail

inline CheckResult check_vacuum_conditions(const RepParams& params) {
  const State vac(kVacuum);
  const State pvac(kVacuum, params.p);
  auto w = [&](Generator a, Generator b) { return apply_word({a, b}, vac, params); };
  const bool ok = w(Generator::BMinus, Generator::BPlus) == pvac && w(Generator::FMinus, Generator::FPlus) == pvac &&
                  w(Generator::BMinus, Generator::FPlus).is_zero() && w(Generator::FMinus, Generator::BPlus).is_zero() &&
                  act(Generator::BMinus, vac, params).is_zero() && act(Generator::FMinus, vac, params).is_zero();
  return {"vacuum conditions", ok, ok ? "b-b+|0> = f-f+|0> = p|0>, b-f+|0> = f-b+|0> = 0" : "vacuum condition violated"};
}

inline CheckResult check_basis_census(const RepParams& params, std::size_t* beta_count = nullptr) {
  CheckResult r{"basis census", true, ""};
  const int p = params.p;
  std::size_t betas = 0;
  for (const auto& k : enumerate_basis(params)) betas += k.tag == Tag::Beta;
  for (int m = 0; m <= params.window_m && r.passed; ++m)
    for (int n = 0; n <= p; ++n) {
      const int expect = (m == 0 || n == 0 || n == p) ? 1 : 2;
      if (block_dim(p, m, n) != expect) {
        r.passed = false;
        r.detail = "dim V_{" + std::to_string(m) + "," + std::to_string(n) + "} is wrong";
        break;
      }
      if (m >= 1 && canonicalize(m, p, Tag::Beta, 1, params) != State(alpha(m, p), Rational(1, p))) r.passed = false;
      if (!canonicalize(0, n, Tag::Beta, 1, params).is_zero()) r.passed = false;
      if (!canonicalize(m, 0, Tag::Beta, 1, params).is_zero()) r.passed = false;
      if (!canonicalize(m, p + 1, Tag::Alpha, 1, params).is_zero()) r.passed = false;
    }
  if (r.passed) r.detail = std::to_string(enumerate_basis(params).size()) + " kets, " + std::to_string(betas) + " beta";
  else if (r.detail.empty()) r.detail = "canonicalization rule violated";
  if (beta_count) *beta_count = betas;
  return r;
}

/// (f+)^(n-1) (b+)^(m-1) R+ |0> reproduces |m,n,beta> for every beta ket in the window.
inline CheckResult check_beta_definition(const RepParams& params) {
  const FAElement rp = named_operator(NamedOperator::RPlus);
  for (const auto& k : enumerate_basis(params)) {
    if (k.tag != Tag::Beta) continue;
    const FAElement w = power(gen(Generator::FPlus), k.n - 1) * power(gen(Generator::BPlus), k.m - 1) * rp;
    if (evaluate(w, State(kVacuum), params) != State(k)) {
      return {"beta definition", false, "creation word does not reproduce " + to_string(k)};
    }
  }
  return {"beta definition", true, "all beta kets reproduced"};
}

/// N_b acts as m and N_f as n on every ket with m <= window_m - 1.
inline CheckResult check_number_operators(const RepParams& params) {
  const FAElement nb = named_operator(NamedOperator::Nb);
  const FAElement nf = named_operator(NamedOperator::Nf);
  for (const auto& k : enumerate_basis(RepParams(params.p, params.window_m - 1))) {
    if (evaluate(nb, k, params) != State(k, k.m) || evaluate(nf, k, params) != State(k, k.n)) {
      return {"number operators", false, "N_b/N_f not diagonal on " + to_string(k)};
    }
  }
  return {"number operators", true, "N_b = m, N_f = n"};
}

inline CheckResult check_gram_positivity(const Metric& metric) {
  const RepParams& params = metric.params();
  for (int m = 0; m <= params.window_m; ++m)
    for (int n = 0; n <= params.p; ++n) {
      const auto& g = metric.block(m, n);
      if (!g.matrix.is_symmetric()) return {"gram positivity", false, "asymmetric block"};
      for (const auto& minor : leading_minors(g.matrix))
        if (minor <= 0) {
          return {"gram positivity", false,
                  "nonpositive minor " + to_string(minor) + " in V_{" + std::to_string(m) + "," + std::to_string(n) + "}"};
        }
    }
  return {"gram positivity", true, "all leading minors positive"};
}

inline CheckResult check_adjointness(const Metric& metric) {
  const auto rep = adjointness_check(metric);
  if (rep.passed) return {"adjointness", true, std::to_string(rep.pairs_checked) + " pairs"};
  const auto& f = *rep.failure;
  return {"adjointness", false,
          std::string(to_string(f.raising)) + " fails on " + to_string(f.u) + ", " + to_string(f.v)};
}

inline CheckResult check_gradings(const std::vector<RelationEntry>& catalog, const RepParams& params) {
  for (const auto& e : catalog) {
    if (e.element.is_zero()) continue;
    if (!is_homogeneous(e.element, kMainGrading) || !is_homogeneous(e.element, kAltGrading)) {
      return {"gradings", false, e.name + " is not homogeneous"};
    }
  }
  const auto main = check_graded_module(kMainGrading, params);
  if (!main.graded) return {"gradings", false, "MAIN graded-module law fails"};
  const auto alt = check_graded_module(kAltGrading, params);
  if (alt.graded) return {"gradings", false, "ALT unexpectedly satisfies the graded-module law"};
  const auto& c = *alt.counterexample;
  return {"gradings", true,
          "catalog homogeneous under MAIN and ALT; MAIN module law holds; ALT fails at " +
              std::string(to_string(c.generator)) + " " + to_string(c.source)};
}

inline CheckResult check_cyclicity(const RepParams& params, int guard) {
  const auto rep = cyclicity_check(params, guard);
  return {"cyclicity", rep.cyclic,
          rep.cyclic ? std::to_string(rep.witness_words.size()) + " kets reach |0>" : rep.detail};
}

inline VerifyReport run_verification(const VerifyConfig& cfg) {
  if (cfg.guard > cfg.window_m) throw std::invalid_argument("guard must not exceed the window");
  const RepParams params(cfg.p, cfg.window_m);
  VerifyReport report;
  report.config = cfg;
  report.basis_size = enumerate_basis(params).size();

  const auto catalog = cfg.mutate ? mutated_catalog() : relation_catalog();
  report.checks.push_back(detail::check_entries("relation catalog", catalog, params));
  report.checks.push_back(check_vacuum_conditions(params));
  auto lemmas = lemma_identities(cfg.lemma_bound);
  for (auto& e : auxiliary_identities()) lemmas.push_back(std::move(e));
  report.checks.push_back(detail::check_entries("lemma families", lemmas, params));
  report.checks.push_back(check_basis_census(params, &report.beta_kets));
  report.checks.push_back(check_beta_definition(params));
  if (cfg.window_m >= 1) report.checks.push_back(check_number_operators(params));
  const Metric metric(params);
  report.checks.push_back(check_gram_positivity(metric));
  if (cfg.window_m >= 1) {
    report.checks.push_back(check_adjointness(metric));
    report.checks.push_back(check_gradings(catalog, params));
  }
  report.checks.push_back(check_cyclicity(params, cfg.guard));
  return report;
}

}  // namespace rpbs
