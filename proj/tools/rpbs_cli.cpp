// rpbs: command-line front end for the parastatistics representation toolkit.

#include "rpbs/rpbs.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace rpbs;

namespace {

constexpr const char* kOutEnv = "RPBS_OUT_DIR";

/// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.
enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2 };

struct Common {
  std::vector<int> p{2};
  int window = 8;
  int guard = 3;
  std::string out;
  std::string format = "json";
};

fs::path out_dir(const Common& c) {
  std::string dir = c.out;
  if (dir.empty()) {
    const char* env = std::getenv(kOutEnv);
    dir = env && *env ? env : "rpbs-out";
  }
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  std::cout << "wrote " << path.string() << "\n";
}

void write_json(const fs::path& path, const json& j) { write_file(path, j.dump(2) + "\n"); }

std::pair<int, int> parse_block(const std::string& text) {
  std::istringstream is(text);
  int m = -1, n = -1;
  char comma = 0;
  if (!(is >> m >> comma >> n) || comma != ',' || m < 0 || n < 0 || !is.eof())
    throw std::invalid_argument("block must be given as m,n; got '" + text + "'");
  return {m, n};
}

void validate(const Common& c) {
  if (c.p.empty()) throw std::invalid_argument("at least one p is required");
  for (int p : c.p)
    if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (c.window < 0) throw std::invalid_argument("window must be >= 0");
  if (c.guard < 0 || c.guard > c.window) throw std::invalid_argument("guard must satisfy 0 <= guard <= window");
  if (c.format != "json" && c.format != "csv") throw std::invalid_argument("format must be json or csv");
}

// ---- verify -------------------------------------------------------------------

struct VerifyOpts {
  int lemma_bound = 6;
  bool mutate = false;
};

json verify_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"schema", kSchemaVersion},
          {"p", r.config.p},
          {"window", r.config.window_m},
          {"guard", r.config.guard},
          {"lemma_bound", r.config.lemma_bound},
          {"mutate", r.config.mutate},
          {"basis_size", r.basis_size},
          {"beta_kets", r.beta_kets},
          {"passed", r.all_passed()},
          {"checks", checks}};
}

int cmd_verify(const Common& c, const VerifyOpts& v) {
  validate(c);
  const fs::path dir = out_dir(c);
  int code = kOk;
  for (int p : c.p) {
    const VerifyReport r = run_verification({p, c.window, c.guard, v.lemma_bound, v.mutate});
    for (const auto& chk : r.checks)
      std::cout << (chk.passed ? "ok   " : "FAIL ") << "p=" << p << " " << chk.name << ": " << chk.detail << "\n";
    write_json(dir / ("verify_p" + std::to_string(p) + ".json"), verify_json(r));
    if (const auto* f = r.first_failure()) {
      std::cerr << "verification failed for p=" << p << ": " << f->name << ": " << f->detail << "\n";
      code = kCheckFailed;
    }
  }
  return code;
}

// ---- expr -----------------------------------------------------------------------

int cmd_expr(const Common& c, const std::string& text, const std::string& apply) {
  validate(c);
  FAElement e;
  try {
    e = parse_element(text);
  } catch (const ParseError& err) {
    std::cerr << text << "\n" << std::string(err.offset, ' ') << "^\n" << err.what() << "\n";
    return kBadInput;
  }
  int code = kOk;
  for (int p : c.p) {
    const RepParams P(p, c.window);
    const std::string prefix = c.p.size() > 1 ? "p=" + std::to_string(p) + ": " : "";
    if (!apply.empty()) {
      std::cout << prefix << to_string(evaluate(e, parse_ket_label(apply), P)) << "\n";
      continue;
    }
    const auto r = check_identity(e, P);
    if (r.holds) {
      std::cout << prefix << "holds (" << r.kets_checked << " kets)\n";
    } else {
      std::cout << prefix << "fails on " << to_string(r.counterexample->ket) << ": "
                << to_string(r.counterexample->image) << "\n";
      code = kCheckFailed;
    }
  }
  return code;
}

// ---- matrix / gram --------------------------------------------------------------

struct MatrixOpts {
  std::string op = "T";
  std::string block;
  int K = -1;
};

std::string file_tag(std::string s) {
  std::string out;
  for (char ch : s) {
    if (std::isalnum(static_cast<unsigned char>(ch))) out += ch;
    else if (ch == '+') out += "plus";
    else if (ch == '-') out += "minus";
    else if (!out.empty() && out.back() != '_') out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? "expr" : out;
}

int cmd_matrix(const Common& c, const MatrixOpts& m) {
  validate(c);
  if (m.block.empty() == (m.K < 0)) throw std::invalid_argument("give exactly one of --block m,n or --K");
  const FAElement e = parse_element(m.op);
  const fs::path dir = out_dir(c);
  for (int p : c.p) {
    std::vector<BasisKet> kets;
    std::string where;
    int top = 0;
    if (!m.block.empty()) {
      const auto [bm, bn] = parse_block(m.block);
      if (bn > p) throw std::invalid_argument("block n exceeds p");
      kets = block_kets(p, bm, bn);
      top = bm;
      where = "m" + std::to_string(bm) + "n" + std::to_string(bn);
    } else {
      kets = k_block_kets(RepParams(p, m.K), m.K);
      top = m.K;
      where = "K" + std::to_string(m.K);
    }
    const RepParams P(p, top + max_rise(e));
    const ExactMatrix mat = materialize(e, P, kets);
    const std::string stem = "matrix_" + file_tag(m.op) + "_p" + std::to_string(p) + "_" + where;
    if (c.format == "csv") write_file(dir / (stem + ".csv"), matrix_csv(kets, mat));
    else write_json(dir / (stem + ".json"), matrix_json(m.op, p, kets, mat));
  }
  return kOk;
}

int cmd_gram(const Common& c, const std::string& block) {
  validate(c);
  const fs::path dir = out_dir(c);
  for (int p : c.p) {
    const Metric M(RepParams(p, c.window));
    json blocks = json::array();
    bool positive = true;
    for (int m = 0; m <= c.window; ++m)
      for (int n = 0; n <= p; ++n) {
        if (!block.empty() && parse_block(block) != std::pair{m, n}) continue;
        const auto& g = M.block(m, n);
        json b = gram_json(g, p);
        json minors = json::array();
        for (const auto& q : leading_minors(g.matrix)) {
          minors.push_back(rational_json(q));
          positive = positive && q > 0;
        }
        b["leading_minors"] = minors;
        b.erase("schema");
        blocks.push_back(b);
      }
    write_json(dir / ("gram_p" + std::to_string(p) + ".json"),
               {{"schema", kSchemaVersion}, {"p", p}, {"window", c.window}, {"positive", positive}, {"blocks", blocks}});
    if (!positive) return kCheckFailed;
  }
  return kOk;
}

// ---- spectrum / evolve ----------------------------------------------------------

struct DynOpts {
  int K = 2;
  double wb = 1.0;
  double wf = 1.0;
  double lambda = 0.1;
  std::string init;
  std::vector<double> times;
  double tmax = 10.0;
  int steps = 100;
};

HamiltonianParams weights(const DynOpts& d) {
  HamiltonianParams h;
  h.omega_b = d.wb;
  h.omega_f = d.wf;
  h.lambda = d.lambda;
  return h;
}

int cmd_spectrum(const Common& c, const DynOpts& d) {
  validate(c);
  if (d.K < 0) throw std::invalid_argument("K must be >= 0");
  const fs::path dir = out_dir(c);
  for (int p : c.p) {
    const Spectrum s = spectrum(p, weights(d), d.K);
    std::cout << "p=" << p << " K=" << d.K << " eigenvalues:";
    for (double x : s.eigenvalues) std::cout << " " << round_for_report(x);
    std::cout << "\n";
    write_json(dir / ("spectrum_p" + std::to_string(p) + "_K" + std::to_string(d.K) + ".json"),
               spectrum_json(s, p, weights(d)));
  }
  return kOk;
}

int cmd_evolve(const Common& c, const DynOpts& d) {
  validate(c);
  if (d.init.empty()) throw std::invalid_argument("--init m,n,a|b is required");
  const BasisKet k0 = parse_ket_label(d.init);
  std::vector<double> times = d.times;
  if (times.empty()) {
    if (d.steps < 1 || !(d.tmax >= 0)) throw std::invalid_argument("need steps >= 1 and tmax >= 0");
    for (int i = 0; i <= d.steps; ++i) times.push_back(d.tmax * i / d.steps);
  }
  const fs::path dir = out_dir(c);
  for (int p : c.p) {
    if (!is_canonical(k0, p)) throw std::invalid_argument(to_string(k0) + " is not a basis ket for p=" + std::to_string(p));
    const int K = k0.m + k0.n;
    const Metric M(RepParams(p, K + 1));
    const Trajectory tr = evolve(M, weights(d), K, State(k0), times);
    double drift = 0.0;
    for (double n : tr.norms) drift = std::max(drift, std::abs(n - 1.0));
    std::cout << "p=" << p << " K=" << K << " steps=" << times.size() << " max norm drift " << drift << "\n";
    const std::string stem = "evolve_p" + std::to_string(p) + "_" + file_tag(label(k0));
    if (c.format == "csv") write_file(dir / (stem + ".csv"), trajectory_csv(tr));
    else write_json(dir / (stem + ".json"), trajectory_json(tr, p));
  }
  return kOk;
}

// ---- reach / catalog / grading --------------------------------------------------

int cmd_reach(const Common& c) {
  validate(c);
  const fs::path dir = out_dir(c);
  int code = kOk;
  for (int p : c.p) {
    const auto r = cyclicity_check(RepParams(p, c.window), c.guard);
    json witnesses = json::object();
    for (const auto& [k, w] : r.witness_words) witnesses[label(k)] = word_json(w);
    json spans = json::object();
    for (const auto& [mn, words] : r.spanning_words) {
      json ws = json::array();
      for (const auto& w : words) ws.push_back(word_json(w));
      spans[std::to_string(mn.first) + "," + std::to_string(mn.second)] = ws;
    }
    json j{{"schema", kSchemaVersion}, {"p", p},          {"window", c.window}, {"guard", c.guard},
           {"cyclic", r.cyclic},        {"witness_words", witnesses}, {"spanning_words", spans}};
    if (r.stuck_ket) j["stuck_ket"] = label(*r.stuck_ket);
    if (!r.detail.empty()) j["detail"] = r.detail;
    std::cout << "p=" << p << " cyclic=" << (r.cyclic ? "true" : "false") << "\n";
    write_json(dir / ("reach_p" + std::to_string(p) + ".json"), j);
    if (!r.cyclic) code = kCheckFailed;
  }
  return code;
}

int cmd_catalog(const Common& c, int lemma_bound) {
  auto entries = relation_catalog();
  for (auto& e : auxiliary_identities()) entries.push_back(std::move(e));
  for (auto& e : lemma_identities(lemma_bound)) entries.push_back(std::move(e));
  write_json(out_dir(c) / "catalog.json", catalog_json(entries));
  return kOk;
}

int cmd_grading(const Common& c) {
  validate(c);
  json j = grading_json(relation_catalog(), {kMainGrading, kAltGrading});
  json modules = json::array();
  int code = kOk;
  for (int p : c.p) {
    for (const auto* g : {&kMainGrading, &kAltGrading}) {
      const auto r = check_graded_module(*g, RepParams(p, c.window));
      json m{{"p", p}, {"grading", g->name}, {"graded", r.graded}, {"actions_checked", r.actions_checked}};
      if (r.counterexample) {
        const auto& x = *r.counterexample;
        m["counterexample"] = {{"generator", std::string(to_string(x.generator))},
                               {"source", label(x.source)},
                               {"target", label(x.target)},
                               {"expected", to_string(x.expected)},
                               {"actual", to_string(x.actual)}};
      }
      std::cout << "p=" << p << " " << g->name << " graded=" << (r.graded ? "true" : "false") << "\n";
      if (r.graded != (g == &kMainGrading)) code = kCheckFailed;
      modules.push_back(m);
    }
  }
  j["module_law"] = modules;
  write_json(out_dir(c) / "grading.json", j);
  return code;
}

// ---- run --config ---------------------------------------------------------------

template <class T>
void take(const json& j, const char* key, T& into) {
  if (j.contains(key)) into = j.at(key).get<T>();
}

int cmd_run(const std::string& path, const std::string& out_override) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read config " + path);
  const json cfg = json::parse(f);
  Common base;
  if (cfg.contains("p")) {
    base.p = cfg["p"].is_array() ? cfg["p"].get<std::vector<int>>() : std::vector<int>{cfg["p"].get<int>()};
  }
  take(cfg, "window", base.window);
  take(cfg, "guard", base.guard);
  take(cfg, "out", base.out);
  take(cfg, "format", base.format);
  if (!out_override.empty()) base.out = out_override;
  validate(base);
  if (!cfg.contains("commands") || !cfg["commands"].is_array()) throw std::invalid_argument("config needs a commands array");

  int code = kOk;
  for (const auto& cmd : cfg["commands"]) {
    const std::string name = cmd.at("cmd").get<std::string>();
    Common c = base;
    take(cmd, "window", c.window);
    take(cmd, "guard", c.guard);
    take(cmd, "format", c.format);
    int rc = kOk;
    if (name == "verify") {
      VerifyOpts v;
      take(cmd, "lemma_bound", v.lemma_bound);
      take(cmd, "mutate", v.mutate);
      rc = cmd_verify(c, v);
    } else if (name == "expr") {
      std::string apply;
      take(cmd, "apply", apply);
      rc = cmd_expr(c, cmd.at("text").get<std::string>(), apply);
    } else if (name == "matrix") {
      MatrixOpts m;
      take(cmd, "op", m.op);
      take(cmd, "block", m.block);
      take(cmd, "K", m.K);
      rc = cmd_matrix(c, m);
    } else if (name == "gram") {
      std::string block;
      take(cmd, "block", block);
      rc = cmd_gram(c, block);
    } else if (name == "spectrum" || name == "evolve") {
      DynOpts d;
      take(cmd, "K", d.K);
      take(cmd, "wb", d.wb);
      take(cmd, "wf", d.wf);
      take(cmd, "lambda", d.lambda);
      take(cmd, "init", d.init);
      take(cmd, "times", d.times);
      take(cmd, "tmax", d.tmax);
      take(cmd, "steps", d.steps);
      rc = name == "spectrum" ? cmd_spectrum(c, d) : cmd_evolve(c, d);
    } else if (name == "reach") {
      rc = cmd_reach(c);
    } else if (name == "catalog") {
      int bound = 6;
      take(cmd, "lemma_bound", bound);
      rc = cmd_catalog(c, bound);
    } else if (name == "grading") {
      rc = cmd_grading(c);
    } else {
      throw std::invalid_argument("unknown command in config: " + name);
    }
    code = std::max(code, rc);
  }
  return code;
}

void add_common(CLI::App* sub, Common& c, bool with_guard) {
  sub->add_option("--p", c.p, "representation order(s), e.g. --p 1,2,3")->delimiter(',');
  sub->add_option("--window", c.window, "largest paraboson index m kept");
  if (with_guard) sub->add_option("--guard", c.guard, "guard band below the window");
  sub->add_option("--out", c.out, std::string("output directory (default $") + kOutEnv + " or ./rpbs-out)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rpbs: relative parabose set representations, metric, gradings and spectra"};
  app.require_subcommand(1);

  Common c;
  VerifyOpts vopts;
  MatrixOpts mopts;
  DynOpts dopts;
  std::string text, apply, block, config;
  int lemma_bound = 6;

  auto* verify = app.add_subcommand("verify", "check relations, vacuum, lemmas, metric, gradings and cyclicity");
  add_common(verify, c, true);
  verify->add_option("--lemma-bound", vopts.lemma_bound, "largest exponent for the lemma families");
  verify->add_flag("--mutate", vopts.mutate, "corrupt one relation; the run must fail");

  auto* expr = app.add_subcommand("expr", "check an expression as an identity, or apply it to a ket");
  expr->add_option("text", text, "expression")->required();
  add_common(expr, c, false);
  expr->add_option("--apply", apply, "ket m,n,a|b to apply the expression to");

  auto* matrix = app.add_subcommand("matrix", "exact matrix of an operator on a block");
  add_common(matrix, c, false);
  matrix->add_option("--op", mopts.op, "operator expression (T, Nb + Nf, b+ f-, ...)");
  matrix->add_option("--block", mopts.block, "(m,n) block as m,n");
  matrix->add_option("--K", mopts.K, "total-excitation block K = m + n");
  matrix->add_option("--format", c.format, "json or csv");

  auto* gram = app.add_subcommand("gram", "export Gram blocks and their leading minors");
  add_common(gram, c, false);
  gram->add_option("--block", block, "single block m,n (default: all blocks in the window)");

  auto* spec = app.add_subcommand("spectrum", "eigenvalues of the Hamiltonian on a K-block");
  add_common(spec, c, false);
  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--wb", dopts.wb, "paraboson frequency");
    sub->add_option("--wf", dopts.wf, "parafermion level gap");
    sub->add_option("--lambda", dopts.lambda, "coupling");
  };
  spec->add_option("--K", dopts.K, "total excitation m + n");
  add_weights(spec);

  auto* evolve_cmd = app.add_subcommand("evolve", "unitary evolution of a basis ket");
  add_common(evolve_cmd, c, false);
  add_weights(evolve_cmd);
  evolve_cmd->add_option("--init", dopts.init, "initial ket m,n,a|b")->required();
  evolve_cmd->add_option("--times", dopts.times, "explicit times, comma separated")->delimiter(',');
  evolve_cmd->add_option("--tmax", dopts.tmax, "final time when --times is absent");
  evolve_cmd->add_option("--steps", dopts.steps, "number of equal steps up to tmax");
  auto* evolve_format = evolve_cmd->add_option("--format", c.format, "csv (default) or json");

  auto* reach = app.add_subcommand("reach", "cyclicity of the vacuum with witness words");
  add_common(reach, c, true);

  auto* catalog = app.add_subcommand("catalog", "export the relation catalog");
  catalog->add_option("--out", c.out, "output directory");
  catalog->add_option("--lemma-bound", lemma_bound, "largest exponent for the lemma families");

  auto* grading = app.add_subcommand("grading", "degrees of all relations and the graded-module law");
  add_common(grading, c, false);

  auto* run = app.add_subcommand("run", "run a batch of commands from a JSON config file");
  run->add_option("--config", config, "config file")->required();
  run->add_option("--out", c.out, "output directory (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*verify) return cmd_verify(c, vopts);
    if (*expr) return cmd_expr(c, text, apply);
    if (*matrix) return cmd_matrix(c, mopts);
    if (*gram) return cmd_gram(c, block);
    if (*spec) return cmd_spectrum(c, dopts);
    if (*evolve_cmd) {
      if (evolve_format->count() == 0) c.format = "csv";
      return cmd_evolve(c, dopts);
    }
    if (*reach) return cmd_reach(c);
    if (*catalog) return cmd_catalog(c, lemma_bound);
    if (*grading) return cmd_grading(c);
    if (*run) return cmd_run(config, c.out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const WindowOverflow& e) {
    std::cerr << "error: " << e.what() << " (raise --window)\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
