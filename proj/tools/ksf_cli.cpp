// ksf: command-line surface for evaluating the k-analogue special functions,
// checking single identities, and running seeded bulk sweeps with
// machine-readable reports.
//
// Exit codes: 0 pass, 1 numeric fail, 2 domain/usage error,
//             3 non-convergence, 4 paper-discrepancy-suspected.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ksf/ksf.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNumericFail = 1;
constexpr int kExitDomainError = 2;
constexpr int kExitNotConverged = 3;
constexpr int kExitPaperDiscrepancy = 4;

struct FunctionSpec {
  std::string id;
  std::vector<std::string> params;
  std::string description;
};

const std::vector<FunctionSpec>& function_table() {
  static const std::vector<FunctionSpec> table = {
      {"beta_k", {"k", "x", "y"}, "k-beta function B_k(x,y)"},
      {"f1_k", {"k", "alpha", "beta", "beta2", "gamma", "x", "y"},
       "Appell k-function F1,k (double series)"},
      {"f2_k", {"k", "alpha", "beta", "beta2", "gamma", "gamma2", "x", "y"},
       "Appell k-function F2,k (double series)"},
      {"f3_k", {"k", "alpha", "alpha2", "beta", "beta2", "gamma", "x", "y"},
       "Appell k-function F3,k (double series)"},
      {"f4_k", {"k", "alpha", "beta", "gamma", "gamma2", "x", "y"},
       "Appell k-function F4,k (double series)"},
      {"gamma_k", {"k", "x"}, "k-gamma function Gamma_k(x)"},
      {"hyp2f1_k", {"k", "alpha", "beta", "gamma", "x"}, "k-hypergeometric series 2F1,k"},
      {"hyp2f1_k_mixed", {"k", "alpha", "beta", "gamma"},
       "mixed-index 2F1,k* summed at unit argument"},
      {"kfrac_monomial", {"k", "eta", "mu"},
       "power rule for the k-fractional derivative of z^{eta/k}"},
      {"kfrac_quadrature", {"k", "eta", "mu", "z"},
       "k-fractional derivative of t^{eta/k} at z by direct quadrature (mu < 0)"},
      {"pochhammer_k", {"k", "x", "n"}, "Pochhammer k-symbol (x)_{n,k}"},
  };
  return table;
}

// name=value tokens; unknown or malformed names are rejected before any
// computation runs.
ksf::ParamMap parse_params(const std::vector<std::string>& tokens,
                           const std::vector<std::string>& allowed) {
  ksf::ParamMap out;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ksf::domain_error("expected name=value, got '" + tok + "'");
    }
    const std::string name = tok.substr(0, eq);
    const std::string value = tok.substr(eq + 1);
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
      std::string known;
      for (const auto& a : allowed) known += (known.empty() ? "" : ", ") + a;
      throw ksf::domain_error("unknown parameter '" + name + "' (expected: " + known + ")");
    }
    if (out.count(name)) throw ksf::domain_error("duplicate parameter '" + name + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      throw ksf::domain_error("cannot parse value for '" + name + "': '" + value + "'");
    }
    if (used != value.size()) {
      throw ksf::domain_error("cannot parse value for '" + name + "': '" + value + "'");
    }
    out[name] = v;
  }
  for (const auto& need : allowed) {
    if (!out.count(need)) throw ksf::domain_error("missing parameter '" + need + "'");
  }
  return out;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + output_path);
  f << text;
}

struct EvalOutput {
  ksf::EvalResult result;
  std::optional<double> exponent;  // kfrac_monomial only
};

EvalOutput run_function(const std::string& id, const ksf::ParamMap& p,
                        const ksf::EvalConfig& cfg) {
  using namespace ksf;
  const Scale s(arg(p, "k"));
  if (id == "gamma_k") return {exact_result(gamma_k(arg(p, "x"), s)), std::nullopt};
  if (id == "beta_k") return {exact_result(beta_k(arg(p, "x"), arg(p, "y"), s)), std::nullopt};
  if (id == "pochhammer_k") {
    const double n = arg(p, "n");
    if (n < 0.0 || n != std::floor(n)) {
      throw domain_error("pochhammer_k: n must be a nonnegative integer");
    }
    return {exact_result(pochhammer_k(arg(p, "x"), std::lround(n), s)), std::nullopt};
  }
  if (id == "hyp2f1_k") {
    return {hyp2f1_k_series(Hyp2F1Params(arg(p, "alpha"), arg(p, "beta"), arg(p, "gamma"), s),
                            arg(p, "x"), cfg),
            std::nullopt};
  }
  if (id == "hyp2f1_k_mixed") {
    return {hyp2f1_k_mixed(arg(p, "alpha"), arg(p, "beta"), arg(p, "gamma"), s, cfg),
            std::nullopt};
  }
  if (id == "f1_k" || id == "f2_k" || id == "f3_k" || id == "f4_k") {
    AppellParams ap;
    ap.scale = s;
    ap.alpha = arg(p, "alpha");
    if (id == "f1_k") {
      ap.kind = AppellKind::F1;
      ap.beta = arg(p, "beta");
      ap.beta2 = arg(p, "beta2");
      ap.gamma = arg(p, "gamma");
    } else if (id == "f2_k") {
      ap.kind = AppellKind::F2;
      ap.beta = arg(p, "beta");
      ap.beta2 = arg(p, "beta2");
      ap.gamma = arg(p, "gamma");
      ap.gamma2 = arg(p, "gamma2");
    } else if (id == "f3_k") {
      ap.kind = AppellKind::F3;
      ap.alpha2 = arg(p, "alpha2");
      ap.beta = arg(p, "beta");
      ap.beta2 = arg(p, "beta2");
      ap.gamma = arg(p, "gamma");
    } else {
      ap.kind = AppellKind::F4;
      ap.beta = arg(p, "beta");
      ap.gamma = arg(p, "gamma");
      ap.gamma2 = arg(p, "gamma2");
    }
    return {appell_series(ap, Point2{arg(p, "x"), arg(p, "y")}, cfg), std::nullopt};
  }
  if (id == "kfrac_monomial") {
    const PowerFunction pf = kfrac_monomial(arg(p, "eta"), FracOrder{arg(p, "mu"), s});
    return {exact_result(pf.coeff), pf.exponent};
  }
  if (id == "kfrac_quadrature") {
    const double ek = arg(p, "eta") / s.k;
    return {kfrac_quadrature([ek](double t) { return std::pow(t, ek); }, arg(p, "z"),
                             FracOrder{arg(p, "mu"), s}, cfg),
            std::nullopt};
  }
  throw ksf::domain_error("unknown function '" + id + "'");
}

int env_threads() {
  const char* v = std::getenv("KSF_THREADS");
  if (v == nullptr) return 1;
  const long n = std::strtol(v, nullptr, 10);
  return n >= 1 ? static_cast<int>(std::min<long>(n, 64)) : 1;
}

std::string list_functions(const std::string& format) {
  std::string out;
  if (format == "json") {
    out = "{\"functions\":[";
    bool first = true;
    for (const auto& f : function_table()) {
      if (!first) out += ',';
      first = false;
      out += "{\"description\":" + ksf::detail_io::json_escape(f.description);
      out += ",\"id\":" + ksf::detail_io::json_escape(f.id);
      out += ",\"params\":[";
      for (std::size_t i = 0; i < f.params.size(); ++i) {
        if (i) out += ',';
        out += ksf::detail_io::json_escape(f.params[i]);
      }
      out += "]}";
    }
    out += "]}\n";
    return out;
  }
  for (const auto& f : function_table()) {
    out += f.id + " (";
    for (std::size_t i = 0; i < f.params.size(); ++i) {
      if (i) out += ' ';
      out += f.params[i];
    }
    out += ") - " + f.description + '\n';
  }
  return out;
}

std::string list_identities(const std::string& format) {
  std::vector<const ksf::IdentityCase*> cases;
  for (const auto& c : ksf::identity_registry()) cases.push_back(&c);
  std::sort(cases.begin(), cases.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });
  std::string out;
  if (format == "json") {
    out = "{\"identities\":[";
    bool first = true;
    for (const auto* c : cases) {
      if (!first) out += ',';
      first = false;
      out += "{\"description\":" + ksf::detail_io::json_escape(c->description);
      out += ",\"id\":" + ksf::detail_io::json_escape(c->id);
      out += ",\"params\":[";
      for (std::size_t i = 0; i < c->params.size(); ++i) {
        if (i) out += ',';
        out += ksf::detail_io::json_escape(c->params[i]);
      }
      out += "],\"rel_tol\":" + ksf::detail_io::json_number(c->rel_tol);
      out += "}";
    }
    out += "]}\n";
    return out;
  }
  for (const auto* c : cases) {
    out += c->id + " (";
    for (std::size_t i = 0; i < c->params.size(); ++i) {
      if (i) out += ' ';
      out += c->params[i];
    }
    out += ") - " + c->description + '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-analogue special functions: evaluation and identity verification"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output_path;
  ksf::EvalConfig cfg;
  double rel_tol = cfg.rel_tol;
  long max_terms = cfg.max_terms;
  int quad_points = cfg.quad_points;
  int quad_levels = cfg.quad_levels;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", output_path, "write output to this path instead of stdout");
    sub->add_option("--rel-tol", rel_tol, "evaluation stop tolerance");
    sub->add_option("--max-terms", max_terms, "series term budget");
    sub->add_option("--quad-points", quad_points, "minimum quadrature node count");
    sub->add_option("--quad-levels", quad_levels, "quadrature refinement cap");
  };

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a function at named parameters");
  std::string eval_name;
  std::vector<std::string> eval_params;
  eval_cmd->add_option("function", eval_name, "function id (see: ksf list functions)")
      ->required();
  eval_cmd->add_option("params", eval_params, "name=value parameter assignments");
  add_common(eval_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check one identity at a given point");
  std::string verify_name;
  std::vector<std::string> verify_params;
  verify_cmd->add_option("identity", verify_name, "identity id (see: ksf list identities)")
      ->required();
  verify_cmd->add_option("params", verify_params, "name=value parameter assignments");
  add_common(verify_cmd);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "randomized in-domain sweep of one identity");
  std::string sweep_name;
  long n_samples = 0;
  std::uint64_t seed = 0;
  bool verbose = false;
  sweep_cmd->add_option("identity", sweep_name, "identity id")->required();
  sweep_cmd->add_option("--samples", n_samples, "number of samples")->required();
  sweep_cmd->add_option("--seed", seed, "RNG seed (required: runs must be reproducible)")
      ->required();
  sweep_cmd->add_flag("--verbose", verbose, "CSV output: one row per sample");
  add_common(sweep_cmd);

  // list
  auto* list_cmd = app.add_subcommand("list", "list functions or identities");
  std::string list_what;
  list_cmd->add_option("what", list_what, "functions | identities")
      ->required()
      ->check(CLI::IsMember({"functions", "identities"}));
  add_common(list_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitDomainError;
  }

  cfg.rel_tol = rel_tol;
  cfg.max_terms = max_terms;
  cfg.quad_points = quad_points;
  cfg.quad_levels = quad_levels;

  try {
    cfg.validate();

    if (list_cmd->parsed()) {
      emit(list_what == "functions" ? list_functions(format) : list_identities(format),
           output_path);
      return kExitPass;
    }

    if (eval_cmd->parsed()) {
      const auto& table = function_table();
      const auto it = std::find_if(table.begin(), table.end(),
                                   [&](const FunctionSpec& f) { return f.id == eval_name; });
      if (it == table.end()) {
        throw ksf::domain_error("unknown function '" + eval_name +
                                "' (see: ksf list functions)");
      }
      const ksf::ParamMap params = parse_params(eval_params, it->params);
      const EvalOutput out = run_function(eval_name, params, cfg);
      const double* expo = out.exponent ? &*out.exponent : nullptr;
      emit(format == "json" ? ksf::render_eval_json(out.result, expo)
                            : ksf::render_eval_text(out.result, expo),
           output_path);
      return out.result.converged ? kExitPass : kExitNotConverged;
    }

    if (verify_cmd->parsed()) {
      const ksf::IdentityCase& c = ksf::find_identity(verify_name);
      const ksf::ParamMap params = parse_params(verify_params, c.params);
      const ksf::SampleOutcome o = ksf::verify_identity(c, params, cfg);
      emit(format == "json" ? ksf::render_verify_json(c.id, o)
                            : ksf::render_verify_text(c.id, o),
           output_path);
      if (!o.error.empty()) return kExitDomainError;
      return o.pass ? kExitPass : kExitNumericFail;
    }

    if (sweep_cmd->parsed()) {
      const ksf::IdentityCase& c = ksf::find_identity(sweep_name);
      const ksf::SweepReport rep = ksf::sweep(c, n_samples, seed, cfg, env_threads());
      std::string text;
      if (format == "json") text = ksf::render_report_json(rep);
      else if (format == "csv") text = ksf::render_report_csv(rep, verbose);
      else text = ksf::render_report_text(rep);
      emit(text, output_path);
      if (rep.verdict == "pass") return kExitPass;
      if (rep.verdict == "paper-discrepancy-suspected") return kExitPaperDiscrepancy;
      return kExitNumericFail;
    }
  } catch (const ksf::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericFail;
  }
  return kExitPass;
}
