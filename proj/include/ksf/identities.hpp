#pragma once

// Registry of every two-sided identity in scope plus the seeded sweep engine
// that verifies them numerically.  Each case carries its own in-domain
// sampler (margins keep every draw at least 50% inside all convergence
// regions both sides need, so geometric tail bounds stay honest).
//
// Verdicts: "pass" when no sample fails; "paper-discrepancy-suspected" when
// at least 90% of samples fail with a structural residual (both sides
// individually stable under tightened budgets); "fail" otherwise.  Whenever
// the failure rate reaches 90% a classical-specialization audit (k forced to
// 1) also runs and its pass count is recorded, so k-power typos (audit
// passes) are distinguishable from k-independent ones (audit fails).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ksf/appell.hpp"
#include "ksf/core.hpp"
#include "ksf/hyp.hpp"
#include "ksf/kfrac.hpp"
#include "ksf/rng.hpp"
#include "ksf/types.hpp"

namespace ksf {

using ParamMap = std::map<std::string, double>;

inline double arg(const ParamMap& m, const std::string& name) {
  const auto it = m.find(name);
  if (it == m.end()) throw std::invalid_argument("missing parameter: " + name);
  return it->second;
}

struct SampleOutcome {
  long index = 0;
  ParamMap params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  double rel_err = 0.0;
  bool pass = false;
  std::string error;  // nonempty when an evaluator raised a domain/eval error
};

struct SweepReport {
  std::string id;
  std::uint64_t seed = 0;
  long samples = 0;
  long passes = 0;
  double max_rel_err = 0.0;
  double median_rel_err = 0.0;
  std::string verdict;  // pass | fail | paper-discrepancy-suspected
  std::vector<SampleOutcome> failures;
  long audit_samples = 0;  // classical-specialization audit at k = 1
  long audit_passes = 0;
  long error_samples = 0;
  std::vector<SampleOutcome> records;  // every sample, for verbose CSV
};

struct IdentityCase {
  std::string id;
  std::string description;
  std::vector<std::string> params;
  double rel_tol = 1e-9;
  long n_terms_outer = 0;     // truncation start for generating-relation sums
  double eval_rel_tol = 0.0;  // floor on the evaluation tolerance (0 = none)
  std::function<ParamMap(SampleRng&, double k)> sample;
  std::function<EvalResult(const ParamMap&, const EvalConfig&)> lhs, rhs;
};

namespace detail_id {

inline EvalResult scaled(EvalResult r, double f) {
  r.value *= f;
  r.abs_err_estimate = std::abs(f) * r.abs_err_estimate + std::abs(r.value) * 2e-16;
  return r;
}

inline EvalResult hyp(double a, double b, double c, double k, double x, const EvalConfig& cfg) {
  return hyp2f1_k_series(Hyp2F1Params(a, b, c, Scale(k)), x, cfg);
}

inline AppellParams make_f1(double a, double b, double b2, double c, double k) {
  AppellParams p;
  p.kind = AppellKind::F1;
  p.alpha = a;
  p.beta = b;
  p.beta2 = b2;
  p.gamma = c;
  p.scale = Scale(k);
  return p;
}

inline AppellParams make_f2(double a, double b, double b2, double c, double c2, double k) {
  AppellParams p;
  p.kind = AppellKind::F2;
  p.alpha = a;
  p.beta = b;
  p.beta2 = b2;
  p.gamma = c;
  p.gamma2 = c2;
  p.scale = Scale(k);
  return p;
}

inline AppellParams make_f3(double a, double a2, double b, double b2, double c, double k) {
  AppellParams p;
  p.kind = AppellKind::F3;
  p.alpha = a;
  p.alpha2 = a2;
  p.beta = b;
  p.beta2 = b2;
  p.gamma = c;
  p.scale = Scale(k);
  return p;
}

inline EvalResult f1(double a, double b, double b2, double c, double k, double x, double y,
                     const EvalConfig& cfg) {
  return appell_series(make_f1(a, b, b2, c, k), Point2{x, y}, cfg);
}

inline EvalResult f2(double a, double b, double b2, double c, double c2, double k, double x,
                     double y, const EvalConfig& cfg) {
  return appell_series(make_f2(a, b, b2, c, c2, k), Point2{x, y}, cfg);
}

inline EvalResult f3(double a, double a2, double b, double b2, double c, double k, double x,
                     double y, const EvalConfig& cfg) {
  return appell_series(make_f3(a, a2, b, b2, c, k), Point2{x, y}, cfg);
}

// Truncated outer sum  sum_n c_n factor^n inner1(n) [inner2(n)]  with
// c_{n+1}/c_n given by coeff_ratio(n).  Geometric tail bound from the last
// measured term ratios; when adaptive, the cap is raised to 200 terms if the
// bound still exceeds the tolerance at the starting cap.
struct GenSum {
  std::function<double(long)> coeff_ratio;
  std::function<EvalResult(long, const EvalConfig&)> inner1;
  std::function<EvalResult(long, const EvalConfig&)> inner2;  // may be null
  double factor = 0.0;
};

inline EvalResult generating_sum(const GenSum& g, long n_cap, bool adaptive,
                                 const EvalConfig& cfg) {
  cfg.validate();
  double coeff = 1.0;
  double sum = 0.0, err = 0.0;
  long terms = 0;
  double term = 0.0, prev_term = 0.0;
  double r1 = -1.0, r2 = -1.0;
  int zero_run = 0;
  long cap = std::max<long>(n_cap, 4);
  const long hard_cap = 200;
  bool converged = false;
  double tail = 0.0;
  for (long n = 0;; ++n) {
    EvalResult a = g.inner1(n, cfg);
    terms += a.terms_used;
    double val = a.value;
    double verr = a.abs_err_estimate;
    if (g.inner2) {
      EvalResult b = g.inner2(n, cfg);
      terms += b.terms_used;
      verr = std::abs(a.value) * b.abs_err_estimate + std::abs(b.value) * a.abs_err_estimate +
             a.abs_err_estimate * b.abs_err_estimate;
      val *= b.value;
    }
    term = coeff * val;
    sum += term;
    err += std::abs(coeff) * verr;
    if (term == 0.0) {
      if (++zero_run >= 2) {
        tail = 0.0;
        converged = true;
        break;
      }
    } else {
      zero_run = 0;
      if (prev_term != 0.0) {
        r2 = r1;
        r1 = std::abs(term / prev_term);
      }
    }
    prev_term = term;
    if (r1 >= 0.0 && r2 >= 0.0 && r1 < 1.0 && r2 < 1.0 && n >= 8) {
      const double rhat = std::min(std::max(r1, r2), 0.97);
      tail = 2.0 * std::abs(term) * rhat / (1.0 - rhat);
      if (tail <= cfg.rel_tol * std::max(1.0, std::abs(sum))) {
        converged = true;
        break;
      }
    } else {
      tail = std::abs(term);
    }
    if (n + 1 >= cap) {
      if (adaptive && cap < hard_cap) {
        cap = hard_cap;
      } else {
        break;
      }
    }
    coeff *= g.coeff_ratio(n) * g.factor;
  }
  return {sum, err + tail + std::abs(sum) * 1e-15, terms, converged};
}

}  // namespace detail_id

// Truncated left side of a generating relation (gf1..gf9); n_terms <= 0 uses
// the registered truncation with adaptive extension, a positive n_terms is a
// fixed cap (abs_err_estimate is the tail bound at that cap).
EvalResult generating_lhs(const std::string& id, const ParamMap& p, long n_terms,
                          const EvalConfig& cfg);

namespace detail_id {

inline EvalResult gf_lhs(const std::string& id, const ParamMap& p, long n_terms, bool adaptive,
                         const EvalConfig& cfg) {
  const double k = arg(p, "k");
  const double x = arg(p, "x");
  const double t = arg(p, "t");
  GenSum g;
  g.factor = t;
  if (id == "gf1") {
    const double lam = arg(p, "lambda"), al = arg(p, "alpha"), be = arg(p, "beta");
    g.coeff_ratio = [=](long n) { return (lam + n * k) / (n + 1.0); };
    g.inner1 = [=](long n, const EvalConfig& c) { return hyp(lam + n * k, al, be, k, x, c); };
  } else if (id == "gf2" || id == "gf3") {
    const double rho = arg(p, "rho"), al = arg(p, "alpha"), be = arg(p, "beta");
    const double lam = (id == "gf2") ? arg(p, "lambda") : be - rho;
    g.coeff_ratio = [=](long n) { return (lam + n * k) / (n + 1.0); };
    g.inner1 = [=](long n, const EvalConfig& c) {
      return hyp(rho - static_cast<double>(n) * k, al, be, k, x, c);
    };
  } else if (id == "gf4") {
    const double al = arg(p, "alpha"), be = arg(p, "beta");
    const double ga = arg(p, "gamma"), de = arg(p, "delta");
    g.coeff_ratio = [=](long n) {
      return (be + n * k) * (ga + n * k) / ((de + n * k) * (n + 1.0));
    };
    g.inner1 = [=](long n, const EvalConfig& c) {
      return hyp(-(static_cast<double>(n) * k), al, be, k, x, c);
    };
  } else if (id == "gf5" || id == "gf6") {
    const double al = arg(p, "alpha"), be = arg(p, "beta");
    const double ga = arg(p, "gamma"), de = arg(p, "delta");
    const double y = arg(p, "y");
    if (id == "gf5") {
      const double lam = arg(p, "lambda");
      g.coeff_ratio = [=](long n) { return (lam + n * k) / (n + 1.0); };
      g.inner1 = [=](long n, const EvalConfig& c) { return hyp(lam + n * k, al, be, k, x, c); };
    } else {
      const double rho = arg(p, "rho");
      const double lam = be - rho;
      g.coeff_ratio = [=](long n) { return (lam + n * k) / (n + 1.0); };
      g.inner1 = [=](long n, const EvalConfig& c) {
        return hyp(rho - static_cast<double>(n) * k, al, be, k, x, c);
      };
    }
    g.inner2 = [=](long n, const EvalConfig& c) {
      return hyp(-(static_cast<double>(n) * k), ga, de, k, y, c);
    };
  } else if (id == "gf7" || id == "gf8") {
    const double lam = arg(p, "lambda"), al = arg(p, "alpha"), be = arg(p, "beta");
    const double ga = arg(p, "gamma"), de = arg(p, "delta");
    const double y = arg(p, "y");
    g.coeff_ratio = [=](long n) { return (lam + n * k) / (n + 1.0); };
    g.inner1 = [=](long n, const EvalConfig& c) { return hyp(lam + n * k, al, be, k, x, c); };
    g.inner2 = [=](long n, const EvalConfig& c) { return hyp(lam + n * k, ga, de, k, y, c); };
  } else if (id == "gf9") {
    const double lam = arg(p, "lambda"), al = arg(p, "alpha"), ga = arg(p, "gamma");
    const double y = arg(p, "y");
    g.coeff_ratio = [=](long n) { return (lam + n * k) / (n + 1.0); };
    g.inner1 = [=](long n, const EvalConfig& c) { return hyp(lam + n * k, al, lam, k, x, c); };
    g.inner2 = [=](long n, const EvalConfig& c) { return hyp(lam + n * k, ga, lam, k, y, c); };
  } else {
    throw std::invalid_argument("generating_lhs: unknown relation id " + id);
  }
  return generating_sum(g, n_terms, adaptive, cfg);
}

// --- samplers -------------------------------------------------------------

inline double draw_pos(SampleRng& r) { return r.log_uniform(0.1, 5.0); }

inline ParamMap base_map(double k) { return ParamMap{{"k", k}}; }

// --- registry -------------------------------------------------------------

inline std::vector<IdentityCase> build_registry() {
  std::vector<IdentityCase> reg;

  auto add = [&reg](IdentityCase c) { reg.push_back(std::move(c)); };

  // ---- core ----
  {
    IdentityCase c;
    c.id = "kg1";
    c.description = "Gamma_k(x+k) = x Gamma_k(x)";
    c.params = {"k", "x"};
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["x"] = draw_pos(r);
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig&) {
      Scale s(arg(m, "k"));
      return exact_result(gamma_k(arg(m, "x") + s.k, s));
    };
    c.rhs = [](const ParamMap& m, const EvalConfig&) {
      Scale s(arg(m, "k"));
      return exact_result(arg(m, "x") * gamma_k(arg(m, "x"), s));
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "kb3";
    c.description = "B_k(x,y) = Gamma_k(x) Gamma_k(y) / Gamma_k(x+y)";
    c.params = {"k", "x", "y"};
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["x"] = draw_pos(r);
      m["y"] = draw_pos(r);
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig&) {
      Scale s(arg(m, "k"));
      return exact_result(beta_k(arg(m, "x"), arg(m, "y"), s));
    };
    c.rhs = [](const ParamMap& m, const EvalConfig&) {
      Scale s(arg(m, "k"));
      const double x = arg(m, "x"), y = arg(m, "y");
      return exact_result(gamma_k(x, s) * gamma_k(y, s) / gamma_k(x + y, s));
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "kpoc1";
    c.description = "(alpha)_{n,k} = Gamma_k(alpha + n k) / Gamma_k(alpha)";
    c.params = {"k", "alpha", "n"};
    c.rel_tol = 1e-9;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = draw_pos(r);
      m["n"] = static_cast<double>(r.uniform_int(0, 12));
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig&) {
      Scale s(arg(m, "k"));
      return exact_result(pochhammer_k(arg(m, "alpha"), std::lround(arg(m, "n")), s));
    };
    c.rhs = [](const ParamMap& m, const EvalConfig&) {
      Scale s(arg(m, "k"));
      const double a = arg(m, "alpha");
      const double n = arg(m, "n");
      const SignedLogGamma u = log_gamma_k_signed(a + n * s.k, s);
      const SignedLogGamma v = log_gamma_k_signed(a, s);
      return exact_result(u.sign * v.sign * std::exp(u.log_abs - v.log_abs));
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "kpoc2";
    c.description = "(alpha)_{n,k} = k^n (alpha/k)_n";
    c.params = {"k", "alpha", "n"};
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = draw_pos(r);
      m["n"] = static_cast<double>(r.uniform_int(0, 12));
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig&) {
      Scale s(arg(m, "k"));
      return exact_result(pochhammer_k(arg(m, "alpha"), std::lround(arg(m, "n")), s));
    };
    c.rhs = [](const ParamMap& m, const EvalConfig&) {
      const double k = arg(m, "k");
      const long n = std::lround(arg(m, "n"));
      return exact_result(std::pow(k, static_cast<double>(n)) *
                          pochhammer(arg(m, "alpha") / k, n));
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "kpoc3";
    c.description = "(alpha)_{m+n,k} = (alpha)_{m,k} (alpha + m k)_{n,k}";
    c.params = {"k", "alpha", "m", "n"};
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = draw_pos(r);
      m["m"] = static_cast<double>(r.uniform_int(0, 12));
      m["n"] = static_cast<double>(r.uniform_int(0, 12));
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig&) {
      Scale s(arg(m, "k"));
      return exact_result(
          pochhammer_k(arg(m, "alpha"), std::lround(arg(m, "m")) + std::lround(arg(m, "n")), s));
    };
    c.rhs = [](const ParamMap& m, const EvalConfig&) {
      Scale s(arg(m, "k"));
      const double a = arg(m, "alpha");
      const long mm = std::lround(arg(m, "m")), nn = std::lround(arg(m, "n"));
      return exact_result(pochhammer_k(a, mm, s) *
                          pochhammer_k(a + static_cast<double>(mm) * s.k, nn, s));
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "kpoc5";
    c.description = "sum_n (alpha)_{n,k} x^n/n! = (1-kx)^{-alpha/k}";
    c.params = {"k", "alpha", "x"};
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = draw_pos(r);
      m["x"] = r.uniform(-0.5, 0.5) / k;
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return k_binomial_series(arg(m, "x"), arg(m, "alpha"), Scale(arg(m, "k")), cfg);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig&) {
      return exact_result(k_binomial(arg(m, "x"), arg(m, "alpha"), Scale(arg(m, "k"))));
    };
    add(std::move(c));
  }

  // ---- hyp ----
  {
    IdentityCase c;
    c.id = "ikhf";
    c.description = "2F1,k series equals its Euler-type integral representation";
    c.params = {"k", "alpha", "beta", "gamma", "x"};
    c.rel_tol = 1e-6;
    c.eval_rel_tol = 1e-9;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = draw_pos(r);
      m["beta"] = r.log_uniform(0.1, 2.5);
      m["gamma"] = m["beta"] + r.log_uniform(0.1, 2.5);
      m["x"] = r.uniform(-0.5, 0.5) / k;
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return hyp(arg(m, "alpha"), arg(m, "beta"), arg(m, "gamma"), arg(m, "k"), arg(m, "x"), cfg);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const Hyp2F1Params p(arg(m, "alpha"), arg(m, "beta"), arg(m, "gamma"),
                           Scale(arg(m, "k")));
      return hyp2f1_k_integral(p, arg(m, "x"), cfg);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "kummer1";
    c.description = "unit-argument mixed series equals the k-Gauss gamma ratio";
    c.params = {"k", "alpha", "beta", "gamma"};
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = r.log_uniform(0.1, 2.0);
      m["beta"] = r.log_uniform(0.1, 2.0);
      m["gamma"] = m["beta"] + k * m["alpha"] + r.uniform(0.5, 3.0) * k;
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return hyp2f1_k_mixed(arg(m, "alpha"), arg(m, "beta"), arg(m, "gamma"),
                            Scale(arg(m, "k")), cfg);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig&) {
      return exact_result(
          gauss_sum_k(arg(m, "alpha"), arg(m, "beta"), arg(m, "gamma"), Scale(arg(m, "k"))));
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "kummer2";
    c.description = "terminating mixed series equals (gamma-beta)_{n,k}/(gamma)_{n,k}";
    c.params = {"k", "n", "beta", "gamma"};
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["n"] = static_cast<double>(r.uniform_int(0, 12));
      m["beta"] = draw_pos(r);
      m["gamma"] = draw_pos(r);
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig&) {
      Scale s(arg(m, "k"));
      const long n = std::lround(arg(m, "n"));
      const double beta = arg(m, "beta"), gamma = arg(m, "gamma");
      double sum = 0.0;
      for (long j = 0; j <= n; ++j) {
        double fact = 1.0;
        for (long i = 2; i <= j; ++i) fact *= static_cast<double>(i);
        sum += pochhammer(static_cast<double>(-n), j) * pochhammer_k(beta, j, s) /
               (pochhammer_k(gamma, j, s) * fact);
      }
      return exact_result(sum, n + 1);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig&) {
      return exact_result(terminating_mixed(std::lround(arg(m, "n")), arg(m, "beta"),
                                            arg(m, "gamma"), Scale(arg(m, "k"))));
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "Euler";
    c.description =
        "2F1,k(a,b;c;x) = (1-kx)^{-b/k} 2F1,k(c-a,b;c;-x/(1-kx))";
    c.params = {"k", "alpha", "beta", "gamma", "x"};
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = draw_pos(r);
      m["beta"] = draw_pos(r);
      m["gamma"] = draw_pos(r);
      m["x"] = r.uniform(-0.4, 0.4) / k;
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return hyp(arg(m, "alpha"), arg(m, "beta"), arg(m, "gamma"), arg(m, "k"), arg(m, "x"), cfg);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const Hyp2F1Params p(arg(m, "alpha"), arg(m, "beta"), arg(m, "gamma"),
                           Scale(arg(m, "k")));
      return euler_transform_rhs(p, arg(m, "x"), cfg);
    };
    add(std::move(c));
  }

  // ---- appell: integral representations ----
  {
    IdentityCase c;
    c.id = "ikapp";
    c.description = "F1,k double series equals its single-integral representation";
    c.params = {"k", "alpha", "beta", "beta2", "gamma", "x", "y"};
    c.rel_tol = 1e-6;
    c.eval_rel_tol = 1e-9;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = r.log_uniform(0.1, 2.0);
      m["gamma"] = m["alpha"] + r.log_uniform(0.1, 2.5);
      m["beta"] = draw_pos(r);
      m["beta2"] = draw_pos(r);
      m["x"] = r.uniform(-0.5, 0.5) / k;
      m["y"] = r.uniform(-0.5, 0.5) / k;
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return f1(arg(m, "alpha"), arg(m, "beta"), arg(m, "beta2"), arg(m, "gamma"), arg(m, "k"),
                arg(m, "x"), arg(m, "y"), cfg);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return f1_k_integral(make_f1(arg(m, "alpha"), arg(m, "beta"), arg(m, "beta2"),
                                   arg(m, "gamma"), arg(m, "k")),
                           Point2{arg(m, "x"), arg(m, "y")}, cfg);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "appk5";
    c.description = "F2,k double series equals its unit-square double integral";
    c.params = {"k", "alpha", "beta", "beta2", "gamma", "gamma2", "x", "y"};
    c.rel_tol = 1e-6;
    c.eval_rel_tol = 1e-8;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = r.log_uniform(0.1, 2.5);
      m["beta"] = r.log_uniform(0.1, 2.0);
      m["gamma"] = m["beta"] + r.log_uniform(0.1, 2.0);
      m["beta2"] = r.log_uniform(0.1, 2.0);
      m["gamma2"] = m["beta2"] + r.log_uniform(0.1, 2.0);
      const double radius = r.uniform(0.05, 0.5), split = r.uniform(0.0, 1.0);
      m["x"] = r.sign() * radius * split / k;
      m["y"] = r.sign() * radius * (1.0 - split) / k;
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return f2(arg(m, "alpha"), arg(m, "beta"), arg(m, "beta2"), arg(m, "gamma"),
                arg(m, "gamma2"), arg(m, "k"), arg(m, "x"), arg(m, "y"), cfg);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return f2_k_integral(make_f2(arg(m, "alpha"), arg(m, "beta"), arg(m, "beta2"),
                                   arg(m, "gamma"), arg(m, "gamma2"), arg(m, "k")),
                           Point2{arg(m, "x"), arg(m, "y")}, cfg);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "appk5ab";
    c.description = "F3,k double series equals its simplex double integral";
    c.params = {"k", "alpha", "alpha2", "beta", "beta2", "gamma", "x", "y"};
    c.rel_tol = 1e-6;
    c.eval_rel_tol = 1e-8;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = r.log_uniform(0.1, 2.5);
      m["alpha2"] = r.log_uniform(0.1, 2.5);
      m["beta"] = r.log_uniform(0.1, 2.0);
      m["beta2"] = r.log_uniform(0.1, 2.0);
      m["gamma"] = m["beta"] + m["beta2"] + r.log_uniform(0.1, 2.0);
      m["x"] = r.uniform(-0.5, 0.5) / k;
      m["y"] = r.uniform(-0.5, 0.5) / k;
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return f3(arg(m, "alpha"), arg(m, "alpha2"), arg(m, "beta"), arg(m, "beta2"),
                arg(m, "gamma"), arg(m, "k"), arg(m, "x"), arg(m, "y"), cfg);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return f3_k_integral(make_f3(arg(m, "alpha"), arg(m, "alpha2"), arg(m, "beta"),
                                   arg(m, "beta2"), arg(m, "gamma"), arg(m, "k")),
                           Point2{arg(m, "x"), arg(m, "y")}, cfg);
    };
    add(std::move(c));
  }

  // ---- appell: transformations (appk7..appk14) ----
  auto f1_transform_sampler = [](double range) {
    return [range](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = r.log_uniform(0.1, 2.0);
      m["gamma"] = m["alpha"] + r.log_uniform(0.1, 2.5);
      m["beta"] = r.log_uniform(0.1, 2.5);
      m["beta2"] = r.log_uniform(0.1, 2.5);
      m["x"] = r.uniform(-range, range) / k;
      m["y"] = r.uniform(-range, range) / k;
      return m;
    };
  };
  auto f1_lhs = [](const ParamMap& m, const EvalConfig& cfg) {
    return f1(arg(m, "alpha"), arg(m, "beta"), arg(m, "beta2"), arg(m, "gamma"), arg(m, "k"),
              arg(m, "x"), arg(m, "y"), cfg);
  };
  {
    IdentityCase c;
    c.id = "appk7";
    c.description = "F1,k Pfaff-type transformation in both variables";
    c.params = {"k", "alpha", "beta", "beta2", "gamma", "x", "y"};
    c.sample = f1_transform_sampler(0.3);
    c.lhs = f1_lhs;
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y");
      const double al = arg(m, "alpha"), be = arg(m, "beta"), b2 = arg(m, "beta2"),
                   ga = arg(m, "gamma");
      const double pref = std::pow(1.0 - k * x, -be / k) * std::pow(1.0 - k * y, -b2 / k);
      return scaled(
          f1(ga - al, be, b2, ga, k, -x / (1.0 - k * x), -y / (1.0 - k * y), cfg), pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "appk8";
    c.description = "F1,k transformation moving gamma-beta-beta2 into the x slot";
    c.params = {"k", "alpha", "beta", "beta2", "gamma", "x", "y"};
    c.sample = f1_transform_sampler(0.2);
    c.lhs = f1_lhs;
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y");
      const double al = arg(m, "alpha"), be = arg(m, "beta"), b2 = arg(m, "beta2"),
                   ga = arg(m, "gamma");
      const double pref = std::pow(1.0 - k * x, -al / k);
      return scaled(f1(al, ga - be - b2, b2, ga, k, -x / (1.0 - k * x),
                       -(x - y) / (1.0 - k * x), cfg),
                    pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "appk9";
    c.description = "F1,k transformation moving gamma-beta-beta2 into the y slot";
    c.params = {"k", "alpha", "beta", "beta2", "gamma", "x", "y"};
    c.sample = f1_transform_sampler(0.2);
    c.lhs = f1_lhs;
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y");
      const double al = arg(m, "alpha"), be = arg(m, "beta"), b2 = arg(m, "beta2"),
                   ga = arg(m, "gamma");
      const double pref = std::pow(1.0 - k * y, -al / k);
      return scaled(f1(al, be, ga - be - b2, ga, k, -(y - x) / (1.0 - k * y),
                       -y / (1.0 - k * y), cfg),
                    pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "appk10";
    c.description = "F1,k mixed transformation keeping x fixed";
    c.params = {"k", "alpha", "beta", "beta2", "gamma", "x", "y"};
    c.sample = f1_transform_sampler(0.2);
    c.lhs = f1_lhs;
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y");
      const double al = arg(m, "alpha"), be = arg(m, "beta"), b2 = arg(m, "beta2"),
                   ga = arg(m, "gamma");
      const double pref =
          std::pow(1.0 - k * x, (ga - al - be) / k) * std::pow(1.0 - k * y, -b2 / k);
      return scaled(f1(ga - al, ga - be - b2, b2, ga, k, x, -(y - x) / (1.0 - k * y), cfg),
                    pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "appk11";
    c.description = "F1,k mixed transformation keeping y fixed (as printed)";
    c.params = {"k", "alpha", "beta", "beta2", "gamma", "x", "y"};
    c.sample = f1_transform_sampler(0.2);
    c.lhs = f1_lhs;
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y");
      const double al = arg(m, "alpha"), be = arg(m, "beta"), b2 = arg(m, "beta2"),
                   ga = arg(m, "gamma");
      const double pref =
          std::pow(1.0 - k * x, -be / k) * std::pow(1.0 - k * y, (ga - al - b2) / k);
      return scaled(f1(ga - al, be, ga - be - b2, ga, k, -(y - x) / (1.0 - k * x), y, cfg),
                    pref);
    };
    add(std::move(c));
  }
  auto f2_transform_sampler = [](SampleRng& r, double k) {
    auto m = base_map(k);
    m["alpha"] = r.log_uniform(0.1, 2.5);
    m["beta"] = r.log_uniform(0.1, 2.0);
    m["gamma"] = m["beta"] + r.log_uniform(0.1, 2.0);
    m["beta2"] = r.log_uniform(0.1, 2.0);
    m["gamma2"] = m["beta2"] + r.log_uniform(0.1, 2.0);
    const double radius = r.uniform(0.05, 0.25), split = r.uniform(0.0, 1.0);
    m["x"] = r.sign() * radius * split / k;
    m["y"] = r.sign() * radius * (1.0 - split) / k;
    return m;
  };
  auto f2_lhs = [](const ParamMap& m, const EvalConfig& cfg) {
    return f2(arg(m, "alpha"), arg(m, "beta"), arg(m, "beta2"), arg(m, "gamma"),
              arg(m, "gamma2"), arg(m, "k"), arg(m, "x"), arg(m, "y"), cfg);
  };
  {
    IdentityCase c;
    c.id = "appk12";
    c.description = "F2,k transformation in the x variable";
    c.params = {"k", "alpha", "beta", "beta2", "gamma", "gamma2", "x", "y"};
    c.sample = f2_transform_sampler;
    c.lhs = f2_lhs;
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y");
      const double al = arg(m, "alpha"), be = arg(m, "beta"), b2 = arg(m, "beta2"),
                   ga = arg(m, "gamma"), g2 = arg(m, "gamma2");
      const double pref = std::pow(1.0 - k * x, -al / k);
      return scaled(
          f2(al, ga - be, b2, ga, g2, k, -x / (1.0 - k * x), y / (1.0 - k * x), cfg), pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "appk13";
    c.description = "F2,k transformation in the y variable";
    c.params = {"k", "alpha", "beta", "beta2", "gamma", "gamma2", "x", "y"};
    c.sample = f2_transform_sampler;
    c.lhs = f2_lhs;
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y");
      const double al = arg(m, "alpha"), be = arg(m, "beta"), b2 = arg(m, "beta2"),
                   ga = arg(m, "gamma"), g2 = arg(m, "gamma2");
      const double pref = std::pow(1.0 - k * y, -al / k);
      return scaled(
          f2(al, be, g2 - b2, ga, g2, k, x / (1.0 - k * y), -y / (1.0 - k * y), cfg), pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "appk14";
    c.description = "F2,k transformation in both variables";
    c.params = {"k", "alpha", "beta", "beta2", "gamma", "gamma2", "x", "y"};
    c.sample = f2_transform_sampler;
    c.lhs = f2_lhs;
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y");
      const double al = arg(m, "alpha"), be = arg(m, "beta"), b2 = arg(m, "beta2"),
                   ga = arg(m, "gamma"), g2 = arg(m, "gamma2");
      const double d = 1.0 - k * x - k * y;
      const double pref = std::pow(d, -al / k);
      return scaled(f2(al, ga - be, g2 - b2, ga, g2, k, -x / d, -y / d, cfg), pref);
    };
    add(std::move(c));
  }

  // ---- appell: reductions (appk15..appk18, appk19) ----
  {
    IdentityCase c;
    c.id = "appk15";
    c.description = "F1,k at gamma = beta+beta2 reduces to a single 2F1,k (x form)";
    c.params = {"k", "alpha", "beta", "beta2", "x", "y"};
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = r.log_uniform(0.1, 2.5);
      m["beta"] = r.log_uniform(0.1, 2.5);
      m["beta2"] = r.log_uniform(0.1, 2.5);
      m["x"] = r.uniform(-0.2, 0.2) / k;
      m["y"] = r.uniform(-0.2, 0.2) / k;
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double be = arg(m, "beta"), b2 = arg(m, "beta2");
      return f1(arg(m, "alpha"), be, b2, be + b2, arg(m, "k"), arg(m, "x"), arg(m, "y"), cfg);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y");
      const double al = arg(m, "alpha"), be = arg(m, "beta"), b2 = arg(m, "beta2");
      const double pref = std::pow(1.0 - k * x, -al / k);
      return scaled(hyp(al, b2, be + b2, k, -(x - y) / (1.0 - k * x), cfg), pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "appk16";
    c.description = "F1,k at gamma = beta+beta2 reduces to a single 2F1,k (y form)";
    c.params = {"k", "alpha", "beta", "beta2", "x", "y"};
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = r.log_uniform(0.1, 2.5);
      m["beta"] = r.log_uniform(0.1, 2.5);
      m["beta2"] = r.log_uniform(0.1, 2.5);
      m["x"] = r.uniform(-0.2, 0.2) / k;
      m["y"] = r.uniform(-0.2, 0.2) / k;
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double be = arg(m, "beta"), b2 = arg(m, "beta2");
      return f1(arg(m, "alpha"), be, b2, be + b2, arg(m, "k"), arg(m, "x"), arg(m, "y"), cfg);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y");
      const double al = arg(m, "alpha"), be = arg(m, "beta"), b2 = arg(m, "beta2");
      const double pref = std::pow(1.0 - k * y, -al / k);
      return scaled(hyp(al, be, be + b2, k, -(y - x) / (1.0 - k * y), cfg), pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "appk17";
    c.description = "F2,k at gamma = beta reduces to a single 2F1,k in y";
    c.params = {"k", "alpha", "beta", "beta2", "gamma2", "x", "y"};
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = r.log_uniform(0.1, 2.5);
      m["beta"] = r.log_uniform(0.1, 2.5);
      m["beta2"] = r.log_uniform(0.1, 2.0);
      m["gamma2"] = m["beta2"] + r.log_uniform(0.1, 2.0);
      const double radius = r.uniform(0.05, 0.25), split = r.uniform(0.0, 1.0);
      m["x"] = r.sign() * radius * split / k;
      m["y"] = r.sign() * radius * (1.0 - split) / k;
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double be = arg(m, "beta");
      return f2(arg(m, "alpha"), be, arg(m, "beta2"), be, arg(m, "gamma2"), arg(m, "k"),
                arg(m, "x"), arg(m, "y"), cfg);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y");
      const double al = arg(m, "alpha");
      const double pref = std::pow(1.0 - k * x, -al / k);
      return scaled(hyp(al, arg(m, "beta2"), arg(m, "gamma2"), k, y / (1.0 - k * x), cfg),
                    pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "appk18";
    c.description = "F2,k at gamma2 = beta2 reduces to a single 2F1,k in x";
    c.params = {"k", "alpha", "beta", "beta2", "gamma", "x", "y"};
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = r.log_uniform(0.1, 2.5);
      m["beta"] = r.log_uniform(0.1, 2.0);
      m["gamma"] = m["beta"] + r.log_uniform(0.1, 2.0);
      m["beta2"] = r.log_uniform(0.1, 2.5);
      const double radius = r.uniform(0.05, 0.25), split = r.uniform(0.0, 1.0);
      m["x"] = r.sign() * radius * split / k;
      m["y"] = r.sign() * radius * (1.0 - split) / k;
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double b2 = arg(m, "beta2");
      return f2(arg(m, "alpha"), arg(m, "beta"), b2, arg(m, "gamma"), b2, arg(m, "k"),
                arg(m, "x"), arg(m, "y"), cfg);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y");
      const double al = arg(m, "alpha");
      const double pref = std::pow(1.0 - k * y, -al / k);
      return scaled(hyp(al, arg(m, "beta"), arg(m, "gamma"), k, x / (1.0 - k * y), cfg), pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "appk19";
    c.description = "F1,k expressed through F3,k with the y variable mapped";
    c.params = {"k", "alpha", "beta", "beta2", "gamma", "x", "y"};
    c.sample = f1_transform_sampler(0.2);
    c.lhs = f1_lhs;
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y");
      const double al = arg(m, "alpha"), be = arg(m, "beta"), b2 = arg(m, "beta2"),
                   ga = arg(m, "gamma");
      const double pref = std::pow(1.0 - k * y, -b2 / k);
      return scaled(f3(al, ga - al, be, b2, ga, k, x, -y / (1.0 - k * y), cfg), pref);
    };
    add(std::move(c));
  }

  // ---- kfrac ----
  {
    IdentityCase c;
    c.id = "krl3";
    c.description = "power rule for the k-fractional derivative vs direct quadrature";
    c.params = {"k", "eta", "mu", "z"};
    c.rel_tol = 1e-6;
    c.eval_rel_tol = 1e-9;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(std::clamp(k, 0.5, 3.0));
      m["eta"] = r.log_uniform(0.1, 3.0);
      m["mu"] = r.uniform(-2.0, -0.1);
      m["z"] = r.uniform(0.2, 1.0);
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig&) {
      const FracOrder o{arg(m, "mu"), Scale(arg(m, "k"))};
      const PowerFunction pf = kfrac_monomial(arg(m, "eta"), o);
      return exact_result(pf(arg(m, "z")));
    };
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double ek = arg(m, "eta") / arg(m, "k");
      const FracOrder o{arg(m, "mu"), Scale(arg(m, "k"))};
      return kfrac_quadrature([ek](double t) { return std::pow(t, ek); }, arg(m, "z"), o, cfg);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "krl4";
    c.description = "closed form for the derivative of z^{eta/k-1}(1-kz)^{-beta/k}";
    c.params = {"k", "eta", "mu", "beta", "z"};
    c.rel_tol = 1e-8;
    c.n_terms_outer = 60;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["eta"] = r.log_uniform(0.1, 2.0);
      m["mu"] = m["eta"] + r.log_uniform(0.1, 3.0);
      m["beta"] = draw_pos(r);
      m["z"] = r.uniform(0.05, 0.4) / k;
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return krl4_closed(arg(m, "eta"), arg(m, "mu"), arg(m, "beta"), Scale(arg(m, "k")),
                         arg(m, "z"), cfg);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return krl4_termwise(arg(m, "eta"), arg(m, "mu"), arg(m, "beta"), Scale(arg(m, "k")),
                           arg(m, "z"), 60, cfg);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "krl5";
    c.description = "closed form for the derivative of the double k-binomial product";
    c.params = {"k", "eta", "mu", "alpha", "beta", "a", "b", "z"};
    c.rel_tol = 1e-8;
    c.n_terms_outer = 60;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["eta"] = r.log_uniform(0.1, 2.0);
      m["mu"] = m["eta"] + r.log_uniform(0.1, 3.0);
      m["alpha"] = r.log_uniform(0.1, 2.5);
      m["beta"] = r.log_uniform(0.1, 2.5);
      m["a"] = r.sign() * r.uniform(0.2, 1.0);
      m["b"] = r.sign() * r.uniform(0.2, 1.0);
      const double amax = std::max(std::abs(m["a"]), std::abs(m["b"]));
      m["z"] = r.uniform(0.2, 1.0) * 0.4 / (k * amax);
      return m;
    };
    c.lhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return krl5_closed(arg(m, "eta"), arg(m, "mu"), arg(m, "alpha"), arg(m, "beta"),
                         arg(m, "a"), arg(m, "b"), Scale(arg(m, "k")), arg(m, "z"), cfg);
    };
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      return krl5_termwise(arg(m, "eta"), arg(m, "mu"), arg(m, "alpha"), arg(m, "beta"),
                           arg(m, "a"), arg(m, "b"), Scale(arg(m, "k")), arg(m, "z"), 60, cfg);
    };
    add(std::move(c));
  }

  // ---- generating relations ----
  auto gen_lhs_for = [](std::string id) {
    return [id](const ParamMap& m, const EvalConfig& cfg) {
      return gf_lhs(id, m, 40, true, cfg);
    };
  };
  {
    IdentityCase c;
    c.id = "gf1";
    c.description = "linear generating relation with shifted upper parameter";
    c.params = {"k", "lambda", "alpha", "beta", "x", "t"};
    c.rel_tol = 1e-8;
    c.n_terms_outer = 40;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["lambda"] = draw_pos(r);
      m["alpha"] = draw_pos(r);
      m["beta"] = draw_pos(r);
      m["t"] = r.uniform(-0.3, 0.3) / k;
      m["x"] = r.uniform(-0.5, 0.5) * std::min(1.0, 1.0 - k * m["t"]) / k;
      return m;
    };
    c.lhs = gen_lhs_for("gf1");
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), t = arg(m, "t");
      const double lam = arg(m, "lambda");
      const double pref = std::pow(1.0 - k * t, -lam / k);
      return scaled(hyp(lam, arg(m, "alpha"), arg(m, "beta"), k, x / (1.0 - k * t), cfg), pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "gf2";
    c.description = "generating relation producing F1,k on the right";
    c.params = {"k", "lambda", "rho", "alpha", "beta", "x", "t"};
    c.rel_tol = 1e-8;
    c.n_terms_outer = 40;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["lambda"] = draw_pos(r);
      m["rho"] = draw_pos(r);
      m["alpha"] = draw_pos(r);
      m["beta"] = draw_pos(r);
      m["x"] = r.uniform(-0.3, 0.3) / k;
      m["t"] = r.uniform(-0.25, 0.25) / k;
      return m;
    };
    c.lhs = gen_lhs_for("gf2");
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), t = arg(m, "t");
      const double lam = arg(m, "lambda");
      const double pref = std::pow(1.0 - k * t, -lam / k);
      return scaled(f1(arg(m, "alpha"), arg(m, "rho"), lam, arg(m, "beta"), k, x,
                       -k * x * t / (1.0 - k * t), cfg),
                    pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "gf3";
    c.description = "generating relation with Euler-transformed right side";
    c.params = {"k", "rho", "alpha", "beta", "x", "t"};
    c.rel_tol = 1e-8;
    c.n_terms_outer = 40;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["rho"] = draw_pos(r);
      m["alpha"] = draw_pos(r);
      m["beta"] = draw_pos(r);
      m["x"] = r.uniform(-0.3, 0.3) / k;
      m["t"] = r.uniform(-0.25, 0.25) / k;
      return m;
    };
    c.lhs = gen_lhs_for("gf3");
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), t = arg(m, "t");
      const double al = arg(m, "alpha"), be = arg(m, "beta"), rho = arg(m, "rho");
      const double d = 1.0 - k * t + k * k * x * t;
      const double pref =
          std::pow(1.0 - k * t, (al + rho - be) / k) * std::pow(d, -al / k);
      return scaled(hyp(al, rho, be, k, x / d, cfg), pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "gf4";
    c.description = "terminating-series generating relation producing F1,k";
    c.params = {"k", "alpha", "beta", "gamma", "delta", "x", "t"};
    c.rel_tol = 1e-8;
    c.n_terms_outer = 40;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["alpha"] = draw_pos(r);
      m["beta"] = draw_pos(r);
      m["gamma"] = draw_pos(r);
      m["delta"] = draw_pos(r);
      m["x"] = r.uniform(-0.35, 0.35) / k;
      m["t"] = r.uniform(-1.0, 1.0) * 0.25 / (k * (1.0 + k * std::abs(m["x"])));
      return m;
    };
    c.lhs = gen_lhs_for("gf4");
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), t = arg(m, "t");
      return f1(arg(m, "gamma"), arg(m, "beta") - arg(m, "alpha"), arg(m, "alpha"),
                arg(m, "delta"), k, t, (1.0 - k * x) * t, cfg);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "gf5";
    c.description = "bilinear generating relation producing F2,k";
    c.params = {"k", "lambda", "alpha", "beta", "gamma", "delta", "x", "y", "t"};
    c.rel_tol = 1e-8;
    c.n_terms_outer = 40;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["lambda"] = draw_pos(r);
      m["alpha"] = draw_pos(r);
      m["beta"] = draw_pos(r);
      m["gamma"] = draw_pos(r);
      m["delta"] = draw_pos(r);
      const double x = r.uniform(-0.25, 0.25) / k;
      const double y = r.uniform(-0.25, 0.25) / k;
      double t = r.uniform(-0.15, 0.15) / k;
      // conservative intersection of the stated domain conditions
      for (int i = 0; i < 60; ++i) {
        const bool ok =
            k * (std::abs(x) + k * std::abs(y * t)) / std::abs(1.0 - k * t) <= 0.5 &&
            k * std::abs((1.0 - k * y) * t / (1.0 - x)) <= 0.5 &&
            k * std::abs((1.0 - k * y) * t / (1.0 - k * x)) <= 0.5;
        if (ok) break;
        t *= 0.7;
      }
      m["x"] = x;
      m["y"] = y;
      m["t"] = t;
      return m;
    };
    c.lhs = gen_lhs_for("gf5");
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y"), t = arg(m, "t");
      const double lam = arg(m, "lambda");
      const double pref = std::pow(1.0 - k * t, -lam / k);
      return scaled(f2(lam, arg(m, "alpha"), arg(m, "gamma"), arg(m, "beta"), arg(m, "delta"),
                       k, x / (1.0 - k * t), -k * y * t / (1.0 - k * t), cfg),
                    pref);
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "gf6";
    c.description = "bilinear generating relation with Euler-transformed F2,k right side";
    c.params = {"k", "rho", "alpha", "beta", "gamma", "delta", "x", "y", "t"};
    c.rel_tol = 1e-8;
    c.n_terms_outer = 40;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["rho"] = draw_pos(r);
      m["alpha"] = draw_pos(r);
      m["beta"] = draw_pos(r);
      m["gamma"] = draw_pos(r);
      m["delta"] = draw_pos(r);
      const double x = r.uniform(-0.25, 0.25) / k;
      const double y = r.uniform(-0.25, 0.25) / k;
      double t = r.uniform(-0.15, 0.15) / k;
      for (int i = 0; i < 60; ++i) {
        const double xx = std::abs(x / ((1.0 - k * x) * (1.0 - k * t)));
        const double yy = std::abs(k * y * t / (1.0 - k * t));
        if (k * (xx + yy) <= 0.5) break;
        t *= 0.7;
      }
      m["x"] = x;
      m["y"] = y;
      m["t"] = t;
      return m;
    };
    c.lhs = gen_lhs_for("gf6");
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y"), t = arg(m, "t");
      const double rho = arg(m, "rho"), be = arg(m, "beta"), al = arg(m, "alpha");
      const double pref =
          std::pow(1.0 - k * x, -al / k) * std::pow(1.0 - k * t, (rho - be) / k);
      return scaled(f2(be - rho, al, arg(m, "gamma"), be, arg(m, "delta"), k,
                       -x / ((1.0 - k * x) * (1.0 - k * t)), -k * y * t / (1.0 - k * t), cfg),
                    pref);
    };
    add(std::move(c));
  }
  auto gf78_sampler = [](SampleRng& r, double k) {
    auto m = base_map(k);
    m["lambda"] = draw_pos(r);
    m["alpha"] = draw_pos(r);
    m["beta"] = draw_pos(r);
    m["gamma"] = draw_pos(r);
    m["delta"] = draw_pos(r);
    m["x"] = r.uniform(-0.25, 0.25) / k;
    m["t"] = r.uniform(-0.15, 0.15) / k;
    double y = r.uniform(-0.25, 0.25) / k;
    // keep the printed right side's F2,k argument pair inside its region
    for (int i = 0; i < 60; ++i) {
      const double xs = k * std::abs(m["x"] / (1.0 - k * m["t"]));
      const double ys = k * k * std::abs(y / (1.0 - k * m["t"]));
      if (xs + ys <= 0.5) break;
      y *= 0.7;
    }
    m["y"] = y;
    return m;
  };
  {
    IdentityCase c;
    c.id = "gf7";
    c.description = "bilinear relation expanded over F2,k kernels (as printed)";
    c.params = {"k", "lambda", "alpha", "beta", "gamma", "delta", "x", "y", "t"};
    c.rel_tol = 1e-8;
    c.n_terms_outer = 40;
    c.sample = gf78_sampler;
    c.lhs = gen_lhs_for("gf7");
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y"), t = arg(m, "t");
      const double lam = arg(m, "lambda"), al = arg(m, "alpha"), be = arg(m, "beta");
      const double ga = arg(m, "gamma"), de = arg(m, "delta");
      const double omt = 1.0 - k * t;
      GenSum g;
      g.factor = -k * x * y / omt;
      g.coeff_ratio = [=](long n) {
        return (lam + n * k) * (al + n * k) / ((be + n * k) * (n + 1.0));
      };
      g.inner1 = [=](long n, const EvalConfig& cc) {
        const double nk = static_cast<double>(n) * k;
        return f2(lam + nk, al + nk, ga + nk, be + nk, de + nk, k, x / omt, -k * y / omt, cc);
      };
      return scaled(generating_sum(g, 40, true, cfg), std::pow(omt, -lam / k));
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "gf8";
    c.description = "bilinear relation expanded over products of 2F1,k (as printed)";
    c.params = {"k", "lambda", "alpha", "beta", "gamma", "delta", "x", "y", "t"};
    c.rel_tol = 1e-8;
    c.n_terms_outer = 40;
    c.sample = gf78_sampler;
    c.lhs = gen_lhs_for("gf8");
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y"), t = arg(m, "t");
      const double lam = arg(m, "lambda"), al = arg(m, "alpha"), be = arg(m, "beta");
      const double ga = arg(m, "gamma"), de = arg(m, "delta");
      const double omt = 1.0 - k * t;
      GenSum g;
      g.factor = k * k * k * x * y * t / (omt * omt);
      g.coeff_ratio = [=](long n) {
        return (lam + n * k) * (al + n * k) * (ga + n * k) /
               ((be + n * k) * (de + n * k) * (n + 1.0));
      };
      g.inner1 = [=](long n, const EvalConfig& cc) {
        const double nk = static_cast<double>(n) * k;
        return hyp(lam + nk, al + nk, be + nk, k, x / omt, cc);
      };
      g.inner2 = [=](long n, const EvalConfig& cc) {
        const double nk = static_cast<double>(n) * k;
        return hyp(lam + nk, ga + nk, de + nk, k, y / omt, cc);
      };
      return scaled(generating_sum(g, 40, true, cfg), std::pow(omt, -lam / k));
    };
    add(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "gf9";
    c.description = "bilinear relation closed form at beta = delta = lambda (as printed)";
    c.params = {"k", "lambda", "alpha", "gamma", "x", "y", "t"};
    c.rel_tol = 1e-8;
    c.n_terms_outer = 40;
    c.sample = [](SampleRng& r, double k) {
      auto m = base_map(k);
      m["lambda"] = draw_pos(r);
      m["alpha"] = draw_pos(r);
      m["gamma"] = draw_pos(r);
      m["x"] = r.uniform(-0.2, 0.2) / k;
      m["y"] = r.uniform(-0.2, 0.2) / k;
      m["t"] = r.uniform(-0.1, 0.1) / k;
      return m;
    };
    c.lhs = gen_lhs_for("gf9");
    c.rhs = [](const ParamMap& m, const EvalConfig& cfg) {
      const double k = arg(m, "k"), x = arg(m, "x"), y = arg(m, "y"), t = arg(m, "t");
      const double lam = arg(m, "lambda"), al = arg(m, "alpha"), ga = arg(m, "gamma");
      const double dx = 1.0 - k * t - k * x, dy = 1.0 - k * t - k * y;
      const double pref = std::pow(1.0 - k * t, (ga + al - lam) / k) *
                          std::pow(dx, -al / k) * std::pow(dy, -ga / k);
      const double z = k * k * k * x * y * t / (dx * dy);
      return scaled(hyp(al, ga, lam, k, z, cfg), pref);
    };
    add(std::move(c));
  }

  return reg;
}

}  // namespace detail_id

inline const std::vector<IdentityCase>& identity_registry() {
  static const std::vector<IdentityCase> reg = detail_id::build_registry();
  return reg;
}

inline const IdentityCase& find_identity(const std::string& id) {
  for (const auto& c : identity_registry()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown identity id: " + id);
}

inline EvalResult generating_lhs(const std::string& id, const ParamMap& p, long n_terms,
                                 const EvalConfig& cfg) {
  if (n_terms > 0) return detail_id::gf_lhs(id, p, n_terms, false, cfg);
  return detail_id::gf_lhs(id, p, 40, true, cfg);
}

// Single-sample check: rel_err = |lhs-rhs| / max(1,|lhs|,|rhs|); pass iff
// rel_err <= case tolerance plus both sides' normalized error estimates.
inline SampleOutcome verify_identity(const IdentityCase& c, const ParamMap& params,
                                     const EvalConfig& cfg) {
  EvalConfig ec = cfg;
  ec.rel_tol = std::max(cfg.rel_tol, c.eval_rel_tol);
  SampleOutcome o;
  o.params = params;
  try {
    const EvalResult l = c.lhs(params, ec);
    const EvalResult r = c.rhs(params, ec);
    o.lhs = l.value;
    o.rhs = r.value;
    o.abs_diff = std::abs(l.value - r.value);
    const double denom = std::max({1.0, std::abs(l.value), std::abs(r.value)});
    o.rel_err = o.abs_diff / denom;
    const double allowed = c.rel_tol + (l.abs_err_estimate + r.abs_err_estimate) / denom;
    o.pass = std::isfinite(l.value) && std::isfinite(r.value) && o.rel_err <= allowed;
  } catch (const std::exception& e) {
    o.lhs = o.rhs = o.abs_diff = o.rel_err = std::numeric_limits<double>::quiet_NaN();
    o.pass = false;
    o.error = e.what();
  }
  return o;
}

namespace detail_id {

inline double draw_k(SampleRng& rng) { return rng.log_uniform(0.25, 4.0); }

// Both sides re-evaluated at tightened budgets must stay inside ~10x their
// reported error estimates; a systematic residual with stable sides points
// at the printed formula, not at the evaluators.
inline bool stability_probe(const IdentityCase& c, const std::vector<SampleOutcome>& failures,
                            const EvalConfig& cfg) {
  EvalConfig base = cfg;
  base.rel_tol = std::max(cfg.rel_tol, c.eval_rel_tol);
  EvalConfig tight = base;
  tight.rel_tol = std::max(base.rel_tol * 1e-2, 1e-13);
  tight.max_terms = base.max_terms * 2;
  tight.quad_levels = std::min(base.quad_levels + 1, 9);
  int checked = 0;
  for (const auto& f : failures) {
    if (!f.error.empty()) continue;
    if (checked >= 8) break;
    ++checked;
    try {
      const EvalResult l1 = c.lhs(f.params, base), l2 = c.lhs(f.params, tight);
      const EvalResult r1 = c.rhs(f.params, base), r2 = c.rhs(f.params, tight);
      const double lt = 10.0 * (l1.abs_err_estimate + l2.abs_err_estimate) +
                        1e-9 * std::max(1.0, std::abs(l1.value));
      const double rt = 10.0 * (r1.abs_err_estimate + r2.abs_err_estimate) +
                        1e-9 * std::max(1.0, std::abs(r1.value));
      if (std::abs(l2.value - l1.value) > lt || std::abs(r2.value - r1.value) > rt) {
        return false;
      }
    } catch (const std::exception&) {
      return false;
    }
  }
  return checked > 0;
}

}  // namespace detail_id

// Deterministic seeded sweep; sample i uses the RNG stream derived from
// (seed, i), so results are independent of the thread count.
inline SweepReport sweep(const IdentityCase& c, long n_samples, std::uint64_t seed,
                         const EvalConfig& cfg, int threads = 1) {
  if (n_samples < 1) throw std::invalid_argument("sweep: n_samples must be >= 1");
  cfg.validate();
  SweepReport rep;
  rep.id = c.id;
  rep.seed = seed;
  rep.samples = n_samples;
  rep.records.resize(static_cast<std::size_t>(n_samples));

  auto run_range = [&](long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      SampleRng rng(seed, static_cast<std::uint64_t>(i));
      const double k = detail_id::draw_k(rng);
      SampleOutcome o;
      try {
        const ParamMap params = c.sample(rng, k);
        o = verify_identity(c, params, cfg);
      } catch (const std::exception& e) {
        o.pass = false;
        o.error = e.what();
        o.lhs = o.rhs = o.abs_diff = o.rel_err = std::numeric_limits<double>::quiet_NaN();
      }
      o.index = i;
      rep.records[static_cast<std::size_t>(i)] = std::move(o);
    }
  };

  const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(n_samples)));
  if (nthreads == 1) {
    run_range(0, n_samples);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (n_samples + nthreads - 1) / nthreads;
    for (int w = 0; w < nthreads; ++w) {
      const long lo = w * chunk, hi = std::min<long>(n_samples, lo + chunk);
      if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<double> errs;
  errs.reserve(rep.records.size());
  for (const auto& o : rep.records) {
    if (o.pass) {
      ++rep.passes;
    } else {
      rep.failures.push_back(o);
    }
    if (!o.error.empty()) ++rep.error_samples;
    if (std::isfinite(o.rel_err)) errs.push_back(o.rel_err);
  }
  if (!errs.empty()) {
    std::sort(errs.begin(), errs.end());
    rep.max_rel_err = errs.back();
    const std::size_t mid = errs.size() / 2;
    rep.median_rel_err =
        (errs.size() % 2 == 1) ? errs[mid] : 0.5 * (errs[mid - 1] + errs[mid]);
  }

  if (rep.failures.empty()) {
    rep.verdict = "pass";
    return rep;
  }
  const double fail_rate =
      static_cast<double>(rep.failures.size()) / static_cast<double>(rep.samples);
  if (fail_rate >= 0.9) {
    // classical-specialization audit: same identity with k forced to 1
    const long audit_n = 16;
    rep.audit_samples = audit_n;
    for (long j = 0; j < audit_n; ++j) {
      SampleRng rng(seed, (1ull << 24) + static_cast<std::uint64_t>(j));
      (void)detail_id::draw_k(rng);  // keep stream layout identical
      try {
        const ParamMap params = c.sample(rng, 1.0);
        if (verify_identity(c, params, cfg).pass) ++rep.audit_passes;
      } catch (const std::exception&) {
      }
    }
    rep.verdict = detail_id::stability_probe(c, rep.failures, cfg)
                      ? "paper-discrepancy-suspected"
                      : "fail";
  } else {
    rep.verdict = "fail";
  }
  return rep;
}

}  // namespace ksf
