#pragma once

// Foundation layer: Pochhammer k-symbol, k-gamma, k-beta, the k-binomial
// series, and the quadrature-backed cross-validation evaluators for the
// integral representations of Gamma_k and B_k.

#include <cmath>

#include "ksf/gamma.hpp"
#include "ksf/quadrature.hpp"
#include "ksf/types.hpp"

namespace ksf {

// ∫₀^∞ t^{x-1} e^{-t^k/k} dt evaluated through the substitution u = t^k/k,
// which maps it onto k^{x/k-1} ∫₀^∞ u^{x/k-1} e^{-u} du.
inline EvalResult gamma_k_quadrature(double x, Scale scale, const EvalConfig& cfg) {
  if (!(x > 0.0)) throw domain_error("gamma_k_quadrature: requires x > 0");
  const double a = x / scale.k;
  EvalResult r = de_gamma_integral(a, cfg);
  const double factor = std::pow(scale.k, a - 1.0);
  r.value *= factor;
  r.abs_err_estimate *= factor;
  return r;
}

// (1/k) ∫₀¹ t^{x/k-1} (1-t)^{y/k-1} dt with endpoint-singularity-aware nodes.
inline EvalResult beta_k_quadrature(double x, double y, Scale scale, const EvalConfig& cfg) {
  if (!(x > 0.0) || !(y > 0.0)) throw domain_error("beta_k_quadrature: requires x > 0 and y > 0");
  EvalResult r = tanh_sinh_beta(x / scale.k, y / scale.k,
                                [](double, double) { return 1.0; }, cfg);
  r.value /= scale.k;
  r.abs_err_estimate /= scale.k;
  return r;
}

// Truncated series  sum_n (alpha)_{n,k} x^n / n!  — the series side of the
// k-binomial identity; the closed form is k_binomial().
inline EvalResult k_binomial_series(double x, double alpha, Scale scale, const EvalConfig& cfg) {
  cfg.validate();
  const double k = scale.k;
  if (x == 0.0) return exact_result(1.0);
  // terminating when alpha is a nonpositive exact multiple of -k
  bool terminating = false;
  if (alpha <= 0.0) {
    const long m = std::llround(-alpha / k);
    terminating = (m >= 0 && alpha + static_cast<double>(m) * k == 0.0);
  }
  if (std::abs(k * x) >= 1.0 && !terminating) {
    throw domain_error("k_binomial_series: requires |k x| < 1");
  }
  double sum = 0.0, term = 1.0, ratio = 0.0;
  int small_run = 0;
  long n = 0;
  bool converged = false;
  for (; n < cfg.max_terms; ++n) {
    sum += term;
    const double nn = static_cast<double>(n);
    ratio = (alpha + nn * k) / (nn + 1.0) * x;
    const double next = term * ratio;
    if (next == 0.0) {
      return {sum, std::abs(sum) * 4e-16, n + 1, true};
    }
    const double thresh = cfg.rel_tol * std::max(1.0, std::abs(sum));
    if (std::abs(next) <= thresh) {
      ++small_run;
      const double rh = std::min(std::max(std::abs(ratio), std::abs(k * x)), 0.999);
      if (small_run >= 2 && n >= 2 && std::abs(next) / (1.0 - rh) <= thresh) {
        term = next;
        converged = true;
        ++n;
        break;
      }
    } else {
      small_run = 0;
    }
    term = next;
  }
  double rhat = std::min(std::max(std::abs(ratio), std::abs(k * x)), 0.999);
  const double tail = std::abs(term) / (1.0 - rhat);
  return {sum, tail + std::abs(sum) * 1e-15, n, converged};
}

}  // namespace ksf
