#pragma once

// The k-hypergeometric function 2F1,k: power series, Euler-integral
// representation, the mixed-index variant (ordinary Pochhammer upstairs,
// k-symbols elsewhere) at unit argument, the k-Gauss summation, its
// terminating case, and the Euler transformation.

#include <cmath>

#include "ksf/gamma.hpp"
#include "ksf/quadrature.hpp"
#include "ksf/types.hpp"

namespace ksf {

namespace detail {

// Smallest m >= 0 with a + m*k == 0 exactly, or -1 when no factor vanishes.
// Exact-zero detection, no tolerance: a terminating series must be produced
// by an argument of the form -(m*k) computed in double precision.
inline long exact_zero_index(double a, double k) {
  if (a > 0.0) return -1;
  if (a == 0.0) return 0;
  const long m = std::llround(-a / k);
  if (m >= 0 && a + static_cast<double>(m) * k == 0.0) return m;
  return -1;
}

}  // namespace detail

struct Hyp2F1Params {
  double alpha;
  double beta;
  double gamma;
  Scale scale;

  Hyp2F1Params(double a, double b, double c, Scale s) : alpha(a), beta(b), gamma(c), scale(s) {
    const double g = gamma / scale.k;
    if (g <= 0.0 && g == std::floor(g)) {
      throw domain_error("Hyp2F1Params: gamma/k must not be zero or a negative integer");
    }
  }
};

// Series  sum_n (alpha)_{n,k} (beta)_{n,k} / (gamma)_{n,k} * x^n / n!
// by forward term recurrence; stops when two consecutive terms fall below
// rel_tol * max(1,|sum|); geometric tail bound from the last ratio.
inline EvalResult hyp2f1_k_series(const Hyp2F1Params& p, double x, const EvalConfig& cfg) {
  cfg.validate();
  const double k = p.scale.k;
  if (x == 0.0) return exact_result(1.0);
  const bool terminating = detail::exact_zero_index(p.alpha, k) >= 0 ||
                           detail::exact_zero_index(p.beta, k) >= 0;
  if (std::abs(k * x) >= 1.0 && !terminating) {
    throw domain_error("hyp2f1_k_series: |k x| >= 1 and the series does not terminate");
  }
  double sum = 0.0, term = 1.0, ratio = 0.0;
  int small_run = 0;
  long n = 0;
  bool converged = false;
  for (; n < cfg.max_terms; ++n) {
    sum += term;
    const double nn = static_cast<double>(n);
    const double den = (p.gamma + nn * k) * (nn + 1.0);
    if (den == 0.0) throw domain_error("hyp2f1_k_series: pole in denominator k-symbol");
    ratio = (p.alpha + nn * k) * (p.beta + nn * k) / den * x;
    const double next = term * ratio;
    if (next == 0.0) {
      return {sum, std::abs(sum) * 4e-16, n + 1, true};
    }
    const double thresh = cfg.rel_tol * std::max(1.0, std::abs(sum));
    if (std::abs(next) <= thresh) {
      ++small_run;
      const double rh = std::min(std::max(std::abs(ratio), std::abs(k * x)), 0.999);
      // converged only once the geometric tail bound itself clears rel_tol
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
  const double rhat = std::min(std::max(std::abs(ratio), std::abs(k * x)), 0.999);
  const double tail = std::abs(term) / (1.0 - rhat);
  return {sum, tail + std::abs(sum) * 1e-15, n, converged};
}

// Euler-type integral representation, gamma > beta > 0, |kx| < 1:
//   1/(k B_k(beta, gamma-beta)) ∫₀¹ t^{beta/k-1}(1-t)^{(gamma-beta)/k-1}(1-kxt)^{-alpha/k} dt
inline EvalResult hyp2f1_k_integral(const Hyp2F1Params& p, double x, const EvalConfig& cfg) {
  const double k = p.scale.k;
  if (!(p.gamma > p.beta) || !(p.beta > 0.0)) {
    throw domain_error("hyp2f1_k_integral: requires gamma > beta > 0");
  }
  if (!(std::abs(k * x) < 1.0)) throw domain_error("hyp2f1_k_integral: requires |k x| < 1");
  const double ex = -p.alpha / k;
  EvalResult r = tanh_sinh_beta(
      p.beta / k, (p.gamma - p.beta) / k,
      [&](double t, double) { return std::pow(1.0 - k * x * t, ex); }, cfg);
  const double pref = std::exp(-log_beta_k(p.beta, p.gamma - p.beta, p.scale)) / k;
  r.value *= pref;
  r.abs_err_estimate *= pref;
  return r;
}

// Mixed-index series at unit argument:
//   sum_n (alpha)_n (beta)_{n,k} / ((gamma)_{n,k} n!)
// Terminates when alpha is a nonpositive integer; otherwise converges
// algebraically with margin s = (gamma - beta - k*alpha)/k > 0, terms ~
// n^{-1-s}, so the tail estimate is the integral bound 2 |a_N| (N+1)/s.
inline EvalResult hyp2f1_k_mixed(double alpha, double beta, double gamma, Scale scale,
                                 const EvalConfig& cfg) {
  cfg.validate();
  const double k = scale.k;
  const double g = gamma / k;
  if (g <= 0.0 && g == std::floor(g)) {
    throw domain_error("hyp2f1_k_mixed: gamma/k must not be zero or a negative integer");
  }
  const bool terminating = (alpha <= 0.0 && alpha == std::floor(alpha));
  const double margin = (gamma - beta - k * alpha) / k;
  if (!terminating && !(margin > 0.0)) {
    throw domain_error("hyp2f1_k_mixed: requires (gamma - beta - k*alpha)/k > 0");
  }
  double sum = 0.0, term = 1.0;
  long n = 0;
  bool converged = false;
  double tail = 0.0;
  for (; n < cfg.max_terms; ++n) {
    sum += term;
    const double nn = static_cast<double>(n);
    const double den = (gamma + nn * k) * (nn + 1.0);
    if (den == 0.0) throw domain_error("hyp2f1_k_mixed: pole in denominator k-symbol");
    const double next = term * (alpha + nn) * (beta + nn * k) / den;
    if (next == 0.0) {
      return {sum, std::abs(sum) * 4e-16, n + 1, true};
    }
    term = next;
    if (!terminating) {
      tail = 2.0 * std::abs(term) * (nn + 2.0) / margin;
      if (n >= 32 && tail <= cfg.rel_tol * std::max(1.0, std::abs(sum))) {
        converged = true;
        ++n;
        break;
      }
    }
  }
  return {sum, tail + std::abs(sum) * 1e-15, n, converged};
}

// Closed form of the unit-argument mixed series (the k-Gauss summation):
//   Gamma_k(gamma) Gamma_k(gamma - beta - k alpha)
//   / (Gamma_k(gamma - beta) Gamma_k(gamma - k alpha))
inline double gauss_sum_k(double alpha, double beta, double gamma, Scale scale) {
  const double k = scale.k;
  if (!((gamma - beta - k * alpha) > 0.0)) {
    throw domain_error("gauss_sum_k: requires gamma - beta - k*alpha > 0");
  }
  const SignedLogGamma a = log_gamma_k_signed(gamma, scale);
  const SignedLogGamma b = log_gamma_k_signed(gamma - beta - k * alpha, scale);
  const SignedLogGamma c = log_gamma_k_signed(gamma - beta, scale);
  const SignedLogGamma d = log_gamma_k_signed(gamma - k * alpha, scale);
  return a.sign * b.sign * c.sign * d.sign *
         std::exp(a.log_abs + b.log_abs - c.log_abs - d.log_abs);
}

// Terminating mixed series (alpha = -n): value (gamma-beta)_{n,k} / (gamma)_{n,k}.
inline double terminating_mixed(long n, double beta, double gamma, Scale scale) {
  if (n < 0) throw domain_error("terminating_mixed: n must be nonnegative");
  const double den = pochhammer_k(gamma, n, scale);
  if (den == 0.0) throw domain_error("terminating_mixed: (gamma)_{n,k} vanishes");
  return pochhammer_k(gamma - beta, n, scale) / den;
}

// Right side of the Euler transformation:
//   (1-kx)^{-beta/k} * 2F1,k(gamma-alpha, beta; gamma; -x/(1-kx))
inline EvalResult euler_transform_rhs(const Hyp2F1Params& p, double x, const EvalConfig& cfg) {
  const double k = p.scale.k;
  if (!(std::abs(k * x) < 1.0)) throw domain_error("euler_transform_rhs: requires |k x| < 1");
  const double xm = -x / (1.0 - k * x);
  if (!(std::abs(k * xm) < 1.0)) {
    throw domain_error("euler_transform_rhs: mapped point leaves |k x| < 1");
  }
  const double pref = std::pow(1.0 - k * x, -p.beta / k);
  EvalResult r = hyp2f1_k_series(Hyp2F1Params(p.gamma - p.alpha, p.beta, p.gamma, p.scale), xm, cfg);
  r.value *= pref;
  r.abs_err_estimate = std::abs(pref) * r.abs_err_estimate + std::abs(r.value) * 2e-16;
  return r;
}

}  // namespace ksf
