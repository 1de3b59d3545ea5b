#pragma once

// The four Appell k-functions: double series summed by total-degree shells,
// single-sum (nested 2F1,k) forms, and the integral representations of
// F1,k / F2,k / F3,k.  F4,k has series and single-sum forms only.

#include <algorithm>
#include <cmath>
#include <vector>

#include "ksf/hyp.hpp"
#include "ksf/types.hpp"

namespace ksf {

enum class AppellKind { F1, F2, F3, F4 };

inline const char* to_string(AppellKind k) {
  switch (k) {
    case AppellKind::F1: return "F1";
    case AppellKind::F2: return "F2";
    case AppellKind::F3: return "F3";
    case AppellKind::F4: return "F4";
  }
  return "?";
}

// Parameter tuple; alpha2 is used by F3 only, beta2 is unused by F4,
// gamma2 is used by F2 and F4.
struct AppellParams {
  AppellKind kind;
  double alpha = 0.0;
  double alpha2 = 0.0;
  double beta = 0.0;
  double beta2 = 0.0;
  double gamma = 0.0;
  double gamma2 = 0.0;
  Scale scale{1.0};

  void validate() const {
    auto check_denominator = [&](double g, const char* name) {
      const double gk = g / scale.k;
      if (gk <= 0.0 && gk == std::floor(gk)) {
        throw domain_error(std::string("AppellParams: ") + name +
                           "/k must not be zero or a negative integer");
      }
    };
    check_denominator(gamma, "gamma");
    if (kind == AppellKind::F2 || kind == AppellKind::F4) check_denominator(gamma2, "gamma2");
  }
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Convergence regions as stated alongside the series definitions:
// F1/F3: |x| < 1/k and |y| < 1/k;  F2: |x|+|y| < 1/k;  F4: sqrt|x|+sqrt|y| < 1/k.
inline bool appell_in_domain(const AppellParams& p, Point2 pt) {
  const double k = p.scale.k;
  const double ax = std::abs(pt.x), ay = std::abs(pt.y);
  switch (p.kind) {
    case AppellKind::F1:
    case AppellKind::F3:
      return k * ax < 1.0 && k * ay < 1.0;
    case AppellKind::F2:
      return k * (ax + ay) < 1.0;
    case AppellKind::F4:
      return std::sqrt(ax) + std::sqrt(ay) < 1.0 / k;
  }
  return false;
}

namespace detail {

// Asymptotic shell-sum ratio used for the geometric tail bound.
inline double appell_domain_ratio(const AppellParams& p, Point2 pt) {
  const double k = p.scale.k;
  const double ax = std::abs(pt.x), ay = std::abs(pt.y);
  switch (p.kind) {
    case AppellKind::F1:
    case AppellKind::F3:
      return std::max(k * ax, k * ay);
    case AppellKind::F2:
      return k * (ax + ay);
    case AppellKind::F4: {
      const double r = std::sqrt(k * ax) + std::sqrt(k * ay);
      return r * r;
    }
  }
  return 1.0;
}

// term(m, n) / term(m, n-1), j = n-1
inline double appell_ratio_n(const AppellParams& p, double y, long m, long n) {
  const double k = p.scale.k;
  const double j = static_cast<double>(n - 1);
  const double mj = static_cast<double>(m) + j;
  const double nn = static_cast<double>(n);
  switch (p.kind) {
    case AppellKind::F1:
      return (p.alpha + mj * k) * (p.beta2 + j * k) / ((p.gamma + mj * k) * nn) * y;
    case AppellKind::F2:
      return (p.alpha + mj * k) * (p.beta2 + j * k) / ((p.gamma2 + j * k) * nn) * y;
    case AppellKind::F3:
      return (p.alpha2 + j * k) * (p.beta2 + j * k) / ((p.gamma + mj * k) * nn) * y;
    case AppellKind::F4:
      return (p.alpha + mj * k) * (p.beta + mj * k) / ((p.gamma2 + j * k) * nn) * y;
  }
  return 0.0;
}

// term(m, 0) / term(m-1, 0), j = m-1; identical numerator shape for all kinds
inline double appell_ratio_m0(const AppellParams& p, double x, long m) {
  const double k = p.scale.k;
  const double j = static_cast<double>(m - 1);
  return (p.alpha + j * k) * (p.beta + j * k) / ((p.gamma + j * k) * static_cast<double>(m)) * x;
}

}  // namespace detail

// Double series summed by total-degree shells N = m + n; stops when two
// consecutive shell sums fall below rel_tol * max(1,|partial|).
inline EvalResult appell_series(const AppellParams& p, Point2 pt, const EvalConfig& cfg) {
  cfg.validate();
  p.validate();
  if (!appell_in_domain(p, pt)) {
    throw domain_error(std::string("appell_series: point outside the ") + to_string(p.kind) +
                       " convergence region");
  }
  std::vector<double> prev{1.0}, cur;
  double sum = 1.0;
  long terms = 1;
  double shell = 1.0, prev_shell = 1.0, measured_ratio = 0.0;
  int small_run = 0;
  bool converged = false;
  for (long N = 1; terms + N + 1 <= cfg.max_terms; ++N) {
    cur.resize(static_cast<std::size_t>(N) + 1);
    for (long m = 0; m < N; ++m) {
      cur[m] = prev[m] * detail::appell_ratio_n(p, pt.y, m, N - m);
    }
    cur[N] = prev[N - 1] * detail::appell_ratio_m0(p, pt.x, N);
    shell = 0.0;
    for (long m = 0; m <= N; ++m) shell += cur[m];
    sum += shell;
    terms += N + 1;
    if (prev_shell != 0.0 && shell != 0.0) {
      measured_ratio = std::abs(shell / prev_shell);
    }
    prev_shell = shell;
    const double thresh = cfg.rel_tol * std::max(1.0, std::abs(sum));
    if (std::abs(shell) <= thresh) {
      ++small_run;
      const double rh =
          std::min(std::max(measured_ratio, detail::appell_domain_ratio(p, pt)), 0.98);
      if (small_run >= 2 && N >= 2 && std::abs(shell) * rh / (1.0 - rh) <= thresh) {
        converged = true;
        break;
      }
    } else {
      small_run = 0;
    }
    std::swap(prev, cur);
  }
  const double rhat =
      std::min(std::max(measured_ratio, detail::appell_domain_ratio(p, pt)), 0.98);
  const double tail = std::abs(shell) * rhat / (1.0 - rhat);
  return {sum, tail + std::abs(sum) * 1e-15, terms, converged};
}

// Single-sum form: outer sum over m of (alpha)_{m,k}(beta)_{m,k}/(gamma)_{m,k}
// x^m/m! times an inner 2F1,k in y with the parameter shifts each definition
// states.
inline EvalResult appell_single_sum(const AppellParams& p, Point2 pt, const EvalConfig& cfg) {
  cfg.validate();
  p.validate();
  if (!appell_in_domain(p, pt)) {
    throw domain_error(std::string("appell_single_sum: point outside the ") + to_string(p.kind) +
                       " convergence region");
  }
  const double k = p.scale.k;
  auto inner = [&](long m) -> Hyp2F1Params {
    const double mk = static_cast<double>(m) * k;
    switch (p.kind) {
      case AppellKind::F1: return {p.alpha + mk, p.beta2, p.gamma + mk, p.scale};
      case AppellKind::F2: return {p.alpha + mk, p.beta2, p.gamma2, p.scale};
      case AppellKind::F3: return {p.alpha2, p.beta2, p.gamma + mk, p.scale};
      case AppellKind::F4: return {p.alpha + mk, p.beta + mk, p.gamma2, p.scale};
    }
    throw domain_error("appell_single_sum: unknown kind");
  };
  double sum = 0.0, coeff = 1.0, err = 0.0;
  long terms = 0;
  double term = 0.0, prev_term = 0.0, measured_ratio = 0.0;
  int small_run = 0;
  bool converged = true;
  long m = 0;
  for (;; ++m) {
    EvalResult in = hyp2f1_k_series(inner(m), pt.y, cfg);
    terms += in.terms_used;
    converged = converged && in.converged;
    term = coeff * in.value;
    sum += term;
    err += std::abs(coeff) * in.abs_err_estimate;
    if (prev_term != 0.0 && term != 0.0) measured_ratio = std::abs(term / prev_term);
    prev_term = term;
    const double thresh = cfg.rel_tol * std::max(1.0, std::abs(sum));
    if (std::abs(term) <= thresh) {
      ++small_run;
      const double rh = std::min(std::max(measured_ratio, std::abs(k * pt.x)), 0.98);
      if (small_run >= 2 && m >= 2 && std::abs(term) * rh / (1.0 - rh) <= thresh) {
        ++m;
        break;
      }
    } else {
      small_run = 0;
    }
    const double mm = static_cast<double>(m);
    coeff *= (p.alpha + mm * k) * (p.beta + mm * k) / ((p.gamma + mm * k) * (mm + 1.0)) * pt.x;
    if (coeff == 0.0) {
      ++m;
      break;
    }
    if (terms >= cfg.max_terms) {
      converged = false;
      break;
    }
  }
  const double rhat = std::min(std::max(measured_ratio, std::abs(k * pt.x)), 0.98);
  const double tail = std::abs(term) * rhat / (1.0 - rhat);
  return {sum, err + tail + std::abs(sum) * 1e-15, terms, converged};
}

// Single-integral representation of F1,k (gamma > alpha > 0):
//   1/(k B_k(alpha, gamma-alpha)) ∫₀¹ t^{alpha/k-1}(1-t)^{(gamma-alpha)/k-1}
//       (1-kxt)^{-beta/k} (1-kyt)^{-beta2/k} dt
inline EvalResult f1_k_integral(const AppellParams& p, Point2 pt, const EvalConfig& cfg) {
  if (p.kind != AppellKind::F1) throw domain_error("f1_k_integral: expects F1 parameters");
  const double k = p.scale.k;
  if (!(p.gamma > p.alpha) || !(p.alpha > 0.0)) {
    throw domain_error("f1_k_integral: requires gamma > alpha > 0");
  }
  if (!(std::abs(k * pt.x) < 1.0) || !(std::abs(k * pt.y) < 1.0)) {
    throw domain_error("f1_k_integral: requires |kx| < 1 and |ky| < 1");
  }
  const double ex = -p.beta / k, ey = -p.beta2 / k;
  EvalResult r = tanh_sinh_beta(
      p.alpha / k, (p.gamma - p.alpha) / k,
      [&](double t, double) {
        return std::pow(1.0 - k * pt.x * t, ex) * std::pow(1.0 - k * pt.y * t, ey);
      },
      cfg);
  const double pref = std::exp(-log_beta_k(p.alpha, p.gamma - p.alpha, p.scale)) / k;
  r.value *= pref;
  r.abs_err_estimate *= pref;
  return r;
}

// Double integral over the unit square for F2,k
// (gamma > beta > 0, gamma2 > beta2 > 0, |kx|+|ky| < 1).
inline EvalResult f2_k_integral(const AppellParams& p, Point2 pt, const EvalConfig& cfg) {
  if (p.kind != AppellKind::F2) throw domain_error("f2_k_integral: expects F2 parameters");
  const double k = p.scale.k;
  if (!(p.gamma > p.beta) || !(p.beta > 0.0) || !(p.gamma2 > p.beta2) || !(p.beta2 > 0.0)) {
    throw domain_error("f2_k_integral: requires gamma > beta > 0 and gamma2 > beta2 > 0");
  }
  if (!(k * (std::abs(pt.x) + std::abs(pt.y)) < 1.0)) {
    throw domain_error("f2_k_integral: requires |kx| + |ky| < 1");
  }
  const double ex = -p.alpha / k;
  EvalResult r = tanh_sinh_beta_2d(
      p.beta / k, (p.gamma - p.beta) / k, p.beta2 / k, (p.gamma2 - p.beta2) / k,
      [&](double t, double s, double, double) {
        return std::pow(1.0 - k * pt.x * t - k * pt.y * s, ex);
      },
      cfg);
  const double pref = std::exp(-log_beta_k(p.beta, p.gamma - p.beta, p.scale) -
                               log_beta_k(p.beta2, p.gamma2 - p.beta2, p.scale)) /
                      (k * k);
  r.value *= pref;
  r.abs_err_estimate *= pref;
  return r;
}

// Simplex integral for F3,k (beta, beta2 > 0, gamma - beta - beta2 > 0),
// mapped to the unit square by s = (1-t) u with the Jacobian folded into the
// endpoint weights:
//   outer axis t^{beta/k-1}(1-t)^{(gamma-beta)/k-1},
//   inner axis u^{beta2/k-1}(1-u)^{(gamma-beta-beta2)/k-1}.
inline EvalResult f3_k_integral(const AppellParams& p, Point2 pt, const EvalConfig& cfg) {
  if (p.kind != AppellKind::F3) throw domain_error("f3_k_integral: expects F3 parameters");
  const double k = p.scale.k;
  const double c = p.gamma - p.beta - p.beta2;
  if (!(p.beta > 0.0) || !(p.beta2 > 0.0) || !(c > 0.0)) {
    throw domain_error("f3_k_integral: requires beta > 0, beta2 > 0, gamma - beta - beta2 > 0");
  }
  if (!(std::abs(k * pt.x) < 1.0) || !(std::abs(k * pt.y) < 1.0)) {
    throw domain_error("f3_k_integral: requires |kx| < 1 and |ky| < 1");
  }
  const double ex = -p.alpha / k, ey = -p.alpha2 / k;
  EvalResult r = tanh_sinh_beta_2d(
      p.beta / k, (p.gamma - p.beta) / k, p.beta2 / k, c / k,
      [&](double t, double u, double omt, double) {
        return std::pow(1.0 - k * pt.x * t, ex) * std::pow(1.0 - k * pt.y * omt * u, ey);
      },
      cfg);
  const double pref = std::exp(-log_beta_k(p.beta, p.gamma - p.beta, p.scale) -
                               log_beta_k(p.beta2, c, p.scale)) /
                      (k * k);
  r.value *= pref;
  r.abs_err_estimate *= pref;
  return r;
}

}  // namespace ksf
