#pragma once

// Classical gamma kernel (Lanczos, g = 7, 9 coefficients) plus the k-deformed
// gamma/beta/Pochhammer layer built on top of it. Everything reduces to the
// classical kernel through Gamma_k(x) = k^{x/k-1} Gamma(x/k).

#include <cmath>
#include <limits>

#include "ksf/types.hpp"

namespace ksf {

namespace detail {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;
inline constexpr double kLogPi = 1.14472988584940017414;

// Godfrey's g=7 coefficient set; relative error ~ 1e-15 on the positive axis.
inline constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

inline double lanczos_sum(double x) {
  double s = kLanczos[0];
  for (int i = 1; i < 9; ++i) s += kLanczos[i] / (x - 1.0 + i);
  return s;
}

// requires x >= 0.5
inline double gamma_positive(double x) {
  const double z = x - 1.0;
  const double base = z + 7.5;
  return kSqrt2Pi * std::pow(base, z + 0.5) * std::exp(-base) * lanczos_sum(x);
}

// requires x >= 0.5
inline double log_gamma_positive(double x) {
  const double z = x - 1.0;
  const double base = z + 7.5;
  return std::log(kSqrt2Pi) + (z + 0.5) * std::log(base) - base + std::log(lanczos_sum(x));
}

// sin(pi x) with exact argument reduction; |r| <= 1 keeps std::sin accurate.
inline double sin_pi(double x) {
  const double r = x - 2.0 * std::nearbyint(x * 0.5);
  return std::sin(kPi * r);
}

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

}  // namespace detail

// Classical Gamma(x), reflection below 0.5. Poles are domain errors.
inline double classical_gamma(double x) {
  if (!std::isfinite(x)) throw domain_error("classical_gamma: non-finite argument");
  if (detail::is_nonpositive_integer(x)) {
    throw domain_error("classical_gamma: pole at nonpositive integer");
  }
  if (x >= 0.5) return detail::gamma_positive(x);
  return detail::kPi / (detail::sin_pi(x) * detail::gamma_positive(1.0 - x));
}

struct SignedLogGamma {
  double log_abs;
  int sign;
};

// log|Gamma(x)| and its sign, valid for any non-pole real x.
inline SignedLogGamma log_gamma_signed(double x) {
  if (!std::isfinite(x)) throw domain_error("log_gamma_signed: non-finite argument");
  if (detail::is_nonpositive_integer(x)) {
    throw domain_error("log_gamma_signed: pole at nonpositive integer");
  }
  if (x >= 0.5) return {detail::log_gamma_positive(x), 1};
  const double s = detail::sin_pi(x);
  return {detail::kLogPi - std::log(std::abs(s)) - detail::log_gamma_positive(1.0 - x),
          s > 0.0 ? 1 : -1};
}

// log Gamma(x) for x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw domain_error("log_gamma: requires x > 0");
  return log_gamma_signed(x).log_abs;
}

// Gamma_k(x) = k^{x/k-1} Gamma(x/k).  At k = 1 this multiplies the classical
// value by pow(1,.) == 1, so the reduction is bit-identical.
inline double gamma_k(double x, Scale scale) {
  const double a = x / scale.k;
  if (detail::is_nonpositive_integer(a)) {
    throw domain_error("gamma_k: pole (x/k is a nonpositive integer)");
  }
  return std::pow(scale.k, a - 1.0) * classical_gamma(a);
}

inline SignedLogGamma log_gamma_k_signed(double x, Scale scale) {
  const double a = x / scale.k;
  const SignedLogGamma g = log_gamma_signed(a);
  return {(a - 1.0) * std::log(scale.k) + g.log_abs, g.sign};
}

// B_k(x,y) = (1/k) B(x/k, y/k), x,y > 0.
inline double beta_k(double x, double y, Scale scale) {
  if (!(x > 0.0) || !(y > 0.0)) throw domain_error("beta_k: requires x > 0 and y > 0");
  const double k = scale.k;
  return std::exp(log_gamma(x / k) + log_gamma(y / k) - log_gamma((x + y) / k)) / k;
}

// log B_k(x,y), x,y > 0.
inline double log_beta_k(double x, double y, Scale scale) {
  if (!(x > 0.0) || !(y > 0.0)) throw domain_error("log_beta_k: requires x > 0 and y > 0");
  const double k = scale.k;
  return log_gamma(x / k) + log_gamma(y / k) - log_gamma((x + y) / k) - std::log(k);
}

// Pochhammer k-symbol (x)_{n,k} = x (x+k) ... (x+(n-1)k), (x)_{0,k} := 1.
// Direct product: terminating factors hit exact zero, no gamma poles.
// Overflow for huge n is reported through a non-finite result.
inline double pochhammer_k(double x, long n, Scale scale) {
  if (n < 0) throw domain_error("pochhammer_k: n must be nonnegative");
  double p = 1.0;
  for (long j = 0; j < n; ++j) {
    p *= x + static_cast<double>(j) * scale.k;
  }
  return p;
}

// Classical rising factorial (x)_n.
inline double pochhammer(double x, long n) { return pochhammer_k(x, n, Scale(1.0)); }

// (1 - kx)^{-alpha/k}, |kx| < 1.
inline double k_binomial(double x, double alpha, Scale scale) {
  const double kx = scale.k * x;
  if (!(std::abs(kx) < 1.0)) throw domain_error("k_binomial: requires |k x| < 1");
  return std::pow(1.0 - kx, -alpha / scale.k);
}

}  // namespace ksf
