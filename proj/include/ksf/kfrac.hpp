#pragma once

// Riemann-Liouville k-fractional derivative: symbolic power rule, termwise
// series operator, direct quadrature for negative orders, and the two
// closed-form results used by the generating relations (krl4/krl5 routes).
//
// Positive orders run only on the symbolic path, where the power-rule
// coefficient Gamma_k(eta+k)/Gamma_k(eta+k-mu) continues analytically.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "ksf/appell.hpp"
#include "ksf/gamma.hpp"
#include "ksf/quadrature.hpp"
#include "ksf/types.hpp"

namespace ksf {

struct FracOrder {
  double mu;
  Scale scale;
};

// c * z^p on z > 0.
struct PowerFunction {
  double coeff = 0.0;
  double exponent = 0.0;

  double operator()(double z) const { return coeff * std::pow(z, exponent); }
};

// z^{offset} * sum_n coeffs[n] z^n on z > 0.
struct PowerSeries {
  std::vector<double> coeffs;
  double offset_exponent = 0.0;

  double eval(double z) const {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc * std::pow(z, offset_exponent);
  }
};

// Power rule: z^{eta/k} maps to z^{(eta-mu)/k} with coefficient
// B_k(eta+k, -mu)/Gamma_k(-mu) = Gamma_k(eta+k)/Gamma_k(eta+k-mu).
// A pole of the denominator gamma annihilates the coefficient.
inline PowerFunction kfrac_monomial(double eta, const FracOrder& order) {
  const double k = order.scale.k;
  if (!(eta + k > 0.0)) throw domain_error("kfrac_monomial: requires eta + k > 0");
  const double out_exponent = (eta - order.mu) / k;
  const double den_arg = (eta + k - order.mu) / k;
  if (den_arg <= 0.0 && den_arg == std::floor(den_arg)) {
    return {0.0, out_exponent};
  }
  const SignedLogGamma num = log_gamma_k_signed(eta + k, order.scale);
  const SignedLogGamma den = log_gamma_k_signed(eta + k - order.mu, order.scale);
  return {num.sign * den.sign * std::exp(num.log_abs - den.log_abs), out_exponent};
}

// Termwise application of the power rule to a truncated power series.
// Each input term c z^{p} maps with eta = p*k (so z^{eta/k} = z^p).
inline PowerSeries kfrac_series(const PowerSeries& f, const FracOrder& order) {
  const double k = order.scale.k;
  PowerSeries out;
  out.offset_exponent = f.offset_exponent - order.mu / k;
  out.coeffs.reserve(f.coeffs.size());
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
    const double eta = (f.offset_exponent + static_cast<double>(n)) * k;
    if (!(eta + k > 0.0)) {
      throw domain_error("kfrac_series: term " + std::to_string(n) +
                         " violates eta + k > 0");
    }
    const PowerFunction mapped = kfrac_monomial(eta, order);
    out.coeffs.push_back(f.coeffs[n] * mapped.coeff);
  }
  return out;
}

// Direct quadrature of the defining convolution for mu < 0:
//   1/(k Gamma_k(-mu)) ∫₀^z f(t) (z-t)^{-mu/k-1} dt
// The kernel singularity at t = z is handled through the 1-s endpoint weight.
inline EvalResult kfrac_quadrature(const std::function<double(double)>& f, double z,
                                   const FracOrder& order, const EvalConfig& cfg) {
  if (!(order.mu < 0.0)) throw domain_error("kfrac_quadrature: requires mu < 0");
  if (!(z > 0.0)) throw domain_error("kfrac_quadrature: requires z > 0");
  const double k = order.scale.k;
  const double q = -order.mu / k;
  EvalResult r = tanh_sinh_beta(1.0, q, [&](double s, double) { return f(z * s); }, cfg);
  const double pref =
      std::pow(z, q) / (k * std::exp(log_gamma_k_signed(-order.mu, order.scale).log_abs));
  r.value *= pref;
  r.abs_err_estimate *= pref;
  return r;
}

// Closed form (mu > eta > 0, |kz| < 1):
//   Gamma_k(eta)/Gamma_k(mu) * z^{mu/k-1} * 2F1,k(beta, eta; mu; z)
inline EvalResult krl4_closed(double eta, double mu, double beta, Scale scale, double z,
                              const EvalConfig& cfg) {
  if (!(mu > eta) || !(eta > 0.0)) throw domain_error("krl4_closed: requires mu > eta > 0");
  if (!(z > 0.0) || !(scale.k * z < 1.0)) {
    throw domain_error("krl4_closed: requires 0 < z < 1/k");
  }
  EvalResult r = hyp2f1_k_series(Hyp2F1Params(beta, eta, mu, scale), z, cfg);
  const double pref = std::exp(log_gamma_k_signed(eta, scale).log_abs -
                               log_gamma_k_signed(mu, scale).log_abs) *
                      std::pow(z, mu / scale.k - 1.0);
  r.value *= pref;
  r.abs_err_estimate = std::abs(pref) * r.abs_err_estimate + std::abs(r.value) * 2e-16;
  return r;
}

// Termwise route for the same quantity: expand z^{eta/k-1}(1-kz)^{-beta/k}
// through the k-binomial series, apply the order eta-mu operator term by
// term, and evaluate the truncated image series at z.
inline EvalResult krl4_termwise(double eta, double mu, double beta, Scale scale, double z,
                                long n_terms, [[maybe_unused]] const EvalConfig& cfg) {
  if (!(mu > eta) || !(eta > 0.0)) throw domain_error("krl4_termwise: requires mu > eta > 0");
  if (!(z > 0.0) || !(scale.k * z < 1.0)) {
    throw domain_error("krl4_termwise: requires 0 < z < 1/k");
  }
  const double k = scale.k;
  PowerSeries f;
  f.offset_exponent = eta / k - 1.0;
  f.coeffs.resize(static_cast<std::size_t>(n_terms));
  double c = 1.0;
  for (long n = 0; n < n_terms; ++n) {
    f.coeffs[static_cast<std::size_t>(n)] = c;
    const double nn = static_cast<double>(n);
    c *= (beta + nn * k) / (nn + 1.0);
  }
  const PowerSeries image = kfrac_series(f, FracOrder{eta - mu, scale});
  double sum = 0.0, zn = std::pow(z, image.offset_exponent), last = 0.0, prev = 0.0;
  for (std::size_t n = 0; n < image.coeffs.size(); ++n) {
    prev = last;
    last = image.coeffs[n] * zn;
    sum += last;
    zn *= z;
  }
  double rhat = std::abs(k * z);
  if (prev != 0.0) rhat = std::min(std::max(rhat, std::abs(last / prev)), 0.98);
  const double tail = std::abs(last) * rhat / (1.0 - rhat);
  return {sum, tail + std::abs(sum) * 1e-15, n_terms, true};
}

// Closed form (mu > eta > 0, alpha, beta > 0, max(|az|,|bz|) < 1/k):
//   Gamma_k(eta)/Gamma_k(mu) * z^{mu/k-1} * F1,k(eta, alpha, beta; mu; az, bz)
inline EvalResult krl5_closed(double eta, double mu, double alpha, double beta, double a,
                              double b, Scale scale, double z, const EvalConfig& cfg) {
  if (!(mu > eta) || !(eta > 0.0)) throw domain_error("krl5_closed: requires mu > eta > 0");
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw domain_error("krl5_closed: requires alpha > 0 and beta > 0");
  }
  if (!(z > 0.0) || !(std::max(std::abs(a * z), std::abs(b * z)) * scale.k < 1.0)) {
    throw domain_error("krl5_closed: requires 0 < z and max(|az|,|bz|) < 1/k");
  }
  AppellParams p;
  p.kind = AppellKind::F1;
  p.alpha = eta;
  p.beta = alpha;
  p.beta2 = beta;
  p.gamma = mu;
  p.scale = scale;
  EvalResult r = appell_series(p, Point2{a * z, b * z}, cfg);
  const double pref = std::exp(log_gamma_k_signed(eta, scale).log_abs -
                               log_gamma_k_signed(mu, scale).log_abs) *
                      std::pow(z, mu / scale.k - 1.0);
  r.value *= pref;
  r.abs_err_estimate = std::abs(pref) * r.abs_err_estimate + std::abs(r.value) * 2e-16;
  return r;
}

// Termwise route: double-binomial expansion of
// z^{eta/k-1}(1-kaz)^{-alpha/k}(1-kbz)^{-beta/k}, operator applied term by
// term over total-degree shells, truncated image evaluated at z.
inline EvalResult krl5_termwise(double eta, double mu, double alpha, double beta, double a,
                                double b, Scale scale, double z, long n_terms,
                                [[maybe_unused]] const EvalConfig& cfg) {
  if (!(mu > eta) || !(eta > 0.0)) throw domain_error("krl5_termwise: requires mu > eta > 0");
  if (!(z > 0.0) || !(std::max(std::abs(a * z), std::abs(b * z)) * scale.k < 1.0)) {
    throw domain_error("krl5_termwise: requires 0 < z and max(|az|,|bz|) < 1/k");
  }
  const double k = scale.k;
  const std::size_t n = static_cast<std::size_t>(n_terms);
  std::vector<double> ca(n, 1.0), cb(n, 1.0);  // (alpha)_{m,k} a^m / m!, (beta)_{m,k} b^m / m!
  for (std::size_t m = 1; m < n; ++m) {
    const double mm = static_cast<double>(m - 1);
    ca[m] = ca[m - 1] * (alpha + mm * k) * a / (mm + 1.0);
    cb[m] = cb[m - 1] * (beta + mm * k) * b / (mm + 1.0);
  }
  PowerSeries f;
  f.offset_exponent = eta / k - 1.0;
  f.coeffs.resize(n, 0.0);
  for (std::size_t N = 0; N < n; ++N) {
    double c = 0.0;
    for (std::size_t m = 0; m <= N; ++m) c += ca[m] * cb[N - m];
    f.coeffs[N] = c;
  }
  const PowerSeries image = kfrac_series(f, FracOrder{eta - mu, scale});
  double sum = 0.0, zn = std::pow(z, image.offset_exponent), last = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < image.coeffs.size(); ++i) {
    prev = last;
    last = image.coeffs[i] * zn;
    sum += last;
    zn *= z;
  }
  double rhat = std::max(std::abs(k * a * z), std::abs(k * b * z));
  if (prev != 0.0) rhat = std::min(std::max(rhat, std::abs(last / prev)), 0.98);
  const double tail = std::abs(last) * rhat / (1.0 - rhat);
  return {sum, tail + std::abs(sum) * 1e-15, n_terms, true};
}

}  // namespace ksf
