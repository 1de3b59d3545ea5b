#pragma once

// Double-exponential quadrature engines.
//
// tanh_sinh_beta integrates  ∫₀¹ x^{p-1} (1-x)^{q-1} f(x, 1-x) dx  for p,q > 0
// with the algebraic endpoint weights folded into the node weights in log
// space, so integrable singularities never produce inf*0.  f receives both x
// and 1-x; near the endpoints the small one is exact while the other has
// rounded to 0 or 1.
//
// de_gamma_integral handles  ∫₀^∞ u^{a-1} e^{-u} du  via u = exp(t - e^{-t}).
//
// Grids are tabulated once (h0 = 0.5, halved per level); refinement reuses
// previous sums in the 1-D rules.

#include <cmath>
#include <utility>
#include <vector>

#include "ksf/types.hpp"

namespace ksf {
namespace detail {

inline double softplus(double v) { return v > 35.0 ? v : std::log1p(std::exp(v)); }
inline double log_cosh(double v) {
  const double a = std::abs(v);
  return a + std::log1p(std::exp(-2.0 * a)) - 0.6931471805599453;
}

struct BetaNode {
  double x, omx, log_x, log_omx, log_w;
};

struct BetaGrid {
  double h0 = 0.5;
  std::vector<BetaNode> base;                    // step h0
  std::vector<std::vector<BetaNode>> midpoints;  // midpoints[l]: new nodes at step h0/2^{l+1}
};

inline BetaNode make_beta_node(double t) {
  const double u = 1.5707963267948966 * std::sinh(t);
  BetaNode n;
  n.log_x = -softplus(-2.0 * u);
  n.log_omx = -softplus(2.0 * u);
  n.x = std::exp(n.log_x);
  n.omx = std::exp(n.log_omx);
  n.log_w = std::log(0.7853981633974483) + std::log(std::cosh(t)) - 2.0 * log_cosh(u);
  return n;
}

inline const BetaGrid& beta_grid() {
  static const BetaGrid grid = [] {
    BetaGrid g;
    const double tmax = 7.0;
    const int levels = 10;
    const long j0 = std::lround(tmax / g.h0);
    for (long j = -j0; j <= j0; ++j) g.base.push_back(make_beta_node(g.h0 * j));
    double h = g.h0;
    for (int l = 0; l < levels; ++l) {
      h *= 0.5;
      std::vector<BetaNode> mids;
      const long jmax = std::lround(tmax / h);
      for (long j = -jmax + 1; j <= jmax; j += 2) mids.push_back(make_beta_node(h * j));
      g.midpoints.push_back(std::move(mids));
    }
    return g;
  }();
  return grid;
}

struct GammaNode {
  double u, log_u, log_w;
};

struct GammaGrid {
  double h0 = 0.5;
  std::vector<GammaNode> base;
  std::vector<std::vector<GammaNode>> midpoints;
};

inline GammaNode make_gamma_node(double t) {
  GammaNode n;
  n.log_u = t - std::exp(-t);
  n.u = std::exp(n.log_u);
  n.log_w = n.log_u + std::log1p(std::exp(-t));
  return n;
}

inline const GammaGrid& gamma_grid() {
  static const GammaGrid grid = [] {
    GammaGrid g;
    const double ta = -7.5, tb = 5.5;
    const int levels = 10;
    const long steps = std::lround((tb - ta) / g.h0);
    for (long j = 0; j <= steps; ++j) g.base.push_back(make_gamma_node(ta + g.h0 * j));
    double h = g.h0;
    for (int l = 0; l < levels; ++l) {
      h *= 0.5;
      const long n = std::lround((tb - ta) / h);
      std::vector<GammaNode> mids;
      for (long j = 1; j <= n; j += 2) mids.push_back(make_gamma_node(ta + h * j));
      g.midpoints.push_back(std::move(mids));
    }
    return g;
  }();
  return grid;
}

}  // namespace detail

// ∫₀¹ x^{p-1} (1-x)^{q-1} f(x, 1-x) dx,  p,q > 0.
template <typename F>
EvalResult tanh_sinh_beta(double p, double q, F&& f, const EvalConfig& cfg) {
  cfg.validate();
  if (!(p > 0.0) || !(q > 0.0)) {
    throw domain_error("tanh_sinh_beta: endpoint exponents must be positive");
  }
  const auto& grid = detail::beta_grid();
  const double pm1 = p - 1.0, qm1 = q - 1.0;
  long evals = 0;

  auto node_value = [&](const detail::BetaNode& n) -> double {
    const double lg = n.log_w + pm1 * n.log_x + qm1 * n.log_omx;
    const double w = std::exp(lg);
    ++evals;
    if (w == 0.0) return 0.0;
    return w * f(n.x, n.omx);
  };

  double h = grid.h0;
  double acc = 0.0;
  for (const auto& n : grid.base) acc += node_value(n);
  double sum = h * acc;
  double err = std::abs(sum);
  bool converged = false;
  const int max_level = std::min<int>(cfg.quad_levels, static_cast<int>(grid.midpoints.size()));
  for (int l = 0; l < max_level; ++l) {
    h *= 0.5;
    double add = 0.0;
    for (const auto& n : grid.midpoints[l]) add += node_value(n);
    const double refined = 0.5 * sum + h * add;
    err = std::abs(refined - sum);
    sum = refined;
    if (evals >= cfg.quad_points && err <= cfg.rel_tol * std::max(1.0, std::abs(sum))) {
      converged = true;
      break;
    }
  }
  return {sum, err + std::abs(sum) * 1e-15, evals, converged};
}

// ∫₀^∞ u^{a-1} e^{-u} du,  a > 0.
inline EvalResult de_gamma_integral(double a, const EvalConfig& cfg) {
  cfg.validate();
  if (!(a > 0.0)) throw domain_error("de_gamma_integral: requires a > 0");
  const auto& grid = detail::gamma_grid();
  const double am1 = a - 1.0;
  long evals = 0;

  auto node_value = [&](const detail::GammaNode& n) -> double {
    ++evals;
    return std::exp(n.log_w + am1 * n.log_u - n.u);
  };

  double h = grid.h0;
  double acc = 0.0;
  for (const auto& n : grid.base) acc += node_value(n);
  double sum = h * acc;
  double err = std::abs(sum);
  bool converged = false;
  const int max_level = std::min<int>(cfg.quad_levels, static_cast<int>(grid.midpoints.size()));
  for (int l = 0; l < max_level; ++l) {
    h *= 0.5;
    double add = 0.0;
    for (const auto& n : grid.midpoints[l]) add += node_value(n);
    const double refined = 0.5 * sum + h * add;
    err = std::abs(refined - sum);
    sum = refined;
    if (evals >= cfg.quad_points && err <= cfg.rel_tol * std::max(1.0, std::abs(sum))) {
      converged = true;
      break;
    }
  }
  return {sum, err + std::abs(sum) * 1e-15, evals, converged};
}

// ∫₀¹∫₀¹ s^{p1-1}(1-s)^{q1-1} t^{p2-1}(1-t)^{q2-1} f(s, t, 1-s, 1-t) ds dt.
// Tensor-product tanh-sinh; both axes refine together, the full tensor sum is
// recomputed per level and successive levels are compared.
template <typename F>
EvalResult tanh_sinh_beta_2d(double p1, double q1, double p2, double q2, F&& f,
                             const EvalConfig& cfg) {
  cfg.validate();
  if (!(p1 > 0.0) || !(q1 > 0.0) || !(p2 > 0.0) || !(q2 > 0.0)) {
    throw domain_error("tanh_sinh_beta_2d: endpoint exponents must be positive");
  }
  const auto& grid = detail::beta_grid();

  struct Axis {
    std::vector<double> w;  // exp(log weight incl. endpoint powers), no h factor
    std::vector<double> x, omx;
  };
  auto build_axis = [&](double p, double q, const std::vector<const detail::BetaNode*>& nodes) {
    Axis ax;
    ax.w.reserve(nodes.size());
    for (const auto* n : nodes) {
      ax.w.push_back(std::exp(n->log_w + (p - 1.0) * n->log_x + (q - 1.0) * n->log_omx));
      ax.x.push_back(n->x);
      ax.omx.push_back(n->omx);
    }
    return ax;
  };

  // node pointer lists per level (cumulative)
  std::vector<const detail::BetaNode*> nodes;
  for (const auto& n : grid.base) nodes.push_back(&n);

  long evals = 0;
  double prev_sum = 0.0, sum = 0.0, err = 0.0;
  bool converged = false;
  double h = grid.h0;
  const int max_level = std::min<int>(cfg.quad_levels, static_cast<int>(grid.midpoints.size()));
  for (int level = 0; level <= max_level; ++level) {
    if (level > 0) {
      h *= 0.5;
      for (const auto& n : grid.midpoints[level - 1]) nodes.push_back(&n);
    }
    const Axis a1 = build_axis(p1, q1, nodes);
    const Axis a2 = build_axis(p2, q2, nodes);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (a1.w[i] == 0.0) continue;
      double row = 0.0;
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (a2.w[j] == 0.0) continue;
        row += a2.w[j] * f(a1.x[i], a2.x[j], a1.omx[i], a2.omx[j]);
        ++evals;
      }
      acc += a1.w[i] * row;
    }
    sum = h * h * acc;
    if (level > 0) {
      err = std::abs(sum - prev_sum);
      if (evals >= cfg.quad_points && err <= cfg.rel_tol * std::max(1.0, std::abs(sum))) {
        converged = true;
        break;
      }
    } else {
      err = std::abs(sum);
    }
    prev_sum = sum;
  }
  return {sum, err + std::abs(sum) * 1e-15, evals, converged};
}

}  // namespace ksf
