#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace ksf {

// Thrown when an evaluator is called outside its mathematical domain
// (gamma pole, point outside a convergence region, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Positive deformation parameter k. Every k-function reduces to its
// classical counterpart at k = 1.
struct Scale {
  double k;

  explicit Scale(double k_) : k(k_) {
    if (!std::isfinite(k) || k <= 0.0) {
      throw domain_error("Scale: k must be positive and finite");
    }
  }
};

// Tolerance and budget knobs shared by every evaluator.
//
// quad_points is the minimum node count an adaptive quadrature must reach
// before its two-level convergence check may stop; quad_levels caps the
// number of grid refinements (node count doubles per level).
struct EvalConfig {
  double rel_tol = 1e-10;
  long max_terms = 200000;
  int quad_points = 28;
  int quad_levels = 7;

  void validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
      throw std::invalid_argument("EvalConfig: rel_tol must be in (0,1)");
    }
    if (max_terms < 1) throw std::invalid_argument("EvalConfig: max_terms must be >= 1");
    if (quad_points < 4) throw std::invalid_argument("EvalConfig: quad_points must be >= 4");
    if (quad_levels < 1) throw std::invalid_argument("EvalConfig: quad_levels must be >= 1");
  }
};

// Value plus an error estimate. converged == false means the budget ran out
// before the stop criterion was met; the estimate stays honest either way.
struct EvalResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  long terms_used = 0;
  bool converged = true;
};

// For closed-form results: only rounding noise.
inline EvalResult exact_result(double v, long terms = 1) {
  return EvalResult{v, std::abs(v) * 4e-16, terms, true};
}

}  // namespace ksf
