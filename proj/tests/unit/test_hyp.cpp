#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ksf/hyp.hpp"
#include "ksf/rng.hpp"

using namespace ksf;

namespace {
const double kTwoLn2 = 1.3862943611198906;

EvalConfig tight() {
  EvalConfig cfg;
  cfg.rel_tol = 1e-13;
  return cfg;
}
}  // namespace

TEST_CASE("hyp2f1_k_series basics") {
  EvalConfig cfg = tight();
  REQUIRE(hyp2f1_k_series(Hyp2F1Params(0.3, 0.9, 2.2, Scale(2.0)), 0.0, cfg).value == 1.0);

  const EvalResult a = hyp2f1_k_series(Hyp2F1Params(1, 1, 2, Scale(1.0)), 0.5, cfg);
  REQUIRE(std::abs(a.value - kTwoLn2) <= 1e-10 * kTwoLn2);

  // beta = gamma collapses onto the k-binomial
  const EvalResult b = hyp2f1_k_series(Hyp2F1Params(2.0, 1.7, 1.7, Scale(2.0)), 0.25, cfg);
  REQUIRE(std::abs(b.value - 2.0) <= 1e-11);

  // frozen value at k = 2
  const EvalResult c = hyp2f1_k_series(Hyp2F1Params(0.8, 1.7, 2.9, Scale(2.0)), 0.2, cfg);
  REQUIRE(std::abs(c.value - 1.1211297426907636) <= 1e-12);

  REQUIRE_THROWS_AS(
      hyp2f1_k_series(Hyp2F1Params(1, 1, 2, Scale(1.0)), 1.5, cfg), domain_error);
  REQUIRE_THROWS_AS(Hyp2F1Params(1, 1, -2, Scale(1.0)), domain_error);
  REQUIRE_THROWS_AS(Hyp2F1Params(1, 1, 0.0, Scale(1.0)), domain_error);
}

TEST_CASE("terminating series ignore the radius and finish exactly") {
  EvalConfig cfg = tight();
  // upper parameter -2k: polynomial of degree 2 even at |kx| > 1
  const double k = 0.7;
  const double a = -(2.0 * k);
  const EvalResult r = hyp2f1_k_series(Hyp2F1Params(a, 1.3, 2.1, Scale(k)), 3.0, cfg);
  REQUIRE(r.converged);
  REQUIRE(r.terms_used == 3);
  const double expect = 1.0 + a * 1.3 / 2.1 * 3.0 +
                        a * (a + k) * 1.3 * (1.3 + k) / (2.1 * (2.1 + k)) / 2.0 * 9.0;
  REQUIRE(std::abs(r.value - expect) <= 1e-12 * std::abs(expect));
}

TEST_CASE("series is bitwise symmetric under alpha <-> beta") {
  EvalConfig cfg;
  SampleRng rng(29, 0);
  for (int i = 0; i < 50; ++i) {
    const double k = rng.uniform(0.25, 4.0);
    const double a = rng.log_uniform(0.1, 5.0), b = rng.log_uniform(0.1, 5.0),
                 c = rng.log_uniform(0.1, 5.0);
    const double x = rng.uniform(-0.6, 0.6) / k;
    const double lhs = hyp2f1_k_series(Hyp2F1Params(a, b, c, Scale(k)), x, cfg).value;
    const double rhs = hyp2f1_k_series(Hyp2F1Params(b, a, c, Scale(k)), x, cfg).value;
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("radius contract: |kx| <= 0.9 converges within the budget") {
  EvalConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.max_terms = 10000;
  SampleRng rng(31, 1);
  for (int i = 0; i < 50; ++i) {
    const double k = rng.uniform(0.25, 4.0);
    const double a = rng.log_uniform(0.1, 5.0), b = rng.log_uniform(0.1, 5.0),
                 c = rng.log_uniform(0.1, 5.0);
    const double x = rng.sign() * rng.uniform(0.0, 0.9) / k;
    const EvalResult r = hyp2f1_k_series(Hyp2F1Params(a, b, c, Scale(k)), x, cfg);
    REQUIRE(r.converged);
    REQUIRE(r.terms_used <= 10000);
  }
}

TEST_CASE("converged implies the estimate clears the stop tolerance") {
  SampleRng rng(107, 9);
  for (int i = 0; i < 100; ++i) {
    EvalConfig cfg;
    cfg.rel_tol = rng.log_uniform(1e-13, 1e-6);
    const double k = rng.uniform(0.25, 4.0);
    const double a = rng.log_uniform(0.1, 5.0), b = rng.log_uniform(0.1, 5.0),
                 c = rng.log_uniform(0.1, 5.0);
    const double x = rng.uniform(-0.8, 0.8) / k;
    const EvalResult r = hyp2f1_k_series(Hyp2F1Params(a, b, c, Scale(k)), x, cfg);
    if (r.converged) {
      REQUIRE(r.abs_err_estimate <=
              cfg.rel_tol * std::max(1.0, std::abs(r.value)) * 1.001);
    }
  }
}

TEST_CASE("budget exhaustion reports converged=false") {
  EvalConfig cfg;
  cfg.max_terms = 10;
  const EvalResult r = hyp2f1_k_series(Hyp2F1Params(1, 1, 2, Scale(1.0)), 0.95, cfg);
  REQUIRE_FALSE(r.converged);
  REQUIRE(r.abs_err_estimate > 0.0);
}

TEST_CASE("hyp2f1_k_integral agrees with the series") {
  EvalConfig cfg;
  cfg.rel_tol = 1e-10;
  const EvalResult a =
      hyp2f1_k_integral(Hyp2F1Params(1, 1, 2, Scale(1.0)), 0.5, cfg);
  REQUIRE(std::abs(a.value - kTwoLn2) <= std::max(1e-9, a.abs_err_estimate));

  const EvalResult b =
      hyp2f1_k_integral(Hyp2F1Params(2.3, 0.7, 1.9, Scale(1.5)), 0.0, cfg);
  REQUIRE(std::abs(b.value - 1.0) <= std::max(1e-9, b.abs_err_estimate));

  const EvalResult c =
      hyp2f1_k_integral(Hyp2F1Params(1, 2, 5, Scale(1.0)), 0.3, cfg);
  REQUIRE(std::abs(c.value - 1.1418111555242454) <= std::max(1e-9, c.abs_err_estimate));

  REQUIRE_THROWS_AS(hyp2f1_k_integral(Hyp2F1Params(1, 3, 2, Scale(1.0)), 0.1, cfg),
                    domain_error);

  SampleRng rng(37, 2);
  for (int i = 0; i < 200; ++i) {
    const double k = rng.uniform(0.25, 4.0);
    const double al = rng.log_uniform(0.1, 5.0);
    const double be = rng.log_uniform(0.1, 2.5);
    const double ga = be + rng.log_uniform(0.1, 2.5);
    const double x = rng.uniform(-0.5, 0.5) / k;
    const Hyp2F1Params p(al, be, ga, Scale(k));
    const EvalResult si = hyp2f1_k_series(p, x, cfg);
    const EvalResult in = hyp2f1_k_integral(p, x, cfg);
    REQUIRE(std::abs(si.value - in.value) <=
            std::max(1e-6, si.abs_err_estimate + in.abs_err_estimate));
  }
}

TEST_CASE("hyp2f1_k_mixed values and termination") {
  EvalConfig cfg;
  REQUIRE(hyp2f1_k_mixed(0.0, 1.3, 2.9, Scale(2.0), cfg).value == 1.0);

  const EvalResult t = hyp2f1_k_mixed(-1.0, 1.0, 3.0, Scale(1.0), cfg);
  REQUIRE(t.converged);
  REQUIRE(std::abs(t.value - 2.0 / 3.0) <= 1e-14);

  const EvalResult g = hyp2f1_k_mixed(1.0, 1.0, 4.0, Scale(1.0), cfg);
  REQUIRE(std::abs(g.value - 1.5) <= g.abs_err_estimate + 1e-12);

  // margin too thin for the budget: honest converged=false
  EvalConfig small = cfg;
  small.max_terms = 500;
  small.rel_tol = 1e-12;
  const EvalResult thin = hyp2f1_k_mixed(1.0, 1.0, 2.3, Scale(1.0), small);
  REQUIRE_FALSE(thin.converged);
  REQUIRE(thin.abs_err_estimate > 0.0);

  REQUIRE_THROWS_AS(hyp2f1_k_mixed(2.0, 1.0, 2.0, Scale(1.0), cfg), domain_error);
}

TEST_CASE("Gauss consistency between the mixed series and the closed form") {
  EvalConfig cfg;
  SampleRng rng(41, 3);
  for (int i = 0; i < 100; ++i) {
    const double k = rng.uniform(0.25, 2.0);
    const double al = rng.log_uniform(0.1, 2.0);
    const double be = rng.log_uniform(0.1, 2.0);
    const double ga = be + k * al + rng.uniform(0.5, 3.0) * k;
    const EvalResult series = hyp2f1_k_mixed(al, be, ga, Scale(k), cfg);
    const double closed = gauss_sum_k(al, be, ga, Scale(k));
    REQUIRE(std::abs(series.value - closed) <= std::max(1e-6, series.abs_err_estimate));
  }
}

TEST_CASE("gauss_sum_k closed values") {
  REQUIRE(gauss_sum_k(0.0, 1.3, 2.9, Scale(0.5)) == 1.0);
  REQUIRE(std::abs(gauss_sum_k(1, 1, 4, Scale(1.0)) - 1.5) < 1e-13);
  REQUIRE(std::abs(gauss_sum_k(1, 2, 6, Scale(2.0)) - 2.0) < 1e-13);
  REQUIRE_THROWS_AS(gauss_sum_k(2, 1, 2, Scale(1.0)), domain_error);
}

TEST_CASE("terminating_mixed equals the finite mixed sum") {
  REQUIRE(terminating_mixed(0, 1.0, 3.0, Scale(1.0)) == 1.0);
  REQUIRE(std::abs(terminating_mixed(1, 1.0, 3.0, Scale(1.0)) - 2.0 / 3.0) < 1e-15);
  REQUIRE(std::abs(terminating_mixed(2, 1.0, 4.0, Scale(2.0)) - 0.625) < 1e-15);

  SampleRng rng(43, 4);
  for (int i = 0; i < 100; ++i) {
    const double k = rng.uniform(0.25, 4.0);
    const long n = rng.uniform_int(0, 12);
    const double be = rng.log_uniform(0.1, 5.0), ga = rng.log_uniform(0.1, 5.0);
    const Scale s(k);
    double sum = 0.0, fact = 1.0;
    for (long m = 0; m <= n; ++m) {
      if (m > 0) fact *= static_cast<double>(m);
      sum += pochhammer(static_cast<double>(-n), m) * pochhammer_k(be, m, s) /
             (pochhammer_k(ga, m, s) * fact);
    }
    const double closed = terminating_mixed(n, be, ga, s);
    REQUIRE(std::abs(sum - closed) <= 1e-11 * std::max(1.0, std::abs(closed)));
  }
}

TEST_CASE("Euler transformation") {
  EvalConfig cfg = tight();
  REQUIRE(euler_transform_rhs(Hyp2F1Params(1.2, 0.7, 2.4, Scale(2.0)), 0.0, cfg).value == 1.0);

  // kx = 0.5 would map exactly onto the boundary of the inner radius, so the
  // deepest interior check sits at x = 0.4; the series is the oracle.
  const Hyp2F1Params p112(1, 1, 2, Scale(1.0));
  const EvalResult a = euler_transform_rhs(p112, 0.4, cfg);
  const EvalResult a_ref = hyp2f1_k_series(p112, 0.4, cfg);
  REQUIRE(std::abs(a.value - a_ref.value) <= 1e-10);
  REQUIRE_THROWS_AS(euler_transform_rhs(p112, 0.5, cfg), domain_error);

  // alpha = gamma kills the transformed series: rhs is the bare prefactor
  const EvalResult b = euler_transform_rhs(Hyp2F1Params(2.0, 1.0, 2.0, Scale(1.0)), 0.25, cfg);
  REQUIRE(std::abs(b.value - 1.0 / 0.75) <= 1e-13);

  SampleRng rng(47, 5);
  for (int i = 0; i < 100; ++i) {
    const double k = rng.uniform(0.25, 4.0);
    const double al = rng.log_uniform(0.1, 5.0), be = rng.log_uniform(0.1, 5.0),
                 ga = rng.log_uniform(0.1, 5.0);
    const double x = rng.uniform(-0.4, 0.4) / k;
    const Hyp2F1Params p(al, be, ga, Scale(k));
    const double lhs = hyp2f1_k_series(p, x, cfg).value;
    const double rhs = euler_transform_rhs(p, x, cfg).value;
    REQUIRE(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
  }
}
