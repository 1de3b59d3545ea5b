#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>

#include "ksf/identities.hpp"
#include "ksf/report_io.hpp"

using namespace ksf;

namespace {

const std::set<std::string> kExpectedIds = {
    "kg1",    "kb3",    "kpoc1",  "kpoc2",  "kpoc3",  "kpoc5",  "ikhf",   "kummer1",
    "kummer2", "Euler",  "ikapp",  "appk5",  "appk5ab", "appk7",  "appk8",  "appk9",
    "appk10", "appk11", "appk12", "appk13", "appk14", "appk15", "appk16", "appk17",
    "appk18", "appk19", "krl3",   "krl4",   "krl5",   "gf1",    "gf2",    "gf3",
    "gf4",    "gf5",    "gf6",    "gf7",    "gf8",    "gf9"};

ParamMap sample_of(const IdentityCase& c, std::uint64_t seed, std::uint64_t idx) {
  SampleRng rng(seed, idx);
  const double k = rng.log_uniform(0.25, 4.0);
  return c.sample(rng, k);
}

}  // namespace

TEST_CASE("registry is exhaustive and well-formed") {
  std::set<std::string> seen;
  for (const auto& c : identity_registry()) {
    REQUIRE(seen.insert(c.id).second);  // unique
    REQUIRE_FALSE(c.description.empty());
    REQUIRE_FALSE(c.params.empty());
    REQUIRE(std::find(c.params.begin(), c.params.end(), "k") != c.params.end());
    REQUIRE(c.sample != nullptr);
    REQUIRE(c.lhs != nullptr);
    REQUIRE(c.rhs != nullptr);
  }
  REQUIRE(seen == kExpectedIds);
  REQUIRE_THROWS_AS(find_identity("nope"), std::invalid_argument);
}

TEST_CASE("samplers emit exactly the declared parameters and stay in-domain") {
  EvalConfig cfg;
  for (const auto& c : identity_registry()) {
    for (std::uint64_t i = 0; i < 5; ++i) {
      const ParamMap m = sample_of(c, 1234, i);
      std::set<std::string> keys;
      for (const auto& [key, value] : m) keys.insert(key);
      REQUIRE(keys == std::set<std::string>(c.params.begin(), c.params.end()));
      // both sides must evaluate without domain errors on sampled points
      const SampleOutcome o = verify_identity(c, m, cfg);
      INFO("id=" << c.id << " sample=" << i << " err=" << o.error);
      REQUIRE(o.error.empty());
    }
  }
}

TEST_CASE("verify_identity spot checks") {
  EvalConfig cfg;
  // Euler at x = 0: both sides 1
  {
    ParamMap m{{"k", 1.0}, {"alpha", 1.0}, {"beta", 1.0}, {"gamma", 2.0}, {"x", 0.0}};
    const SampleOutcome o = verify_identity(find_identity("Euler"), m, cfg);
    REQUIRE(o.pass);
    REQUIRE(o.lhs == 1.0);
    REQUIRE(o.rhs == 1.0);
  }
  // gf1 at t = 0 collapses to the same series on both sides
  {
    ParamMap m{{"k", 1.0},    {"lambda", 0.9}, {"alpha", 0.7},
               {"beta", 1.8}, {"x", 0.22},     {"t", 0.0}};
    const SampleOutcome o = verify_identity(find_identity("gf1"), m, cfg);
    REQUIRE(o.pass);
    REQUIRE(o.rel_err <= 1e-12);
  }
  // kpoc5 geometric-series point: both sides 2
  {
    ParamMap m{{"k", 2.0}, {"alpha", 2.0}, {"x", 0.25}};
    const SampleOutcome o = verify_identity(find_identity("kpoc5"), m, cfg);
    REQUIRE(o.pass);
    REQUIRE(std::abs(o.lhs - 2.0) < 1e-9);
    REQUIRE(std::abs(o.rhs - 2.0) < 1e-14);
  }
  // kummer2 terminating point: both sides 0.625
  {
    ParamMap m{{"k", 2.0}, {"n", 2.0}, {"beta", 1.0}, {"gamma", 4.0}};
    const SampleOutcome o = verify_identity(find_identity("kummer2"), m, cfg);
    REQUIRE(o.pass);
    REQUIRE(std::abs(o.lhs - 0.625) < 1e-14);
    REQUIRE(std::abs(o.rhs - 0.625) < 1e-14);
  }
  // out-of-domain input surfaces as a sample-level error
  {
    ParamMap m{{"k", 1.0}, {"alpha", 1.0}, {"beta", 1.0}, {"gamma", 2.0}, {"x", 2.0}};
    const SampleOutcome o = verify_identity(find_identity("Euler"), m, cfg);
    REQUIRE_FALSE(o.pass);
    REQUIRE_FALSE(o.error.empty());
  }
}

TEST_CASE("degenerate slices pass at 1e-12") {
  EvalConfig cfg;
  cfg.rel_tol = 1e-13;  // slices compare different evaluators: evaluate tightly
  // identity id -> variables forced to zero so both sides collapse
  const std::vector<std::pair<std::string, std::vector<std::string>>> slices = {
      {"kpoc5", {"x"}},        {"Euler", {"x"}},
      {"kummer2", {"n"}},      {"appk7", {"x", "y"}},
      {"appk8", {"x", "y"}},   {"appk9", {"x", "y"}},
      {"appk10", {"x", "y"}},  {"appk11", {"x", "y"}},
      {"appk12", {"x", "y"}},  {"appk13", {"x", "y"}},
      {"appk14", {"x", "y"}},  {"appk15", {"x", "y"}},
      {"appk16", {"x", "y"}},  {"appk17", {"x", "y"}},
      {"appk18", {"x", "y"}},  {"appk19", {"x", "y"}},
      {"gf1", {"t"}},          {"gf2", {"t"}},
      {"gf3", {"t"}},          {"gf4", {"t"}},
      {"gf5", {"t"}},          {"gf6", {"t"}},
      {"gf7", {"y"}},          {"gf8", {"y"}},
      {"gf9", {"y"}},
  };
  for (const auto& [id, zeroed] : slices) {
    const IdentityCase& c = find_identity(id);
    for (std::uint64_t i = 0; i < 3; ++i) {
      ParamMap m = sample_of(c, 555, i);
      for (const auto& var : zeroed) m[var] = 0.0;
      const SampleOutcome o = verify_identity(c, m, cfg);
      INFO("id=" << id << " sample=" << i << " rel_err=" << o.rel_err
                 << " err=" << o.error);
      REQUIRE(o.error.empty());
      REQUIRE(o.rel_err <= 1e-12);
    }
  }
}

TEST_CASE("sweeps pass on sound identities") {
  EvalConfig cfg;
  const SweepReport kg1 = sweep(find_identity("kg1"), 100, 7, cfg);
  REQUIRE(kg1.passes == 100);
  REQUIRE(kg1.verdict == "pass");
  REQUIRE(kg1.failures.empty());

  const SweepReport a15 = sweep(find_identity("appk15"), 100, 7, cfg);
  REQUIRE(a15.passes == 100);
  REQUIRE(a15.verdict == "pass");

  const SweepReport k3 = sweep(find_identity("krl3"), 50, 7, cfg);
  REQUIRE(k3.passes == 50);
}

TEST_CASE("sweep is deterministic across runs and thread counts") {
  EvalConfig cfg;
  const IdentityCase& c = find_identity("appk7");
  const SweepReport one = sweep(c, 40, 99, cfg, 1);
  const SweepReport two = sweep(c, 40, 99, cfg, 1);
  const SweepReport four = sweep(c, 40, 99, cfg, 4);
  REQUIRE(render_report_json(one) == render_report_json(two));
  REQUIRE(render_report_json(one) == render_report_json(four));
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    REQUIRE(one.records[i].lhs == four.records[i].lhs);
    REQUIRE(one.records[i].rhs == four.records[i].rhs);
  }
}

TEST_CASE("flagged identities get the discrepancy verdict with audit evidence") {
  EvalConfig cfg;
  // k-power typos: fail for k != 1, classical audit passes
  for (const char* id : {"gf8", "gf9"}) {
    const SweepReport r = sweep(find_identity(id), 30, 7, cfg);
    INFO("id=" << id);
    REQUIRE(r.passes == 0);
    REQUIRE(r.verdict == "paper-discrepancy-suspected");
    REQUIRE(r.audit_samples > 0);
    REQUIRE(r.audit_passes == r.audit_samples);
  }
  // k-independent typos: structural residual, classical audit fails too
  for (const char* id : {"appk11", "gf7"}) {
    const SweepReport r = sweep(find_identity(id), 30, 7, cfg);
    INFO("id=" << id);
    REQUIRE(r.passes == 0);
    REQUIRE(r.verdict == "paper-discrepancy-suspected");
    REQUIRE(r.audit_samples > 0);
    REQUIRE(r.audit_passes == 0);
  }
  // report invariant: passes + |failures| = samples
  const SweepReport r = sweep(find_identity("gf8"), 25, 11, cfg);
  REQUIRE(r.passes + static_cast<long>(r.failures.size()) == r.samples);
}

TEST_CASE("generating_lhs tail bounds are honest") {
  EvalConfig cfg;
  cfg.rel_tol = 1e-14;  // force the fixed caps to govern
  const char* relations[] = {"gf1", "gf2", "gf3", "gf4", "gf5", "gf6", "gf7", "gf8", "gf9"};
  for (const char* id : relations) {
    const IdentityCase& c = find_identity(id);
    for (std::uint64_t i = 0; i < 5; ++i) {
      const ParamMap m = sample_of(c, 2024, i);
      const EvalResult lo = generating_lhs(id, m, 24, cfg);
      const EvalResult hi = generating_lhs(id, m, 48, cfg);
      INFO("id=" << id << " sample=" << i << " diff=" << std::abs(lo.value - hi.value)
                 << " bound=" << lo.abs_err_estimate);
      REQUIRE(std::abs(lo.value - hi.value) <= lo.abs_err_estimate);
    }
  }
}

TEST_CASE("generating_lhs degenerate slices") {
  EvalConfig cfg;
  // gf1 at t=0: single term, the inner series itself
  ParamMap m{{"k", 2.0},    {"lambda", 0.9}, {"alpha", 0.7},
             {"beta", 1.8}, {"x", 0.11},     {"t", 0.0}};
  const EvalResult lhs = generating_lhs("gf1", m, 40, cfg);
  const EvalResult inner =
      hyp2f1_k_series(Hyp2F1Params(0.9, 0.7, 1.8, Scale(2.0)), 0.11, cfg);
  REQUIRE(std::abs(lhs.value - inner.value) <= 1e-14);
  // gf1 at x=0 collapses to the k-binomial sum
  m["x"] = 0.0;
  m["t"] = 0.12;
  const EvalResult bin = generating_lhs("gf1", m, 0, cfg);
  REQUIRE(std::abs(bin.value - k_binomial(0.12, 0.9, Scale(2.0))) <=
          bin.abs_err_estimate + 1e-12);
}
