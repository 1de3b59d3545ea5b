#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "ksf/report_io.hpp"

using namespace ksf;

namespace {
SweepReport tiny_report() {
  SweepReport r;
  r.id = "kg1";
  r.seed = 7;
  r.samples = 2;
  r.passes = 1;
  r.max_rel_err = 0.1;
  r.median_rel_err = 0.05;
  r.verdict = "fail";
  SampleOutcome ok;
  ok.index = 0;
  ok.params = {{"k", 1.0}, {"x", 0.5}};
  ok.lhs = ok.rhs = 1.0;
  ok.rel_err = 0.0;
  ok.pass = true;
  SampleOutcome bad;
  bad.index = 1;
  bad.params = {{"k", 2.0}, {"x", 0.25}};
  bad.lhs = 1.0;
  bad.rhs = 1.1;
  bad.abs_diff = 0.1;
  bad.rel_err = 0.1 / 1.1;
  bad.pass = false;
  r.records = {ok, bad};
  r.failures = {bad};
  return r;
}
}  // namespace

TEST_CASE("report JSON is canonical, parseable, and key-sorted") {
  const std::string text = render_report_json(tiny_report());
  const auto parsed = nlohmann::json::parse(text);
  REQUIRE(parsed["id"] == "kg1");
  REQUIRE(parsed["seed"] == 7);
  REQUIRE(parsed["samples"] == 2);
  REQUIRE(parsed["passes"] == 1);
  REQUIRE(parsed["verdict"] == "fail");
  REQUIRE(parsed["failures"].size() == 1);
  REQUIRE(parsed["failures"][0]["params"]["k"] == 2.0);
  REQUIRE(parsed["failures"][0]["sample_index"] == 1);

  // keys appear in sorted order in the byte stream
  const std::vector<std::string> keys = {"\"audit_passes\"", "\"audit_samples\"",
                                         "\"error_samples\"", "\"failures\"",
                                         "\"id\"",           "\"max_rel_err\"",
                                         "\"median_rel_err\"", "\"passes\"",
                                         "\"samples\"",      "\"seed\"",
                                         "\"verdict\""};
  std::size_t pos = 0;
  for (const auto& k : keys) {
    const std::size_t at = text.find(k, pos);
    REQUIRE(at != std::string::npos);
    pos = at;
  }
  REQUIRE(text.back() == '\n');
}

TEST_CASE("floats render with 17 significant digits in JSON") {
  EvalResult r;
  r.value = 0.1;
  r.abs_err_estimate = 0.0;
  r.terms_used = 3;
  const std::string text = render_eval_json(r);
  REQUIRE(text.find("0.10000000000000001") != std::string::npos);
  REQUIRE(nlohmann::json::parse(text)["value"] == 0.1);
}

TEST_CASE("non-finite values become JSON null") {
  SampleOutcome o;
  o.lhs = std::numeric_limits<double>::quiet_NaN();
  o.rhs = 1.0;
  o.rel_err = std::numeric_limits<double>::infinity();
  o.error = "domain error: test";
  const std::string text = render_verify_json("x", o);
  const auto parsed = nlohmann::json::parse(text);
  REQUIRE(parsed["lhs"].is_null());
  REQUIRE(parsed["rel_err"].is_null());
  REQUIRE(parsed["error"] == "domain error: test");
}

TEST_CASE("CSV summary and verbose shapes") {
  const SweepReport r = tiny_report();
  const std::string summary = render_report_csv(r, false);
  REQUIRE(summary.find("id,seed,samples,passes,max_rel_err,median_rel_err,verdict\n") == 0);
  REQUIRE(std::count(summary.begin(), summary.end(), '\n') == 2);

  const std::string verbose = render_report_csv(r, true);
  // header plus one row per sample
  REQUIRE(std::count(verbose.begin(), verbose.end(), '\n') == 3);
  REQUIRE(verbose.find("id,sample_index,k,x,lhs,rhs,abs_diff,rel_err,pass,error\n") == 0);
  REQUIRE(verbose.find("kg1,1,2,0.25,") != std::string::npos);
}

TEST_CASE("text mode renders at 9 significant digits") {
  EvalResult r;
  r.value = 1.3862943611198906;
  const std::string text = render_eval_text(r);
  REQUIRE(text.find("1.38629436") != std::string::npos);
  REQUIRE(text.find("1.3862943611") == std::string::npos);
}
