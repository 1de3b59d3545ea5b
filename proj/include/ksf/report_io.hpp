#pragma once

// Report rendering: canonical JSON (keys sorted, floats at 17 significant
// digits so values round-trip and output is byte-stable) and CSV (summary
// row, or one row per sample in verbose mode).  Text mode prints at 9
// significant digits.

#include <cstdio>
#include <string>

#include "ksf/identities.hpp"
#include "ksf/types.hpp"

namespace ksf {

namespace detail_io {

inline std::string fmt_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

inline std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  return fmt_double(v, 17);
}

inline std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
  return out;
}

inline std::string params_json(const ParamMap& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : m) {  // std::map: keys already sorted
    if (!first) out += ',';
    first = false;
    out += json_escape(key);
    out += ':';
    out += json_number(value);
  }
  out += '}';
  return out;
}

inline std::string outcome_json(const SampleOutcome& o) {
  std::string out = "{";
  out += "\"abs_diff\":" + json_number(o.abs_diff);
  out += ",\"error\":" + json_escape(o.error);
  out += ",\"lhs\":" + json_number(o.lhs);
  out += ",\"params\":" + params_json(o.params);
  out += ",\"rel_err\":" + json_number(o.rel_err);
  out += ",\"rhs\":" + json_number(o.rhs);
  out += ",\"sample_index\":" + std::to_string(o.index);
  out += '}';
  return out;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

}  // namespace detail_io

inline std::string render_report_json(const SweepReport& r) {
  std::string out = "{";
  out += "\"audit_passes\":" + std::to_string(r.audit_passes);
  out += ",\"audit_samples\":" + std::to_string(r.audit_samples);
  out += ",\"error_samples\":" + std::to_string(r.error_samples);
  out += ",\"failures\":[";
  for (std::size_t i = 0; i < r.failures.size(); ++i) {
    if (i) out += ',';
    out += detail_io::outcome_json(r.failures[i]);
  }
  out += "],\"id\":" + detail_io::json_escape(r.id);
  out += ",\"max_rel_err\":" + detail_io::json_number(r.max_rel_err);
  out += ",\"median_rel_err\":" + detail_io::json_number(r.median_rel_err);
  out += ",\"passes\":" + std::to_string(r.passes);
  out += ",\"samples\":" + std::to_string(r.samples);
  out += ",\"seed\":" + std::to_string(r.seed);
  out += ",\"verdict\":" + detail_io::json_escape(r.verdict);
  out += "}\n";
  return out;
}

inline std::string render_report_csv(const SweepReport& r, bool verbose) {
  std::string out;
  if (!verbose) {
    out += "id,seed,samples,passes,max_rel_err,median_rel_err,verdict\n";
    out += r.id + ',' + std::to_string(r.seed) + ',' + std::to_string(r.samples) + ',' +
           std::to_string(r.passes) + ',' + detail_io::fmt_double(r.max_rel_err, 17) + ',' +
           detail_io::fmt_double(r.median_rel_err, 17) + ',' + r.verdict + '\n';
    return out;
  }
  out += "id,sample_index";
  if (!r.records.empty()) {
    for (const auto& [key, value] : r.records.front().params) out += ',' + key;
  }
  out += ",lhs,rhs,abs_diff,rel_err,pass,error\n";
  for (const auto& o : r.records) {
    out += r.id + ',' + std::to_string(o.index);
    for (const auto& [key, value] : o.params) out += ',' + detail_io::fmt_double(value, 17);
    out += ',' + detail_io::fmt_double(o.lhs, 17);
    out += ',' + detail_io::fmt_double(o.rhs, 17);
    out += ',' + detail_io::fmt_double(o.abs_diff, 17);
    out += ',' + detail_io::fmt_double(o.rel_err, 17);
    out += o.pass ? ",true," : ",false,";
    out += detail_io::csv_escape(o.error);
    out += '\n';
  }
  return out;
}

inline std::string render_report_text(const SweepReport& r) {
  std::string out;
  out += "id           = " + r.id + '\n';
  out += "seed         = " + std::to_string(r.seed) + '\n';
  out += "samples      = " + std::to_string(r.samples) + '\n';
  out += "passes       = " + std::to_string(r.passes) + '\n';
  out += "max_rel_err  = " + detail_io::fmt_double(r.max_rel_err, 9) + '\n';
  out += "median_rel_err = " + detail_io::fmt_double(r.median_rel_err, 9) + '\n';
  out += "verdict      = " + r.verdict + '\n';
  if (r.audit_samples > 0) {
    out += "k1_audit     = " + std::to_string(r.audit_passes) + '/' +
           std::to_string(r.audit_samples) + " passed\n";
  }
  return out;
}

inline std::string render_eval_json(const EvalResult& r, const double* exponent = nullptr) {
  std::string out = "{";
  out += "\"abs_err_estimate\":" + detail_io::json_number(r.abs_err_estimate);
  out += ",\"converged\":" + std::string(r.converged ? "true" : "false");
  if (exponent != nullptr) out += ",\"exponent\":" + detail_io::json_number(*exponent);
  out += ",\"terms_used\":" + std::to_string(r.terms_used);
  out += ",\"value\":" + detail_io::json_number(r.value);
  out += "}\n";
  return out;
}

inline std::string render_eval_text(const EvalResult& r, const double* exponent = nullptr) {
  std::string out;
  out += "value            = " + detail_io::fmt_double(r.value, 9) + '\n';
  if (exponent != nullptr) {
    out += "exponent         = " + detail_io::fmt_double(*exponent, 9) + '\n';
  }
  out += "abs_err_estimate = " + detail_io::fmt_double(r.abs_err_estimate, 9) + '\n';
  out += "terms_used       = " + std::to_string(r.terms_used) + '\n';
  out += "converged        = " + std::string(r.converged ? "true" : "false") + '\n';
  return out;
}

inline std::string render_verify_json(const std::string& id, const SampleOutcome& o) {
  std::string out = "{";
  out += "\"abs_diff\":" + detail_io::json_number(o.abs_diff);
  out += ",\"error\":" + detail_io::json_escape(o.error);
  out += ",\"id\":" + detail_io::json_escape(id);
  out += ",\"lhs\":" + detail_io::json_number(o.lhs);
  out += ",\"params\":" + detail_io::params_json(o.params);
  out += ",\"pass\":" + std::string(o.pass ? "true" : "false");
  out += ",\"rel_err\":" + detail_io::json_number(o.rel_err);
  out += ",\"rhs\":" + detail_io::json_number(o.rhs);
  out += "}\n";
  return out;
}

inline std::string render_verify_text(const std::string& id, const SampleOutcome& o) {
  std::string out;
  out += "id      = " + id + '\n';
  out += "lhs     = " + detail_io::fmt_double(o.lhs, 9) + '\n';
  out += "rhs     = " + detail_io::fmt_double(o.rhs, 9) + '\n';
  out += "rel_err = " + detail_io::fmt_double(o.rel_err, 9) + '\n';
  out += "pass    = " + std::string(o.pass ? "true" : "false") + '\n';
  if (!o.error.empty()) out += "error   = " + o.error + '\n';
  return out;
}

}  // namespace ksf
