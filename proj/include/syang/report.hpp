#pragma once

#include "syang/series.hpp"
#include "syang/text.hpp"
#include "syang/verify.hpp"

#include <json.hpp>

#include <string>

namespace syang {

using json = nlohmann::ordered_json;

inline std::string failure_residual_text(const RelationFailure& f) {
  return f.residual_text.empty() ? element_to_text(f.residual) : f.residual_text;
}

inline json failure_to_json(const RelationFailure& f) {
  json j;
  j["family"] = f.family;
  j["indices"] = f.indices;
  j["levels"] = f.levels;
  j["residual"] = failure_residual_text(f);
  return j;
}

// Stable schema: {suite, m, n, N, instances, failures, kappa_checked,
// kappa_failures, notes, passed}.
inline json report_to_json(const RelationReport& rep) {
  json j;
  j["suite"] = rep.suite;
  j["m"] = rep.params.m;
  j["n"] = rep.params.n;
  j["N"] = rep.params.N;
  j["instances"] = rep.total;
  j["failures"] = json::array();
  for (const RelationFailure& f : rep.failures) j["failures"].push_back(failure_to_json(f));
  j["kappa_checked"] = rep.kappa_checked;
  j["kappa_failures"] = json::array();
  for (const RelationFailure& f : rep.kappa_failures)
    j["kappa_failures"].push_back(failure_to_json(f));
  j["notes"] = rep.notes;
  j["passed"] = rep.passed();
  return j;
}

// A USeries over Element as the array of canonical-text coefficients.
inline json eseries_to_json(const ESeries& s) {
  json arr = json::array();
  for (int r = 0; r <= s.order(); ++r) arr.push_back(element_to_text(s[r]));
  return arr;
}

inline std::string report_to_text(const RelationReport& rep) {
  std::string out = "suite " + rep.suite + "  gl(" + std::to_string(rep.params.m) + "|" +
                    std::to_string(rep.params.n) + ")  N=" + std::to_string(rep.params.N) +
                    "\ninstances: " + std::to_string(rep.total) +
                    "\nfailures: " + std::to_string(rep.failures.size()) + "\n";
  for (const RelationFailure& f : rep.failures) {
    out += "  " + f.family + " indices";
    for (int i : f.indices) out += " " + std::to_string(i);
    out += " levels";
    for (int l : f.levels) out += " " + std::to_string(l);
    out += ": " + failure_residual_text(f) + "\n";
  }
  if (rep.kappa_checked > 0 || !rep.kappa_failures.empty()) {
    out += "kappa rechecked: " + std::to_string(rep.kappa_checked) +
           ", kappa failures: " + std::to_string(rep.kappa_failures.size()) + "\n";
    for (const RelationFailure& f : rep.kappa_failures)
      out += "  " + f.family + ": " + failure_residual_text(f) + "\n";
  }
  for (const std::string& note : rep.notes) out += "note: " + note + "\n";
  out += rep.passed() ? "PASS\n" : "FAIL\n";
  return out;
}

}  // namespace syang
