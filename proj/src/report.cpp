#include "arr/report.hpp"

namespace arr {

namespace {

const char* status_name(Check::Status s) {
  switch (s) {
    case Check::Status::Pass: return "pass";
    case Check::Status::Fail: return "fail";
    case Check::Status::Skipped: return "skipped";
  }
  return "?";
}

}  // namespace

void VerificationReport::merge(const VerificationReport& other) {
  for (const Check& c : other.checks) {
    Check copy = c;
    copy.name = other.subject.empty() ? c.name : other.subject + "/" + c.name;
    checks.push_back(std::move(copy));
  }
  for (const auto& t : other.timings) timings.push_back(t);
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["subject"] = subject;
  j["ok"] = ok();
  j["checks"] = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["status"] = status_name(c.status);
    if (!c.witness.empty()) jc["witness"] = c.witness;
    j["checks"].push_back(jc);
  }
  j["timings"] = nlohmann::json::object();
  for (const auto& [phase, secs] : timings) j["timings"][phase] = secs;
  if (!extra.empty()) j["detail"] = extra;
  return j;
}

std::string VerificationReport::to_text() const {
  std::string s;
  s += "== " + subject + " ==\n";
  for (const Check& c : checks) {
    s += "  [";
    s += status_name(c.status);
    s += "] " + c.name;
    if (!c.witness.empty()) s += "  :: " + c.witness;
    s += "\n";
  }
  for (const auto& [phase, secs] : timings)
    s += "  (" + phase + ": " + std::to_string(secs) + "s)\n";
  s += ok() ? "overall: pass\n" : "overall: FAIL\n";
  return s;
}

}  // namespace arr
