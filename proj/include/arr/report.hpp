#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace arr {

// Machine-readable verification outcome: named checks with pass/fail/skipped
// status, optional witness text (canonical polynomial or table), and
// per-phase wall-clock timings.
struct Check {
  enum class Status { Pass, Fail, Skipped };
  std::string name;
  Status status = Status::Pass;
  std::string witness;
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> timings;
  nlohmann::json extra = nlohmann::json::object();

  bool ok() const {
    for (const Check& c : checks)
      if (c.status == Check::Status::Fail) return false;
    return true;
  }

  void pass(const std::string& name, const std::string& witness = "") {
    checks.push_back({name, Check::Status::Pass, witness});
  }
  void fail(const std::string& name, const std::string& witness = "") {
    checks.push_back({name, Check::Status::Fail, witness});
  }
  void skip(const std::string& name, const std::string& witness = "") {
    checks.push_back({name, Check::Status::Skipped, witness});
  }
  void check(bool okay, const std::string& name, const std::string& witness = "") {
    if (okay)
      pass(name, witness);
    else
      fail(name, witness);
  }
  void timing(const std::string& phase, double seconds) { timings.emplace_back(phase, seconds); }

  void merge(const VerificationReport& other);

  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Scoped wall-clock phase timer appending into a report.
class PhaseTimer {
 public:
  PhaseTimer(VerificationReport& r, std::string phase)
      : report_(r), phase_(std::move(phase)), start_(std::chrono::steady_clock::now()) {}
  ~PhaseTimer() {
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
    report_.timing(phase_, d.count());
  }

 private:
  VerificationReport& report_;
  std::string phase_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace arr
