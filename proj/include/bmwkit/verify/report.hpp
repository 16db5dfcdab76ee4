#pragma once

// A list of named pass/fail checks with timings, rendered as text or JSON.

#include <chrono>
#include <exception>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bmwkit {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;  // failure reason, empty on success
};

/// Outcome of one check: pass flag plus an optional explanation.
struct Verdict {
  bool pass = false;
  std::string detail;
  Verdict(bool p) : pass(p) {}  // NOLINT(google-explicit-constructor)
  Verdict(bool p, std::string d) : pass(p), detail(std::move(d)) {}
};

class Report {
 public:
  /// Runs fn (returning bool or Verdict) and records the result; an
  /// exception counts as a failure with its message as detail.
  template <class Fn>
  bool check(const std::string& suite, const std::string& name, Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r{suite, name, false, 0, {}};
    try {
      Verdict v = fn();
      r.pass = v.pass;
      r.detail = std::move(v.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results_.push_back(std::move(r));
    return results_.back().pass;
  }

  const std::vector<CheckResult>& results() const { return results_; }
  bool all_passed() const {
    for (const auto& r : results_)
      if (!r.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t k = 0;
    for (const auto& r : results_) k += r.pass ? 0 : 1;
    return k;
  }

  std::string to_text(bool timings = true) const {
    std::ostringstream os;
    for (const auto& r : results_) {
      os << (r.pass ? "PASS" : "FAIL") << "  [" << r.suite << "] " << r.name;
      if (timings) os << "  (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
      if (!r.detail.empty()) os << "  -- " << r.detail;
      os << '\n';
    }
    os << (all_passed() ? "all " : "") << results_.size() - failures() << "/" << results_.size() << " checks passed\n";
    return os.str();
  }

  nlohmann::json to_json(bool timings = true) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results_) {
      nlohmann::json j{{"suite", r.suite}, {"name", r.name}, {"pass", r.pass}};
      if (timings) j["seconds"] = r.seconds;
      if (!r.detail.empty()) j["detail"] = r.detail;
      arr.push_back(std::move(j));
    }
    return {{"checks", arr}, {"passed", results_.size() - failures()}, {"total", results_.size()}, {"ok", all_passed()}};
  }

 private:
  std::vector<CheckResult> results_;
};

}  // namespace bmwkit
