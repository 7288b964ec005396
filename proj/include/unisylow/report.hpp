#pragma once

// Plain-text run reports: a config block, one [check] block per check with
// key = value lines, and a [summary] block. Output depends only on the
// recorded values, so identical runs give identical bytes; wall-clock
// timings are emitted only on request.

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace unisylow {

inline constexpr const char* kToolVersion = "0.1.0";

struct Check {
  std::string name;
  /// The statement being checked, in words.
  std::string anchor;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> fields;
  double seconds = 0;

  Check& set(const std::string& key, const std::string& value) {
    fields.emplace_back(key, value);
    return *this;
  }
  Check& set(const std::string& key, const char* value) { return set(key, std::string(value)); }
  Check& set(const std::string& key, std::uint64_t value) { return set(key, std::to_string(value)); }
  Check& set(const std::string& key, std::int64_t value) { return set(key, std::to_string(value)); }
  Check& set(const std::string& key, unsigned value) { return set(key, std::to_string(value)); }
  Check& set(const std::string& key, int value) { return set(key, std::to_string(value)); }
  Check& set(const std::string& key, bool value) { return set(key, std::string(value ? "true" : "false")); }
};

class Report {
 public:
  void config(const std::string& key, const std::string& value) { config_.emplace_back(key, value); }

  Check& add(std::string name, std::string anchor, bool pass) {
    checks_.push_back(Check{std::move(name), std::move(anchor), pass, {}, 0});
    return checks_.back();
  }

  /// Informational record: does not affect the verdict.
  Check& note(std::string name, std::string anchor) {
    Check& c = add(std::move(name), std::move(anchor), true);
    c.set("informational", true);
    return c;
  }

  const std::vector<Check>& checks() const { return checks_; }
  std::vector<Check>& checks() { return checks_; }

  bool pass() const {
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return true;
  }

  std::size_t failed() const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += !c.pass;
    return n;
  }

  std::string render(bool timing = false) const {
    std::ostringstream os;
    os << "[report]\n";
    os << "tool = unisylow " << kToolVersion << "\n";
    for (const auto& [k, v] : config_) os << k << " = " << v << "\n";
    for (const auto& c : checks_) {
      os << "\n[check]\n";
      os << "name = " << c.name << "\n";
      os << "anchor = " << c.anchor << "\n";
      os << "status = " << (c.pass ? "pass" : "fail") << "\n";
      for (const auto& [k, v] : c.fields) os << k << " = " << v << "\n";
      if (timing) os << "seconds = " << format_seconds(c.seconds) << "\n";
    }
    os << "\n[summary]\n";
    os << "checks = " << checks_.size() << "\n";
    os << "passed = " << checks_.size() - failed() << "\n";
    os << "failed = " << failed() << "\n";
    os << "verdict = " << (pass() ? "pass" : "fail") << "\n";
    return os.str();
  }

 private:
  static std::string format_seconds(double s) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << s;
    return os.str();
  }

  std::vector<std::pair<std::string, std::string>> config_;
  std::vector<Check> checks_;
};

}  // namespace unisylow
