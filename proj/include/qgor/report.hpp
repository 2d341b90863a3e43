#pragma once

// Verification records: labelled steps with computed and expected values.

#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgor {

inline constexpr int kReportSchemaVersion = 1;

struct ReportStep {
  std::string label;
  std::string description;
  nlohmann::json value;
  std::optional<nlohmann::json> expected;

  bool asserted() const { return expected.has_value(); }
  bool passed() const { return !expected || *expected == value; }
};

struct Report {
  std::string command;
  std::string inputs_digest;
  bool experimental = false;
  std::vector<ReportStep> steps;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool passed() const {
    for (const ReportStep& s : steps) {
      if (!s.passed()) return false;
    }
    return true;
  }

  std::string status() const {
    if (experimental) return "experimental";
    return passed() ? "pass" : "fail";
  }

  void add(std::string label, std::string description, nlohmann::json value,
           std::optional<nlohmann::json> expected = std::nullopt) {
    steps.push_back({std::move(label), std::move(description), std::move(value), std::move(expected)});
  }

  const ReportStep* find(std::string_view label) const {
    for (const ReportStep& s : steps) {
      if (s.label == label) return &s;
    }
    return nullptr;
  }
};

/// Wall-clock stopwatch feeding Report::timings_ms.
class StepTimer {
 public:
  explicit StepTimer(Report& report) : report_(report), start_(Clock::now()) {}

  void lap(std::string label) {
    auto now = Clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    report_.timings_ms.emplace_back(std::move(label), ms);
    start_ = now;
  }

 private:
  using Clock = std::chrono::steady_clock;
  Report& report_;
  Clock::time_point start_;
};

/// 64-bit FNV-1a, hex encoded; identifies the exact input text of a run.
inline std::string digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline nlohmann::json steps_to_json(const Report& report) {
  nlohmann::json steps = nlohmann::json::array();
  for (const ReportStep& s : report.steps) {
    nlohmann::json j{{"label", s.label}, {"description", s.description}, {"value", s.value}};
    j["expected"] = s.expected ? *s.expected : nlohmann::json(nullptr);
    j["pass"] = s.asserted() ? nlohmann::json(s.passed()) : nlohmann::json(nullptr);
    steps.push_back(std::move(j));
  }
  return steps;
}

/// Timings vary between runs, so they are only serialized on request; the
/// field is always present to keep the schema fixed.
inline nlohmann::json timings_to_json(const Report& report, bool include) {
  nlohmann::json t = nlohmann::json::object();
  if (include) {
    for (const auto& [label, ms] : report.timings_ms) t[label] = ms;
  }
  return t;
}

/// One line per step: "[PASS] o9  mu(canonical module) = 9 (expected 9)".
inline std::string render_text(const Report& report, bool include_timings) {
  std::ostringstream os;
  os << report.command << " [" << report.status() << "]\n";
  for (const ReportStep& s : report.steps) {
    const char* tag = !s.asserted() ? "[ -- ]" : (s.passed() ? "[PASS]" : "[FAIL]");
    os << tag << " " << std::left << std::setw(8) << s.label << s.description << " = " << s.value.dump();
    if (s.expected) os << " (expected " << s.expected->dump() << ")";
    os << "\n";
  }
  if (include_timings) {
    for (const auto& [label, ms] : report.timings_ms) {
      os << "time " << label << ": " << std::fixed << std::setprecision(1) << ms << " ms\n";
    }
  }
  return os.str();
}

}  // namespace qgor
