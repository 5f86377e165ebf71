// Copyright 2026 The portview Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <concepts>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace portview {

/// Outcome of checking one property over a stated quantification.
struct ClaimRecord {
  static constexpr std::size_t kListedViolations = 20;

  std::string id;
  std::string quantification;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::string> violations;  // the first kListedViolations
  double elapsed_ms = 0;

  bool passed() const { return violation_count == 0; }

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) fail(what);
  }

  /// Lazy form for hot loops: `describe` runs only on failure.
  template <typename Describe>
    requires std::invocable<Describe>
  void expect(bool ok, Describe&& describe) {
    ++checked;
    if (!ok) fail(describe());
  }

  void fail(const std::string& what) {
    ++violation_count;
    if (violations.size() < kListedViolations) violations.push_back(what);
  }
};

/// Times a claim body and stamps the elapsed time on the record it returns.
template <typename Body>
ClaimRecord timed_claim(std::string id, std::string quantification, Body&& body) {
  ClaimRecord record;
  record.id = std::move(id);
  record.quantification = std::move(quantification);
  const auto start = std::chrono::steady_clock::now();
  body(record);
  record.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return record;
}

struct VerificationReport {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<ClaimRecord> claims;
  nlohmann::ordered_json measured = nlohmann::ordered_json::object();
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& c : claims) {
      if (!c.passed()) return false;
    }
    return true;
  }

  const ClaimRecord* find(const std::string& id) const {
    for (const auto& c : claims) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }

  /// Stable key order; elapsed times are the only run-dependent values and
  /// can be left out for reproducibility checks.
  std::string to_json(bool with_timing = true) const {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    doc["status"] = passed() ? "PASS" : "FAIL";
    doc["parameters"] = parameters;
    auto& list = doc["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : claims) {
      nlohmann::ordered_json item;
      item["id"] = c.id;
      item["status"] = c.passed() ? "PASS" : "FAIL";
      item["quantification"] = c.quantification;
      item["checked"] = c.checked;
      item["violation_count"] = c.violation_count;
      item["violations"] = c.violations;
      if (with_timing) item["elapsed_ms"] = c.elapsed_ms;
      list.push_back(std::move(item));
    }
    doc["measured"] = measured;
    doc["notes"] = notes;
    return doc.dump(2) + "\n";
  }

  std::string summary() const {
    std::ostringstream out;
    out << command << ": " << (passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : claims) {
      out << "  [" << (c.passed() ? "PASS" : "FAIL") << "] " << c.id << " (" << c.checked
          << " checked";
      if (!c.passed()) out << ", " << c.violation_count << " violations";
      out << ")\n";
      for (const auto& v : c.violations) out << "      " << v << "\n";
    }
    for (const auto& [key, value] : measured.items()) {
      out << "  " << key << " = " << value.dump() << "\n";
    }
    for (const auto& note : notes) out << "  note: " << note << "\n";
    return out.str();
  }
};

}  // namespace portview
