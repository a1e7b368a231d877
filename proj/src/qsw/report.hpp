#pragma once

// Check records collected by the verification routines.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qsw {

enum class CheckStatus { Pass, Fail, Skip };

std::string status_name(CheckStatus s);

struct CheckRecord {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  CheckStatus status = CheckStatus::Pass;
  // Both sides rendered; filled on failure.
  std::string lhs;
  std::string rhs;
  std::string note;
  double wall_ms = 0.0;
};

class Report {
 public:
  void add(CheckRecord r) { records_.push_back(std::move(r)); }
  void merge(Report other);
  /// Records sorted by id; ties keep insertion order.
  void sort();

  const std::vector<CheckRecord>& records() const { return records_; }
  std::size_t count(CheckStatus s) const;
  bool passed() const { return count(CheckStatus::Fail) == 0; }
  const CheckRecord* first_failure() const;

  /// Structured payloads attached by a suite, e.g. commutant reports.
  nlohmann::json& artifacts() { return artifacts_; }
  const nlohmann::json& artifacts() const { return artifacts_; }

 private:
  std::vector<CheckRecord> records_;
  nlohmann::json artifacts_ = nlohmann::json::array();
};

/// Runs both sides, compares them, and records the outcome. Sides are only
/// rendered when they differ.
template <typename T, typename L, typename R>
void check_equal(Report& report, std::string id, nlohmann::json params, L&& lhs, R&& rhs) {
  const auto start = std::chrono::steady_clock::now();
  const T a = lhs();
  const T b = rhs();
  CheckRecord rec;
  rec.id = std::move(id);
  rec.params = std::move(params);
  if (!(a == b)) {
    rec.status = CheckStatus::Fail;
    rec.lhs = a.to_string();
    rec.rhs = b.to_string();
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.add(std::move(rec));
}

void check_true(Report& report, std::string id, nlohmann::json params, bool ok, std::string note = {});

}  // namespace qsw
