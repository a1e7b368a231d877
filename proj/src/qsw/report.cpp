#include "qsw/report.hpp"

#include <algorithm>

namespace qsw {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skip:
      return "skip";
  }
  return "unknown";
}

void Report::merge(Report other) {
  for (auto& r : other.records_) records_.push_back(std::move(r));
  for (auto& a : other.artifacts_) artifacts_.push_back(std::move(a));
}

void Report::sort() {
  std::stable_sort(records_.begin(), records_.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

const CheckRecord* Report::first_failure() const {
  for (const auto& r : records_)
    if (r.status == CheckStatus::Fail) return &r;
  return nullptr;
}

void check_true(Report& report, std::string id, nlohmann::json params, bool ok, std::string note) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.params = std::move(params);
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  rec.note = std::move(note);
  report.add(std::move(rec));
}

}  // namespace qsw
