#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sperner {

/// Outcome of an exhaustive sweep: how many instances were checked and which failed.
struct CheckReport {
  CheckReport() = default;
  CheckReport(std::string id_, std::string claim_) : id(std::move(id_)), claim(std::move(claim_)) {}

  std::string id;
  std::string claim;
  std::int64_t instances = 0;
  std::int64_t violation_count = 0;
  std::vector<std::string> violations;  // first kMaxListed, one tuple each
  std::vector<std::string> notes;       // findings that are logged, not asserted

  static constexpr std::size_t kMaxListed = 50;

  bool passed() const { return violation_count == 0; }

  void record(bool ok, const std::string &tuple) {
    ++instances;
    if (ok) return;
    ++violation_count;
    if (violations.size() < kMaxListed) violations.push_back(tuple);
  }

  void merge(const CheckReport &o) {
    instances += o.instances;
    violation_count += o.violation_count;
    for (const auto &v : o.violations)
      if (violations.size() < kMaxListed) violations.push_back(v);
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

}  // namespace sperner
