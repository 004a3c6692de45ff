#pragma once

#include <string>
#include <utility>
#include <vector>

namespace idr {

struct Warning {
  std::string stage;
  std::string message;

  bool operator==(const Warning&) const = default;
};

// Append-only warning sink shared across pipeline stages. Each emitted
// warning surfaces exactly once in the run report.
class WarningLog {
 public:
  void add(std::string stage, std::string message) {
    items_.push_back({std::move(stage), std::move(message)});
  }

  void append(const WarningLog& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }

  const std::vector<Warning>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

 private:
  std::vector<Warning> items_;
};

}  // namespace idr
