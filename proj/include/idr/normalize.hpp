#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>

#include "idr/warnings.hpp"

namespace idr {

// Canonical journal-title key: lowercase, strip set {. , ; : ( ) [ ] &} and
// hyphens replaced by spaces, whitespace collapsed, trimmed. Lowercasing
// covers ASCII plus the Latin-1 / Latin Extended-A ranges; other code points
// pass through unchanged. Idempotent.
std::string normalize_title(std::string_view raw);

// abbreviation key -> full-name key, both canonical; single-step expansion.
class AbbrevMap {
 public:
  // Returns false when the entry was dropped (self-map) or rejected
  // (duplicate key); both sides must already be canonical.
  bool insert(const std::string& abbrev, const std::string& full);

  const std::string& expand(const std::string& title) const;

  std::size_t size() const { return entries_.size(); }
  bool contains(const std::string& abbrev) const { return entries_.contains(abbrev); }

 private:
  std::unordered_map<std::string, std::string> entries_;
};

struct AbbrevLoadResult {
  AbbrevMap map;
  WarningLog warnings;
};

// Two-column delimited file (abbrev, full_name) with a mandatory header row.
AbbrevLoadResult load_abbreviation_map(const std::filesystem::path& path, char delimiter = ',');

}  // namespace idr
