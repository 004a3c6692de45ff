#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "idr/discipline.hpp"
#include "idr/normalize.hpp"
#include "idr/record.hpp"
#include "idr/warnings.hpp"

namespace idr {

// Canonical journal title -> nonempty set of discipline codes.
class DisciplineCatalog {
 public:
  void add(const std::string& canonical_title, DisciplineSet codes);
  const DisciplineSet* find(const std::string& canonical_title) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, DisciplineSet> entries_;
};

struct CatalogLoadResult {
  DisciplineCatalog catalog;
  WarningLog warnings;
};

// Delimited file with columns journal_title, codes (semicolon-separated
// abbreviations); duplicate titles merge by set union.
CatalogLoadResult load_catalog(const std::filesystem::path& path, char delimiter = ',');

struct DisciplineAssignment {
  std::string paper_id;
  DisciplineSet citing_disciplines;  // empty = citing journal unidentified
  // One entry per reference, in reference order; empty set = unidentified.
  std::vector<DisciplineSet> ref_disciplines;
  double coverage = 0.0;  // identified references / total references
  bool reference_free = false;

  std::size_t identified_refs() const;
};

// Lookup order per title: normalize -> exact catalog hit, else abbreviation
// expansion -> catalog hit, else unidentified.
DisciplineAssignment assign(const PublicationRecord& record, const DisciplineCatalog& catalog,
                            const AbbrevMap& abbrev_map);

// Full counting: each identified reference adds 1 to every code in its set.
DisciplineVector discipline_vector(const DisciplineAssignment& assignment);

}  // namespace idr
