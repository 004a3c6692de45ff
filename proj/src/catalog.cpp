#include "idr/catalog.hpp"

#include "csv.hpp"

namespace idr {

void DisciplineCatalog::add(const std::string& canonical_title, DisciplineSet codes) {
  if (codes.empty()) return;
  auto [it, inserted] = entries_.emplace(canonical_title, codes);
  if (!inserted) {
    codes.for_each([&](Discipline d) { it->second.insert(d); });
  }
}

const DisciplineSet* DisciplineCatalog::find(const std::string& canonical_title) const {
  auto it = entries_.find(canonical_title);
  return it == entries_.end() ? nullptr : &it->second;
}

CatalogLoadResult load_catalog(const std::filesystem::path& path, char delimiter) {
  auto in = detail::open_table(path);
  CatalogLoadResult result;

  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("catalog is empty (header row required): " + path.string());
  }

  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    auto fields = detail::split_delimited(line, delimiter);
    if (fields.size() != 2) {
      result.warnings.add("catalog", "row " + std::to_string(row) + ": expected 2 columns, got " +
                                         std::to_string(fields.size()) + ", skipped");
      continue;
    }
    std::string title = normalize_title(fields[0]);
    if (title.empty()) {
      result.warnings.add("catalog",
                          "row " + std::to_string(row) + ": empty journal title, skipped");
      continue;
    }

    DisciplineSet codes;
    std::size_t start = 0;
    const std::string& spec_field = fields[1];
    while (start <= spec_field.size()) {
      std::size_t end = spec_field.find(';', start);
      if (end == std::string::npos) end = spec_field.size();
      std::string code = spec_field.substr(start, end - start);
      // trim surrounding spaces
      while (!code.empty() && code.front() == ' ') code.erase(code.begin());
      while (!code.empty() && code.back() == ' ') code.pop_back();
      if (!code.empty()) {
        if (auto d = parse_discipline(code)) {
          codes.insert(*d);
        } else {
          result.warnings.add("catalog", "row " + std::to_string(row) + ": unknown code '" +
                                             code + "' dropped");
        }
      }
      start = end + 1;
    }

    if (codes.empty()) {
      result.warnings.add("catalog",
                          "row " + std::to_string(row) + ": no valid codes, row skipped");
      continue;
    }
    result.catalog.add(title, codes);
  }
  return result;
}

std::size_t DisciplineAssignment::identified_refs() const {
  std::size_t n = 0;
  for (const auto& s : ref_disciplines) {
    if (!s.empty()) ++n;
  }
  return n;
}

namespace {

DisciplineSet lookup(const std::string& raw_title, const DisciplineCatalog& catalog,
                     const AbbrevMap& abbrev_map) {
  std::string key = normalize_title(raw_title);
  if (key.empty()) return {};
  if (const DisciplineSet* hit = catalog.find(key)) return *hit;
  const std::string& expanded = abbrev_map.expand(key);
  if (expanded != key) {
    if (const DisciplineSet* hit = catalog.find(expanded)) return *hit;
  }
  return {};
}

}  // namespace

DisciplineAssignment assign(const PublicationRecord& record, const DisciplineCatalog& catalog,
                            const AbbrevMap& abbrev_map) {
  DisciplineAssignment a;
  a.paper_id = record.id;
  a.citing_disciplines = lookup(record.journal_title, catalog, abbrev_map);
  a.ref_disciplines.reserve(record.references.size());
  std::size_t identified = 0;
  for (const auto& ref : record.references) {
    DisciplineSet s = lookup(ref.journal_title, catalog, abbrev_map);
    if (!s.empty()) ++identified;
    a.ref_disciplines.push_back(s);
  }
  if (record.references.empty()) {
    a.coverage = 0.0;
    a.reference_free = true;
  } else {
    a.coverage = static_cast<double>(identified) / static_cast<double>(record.references.size());
  }
  return a;
}

DisciplineVector discipline_vector(const DisciplineAssignment& assignment) {
  DisciplineVector v;
  for (const auto& s : assignment.ref_disciplines) {
    s.for_each([&](Discipline d) { ++v[d]; });
  }
  return v;
}

}  // namespace idr
