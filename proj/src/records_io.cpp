#include "idr/records_io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace idr {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

bool blank(const std::string& line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::string require_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw std::runtime_error(std::string("missing or non-string field '") + key + "'");
  }
  return it->get<std::string>();
}

std::string optional_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_string()) throw std::runtime_error(std::string("non-string field '") + key + "'");
  return it->get<std::string>();
}

std::optional<int> optional_int(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) {
    throw std::runtime_error(std::string("non-integer field '") + key + "'");
  }
  return it->get<int>();
}

PublicationRecord record_from_json(const json& j, const ParseOptions& opts) {
  if (!j.is_object()) throw std::runtime_error("record is not an object");
  PublicationRecord rec;
  rec.id = require_string(j, "id");
  if (rec.id.empty()) throw std::runtime_error("empty id");
  rec.title = optional_string(j, "title");
  rec.journal_title = optional_string(j, "journal");

  auto year = optional_int(j, "year");
  if (!year) throw std::runtime_error("missing field 'year'");
  rec.year = *year;
  if (rec.year < opts.min_year || rec.year > opts.max_year) {
    throw std::runtime_error("year " + std::to_string(rec.year) + " outside configured range");
  }

  rec.month = optional_int(j, "month");
  if (rec.month && (*rec.month < 1 || *rec.month > 12)) {
    throw std::runtime_error("month " + std::to_string(*rec.month) + " out of range");
  }
  rec.day = optional_int(j, "day");
  if (rec.day && (*rec.day < 1 || *rec.day > 31)) {
    throw std::runtime_error("day " + std::to_string(*rec.day) + " out of range");
  }

  rec.doc_type = parse_doc_type(optional_string(j, "type"));

  auto ab = j.find("abstract");
  if (ab != j.end() && ab->is_string()) rec.abstract = ab->get<std::string>();

  auto refs = j.find("references");
  if (refs != j.end() && !refs->is_null()) {
    if (!refs->is_array()) throw std::runtime_error("'references' is not an array");
    rec.references.reserve(refs->size());
    for (const auto& r : *refs) {
      if (!r.is_object()) throw std::runtime_error("reference entry is not an object");
      ReferenceRecord ref;
      ref.ref_id = optional_string(r, "ref_id");
      ref.journal_title = optional_string(r, "journal");
      ref.year = optional_int(r, "year");
      // Untyped references default to article so the type restriction does
      // not silently drop them.
      auto type = optional_string(r, "type");
      ref.doc_type = type.empty() ? DocType::Article : parse_doc_type(type);
      rec.references.push_back(std::move(ref));
    }
  }
  return rec;
}

ordered_json record_to_json(const PublicationRecord& rec) {
  ordered_json j;
  j["id"] = rec.id;
  j["title"] = rec.title;
  j["journal"] = rec.journal_title;
  j["year"] = rec.year;
  if (rec.month) j["month"] = *rec.month;
  if (rec.day) j["day"] = *rec.day;
  j["type"] = doc_type_name(rec.doc_type);
  if (rec.abstract) j["abstract"] = *rec.abstract;
  auto refs = ordered_json::array();
  for (const auto& r : rec.references) {
    ordered_json rj;
    rj["ref_id"] = r.ref_id;
    rj["journal"] = r.journal_title;
    if (r.year) rj["year"] = *r.year;
    rj["type"] = doc_type_name(r.doc_type);
    refs.push_back(std::move(rj));
  }
  j["references"] = std::move(refs);
  return j;
}

}  // namespace

ParseResult parse_records(std::istream& in, const ParseOptions& opts) {
  if (!in.good()) throw std::runtime_error("record stream is not readable");

  ParseResult result;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    ++result.lines_total;
    try {
      json j = json::parse(line);
      PublicationRecord rec = record_from_json(j, opts);
      if (!seen_ids.insert(rec.id).second) {
        ++result.lines_skipped;
        result.warnings.add("parse", "line " + std::to_string(line_no) + ": duplicate id '" +
                                         rec.id + "', record skipped");
        continue;
      }
      result.records.push_back(std::move(rec));
    } catch (const std::exception& e) {
      ++result.lines_skipped;
      result.warnings.add("parse", "line " + std::to_string(line_no) +
                                       ": malformed record skipped (" + e.what() + ")");
    }
  }
  if (in.bad()) throw std::runtime_error("error while reading record stream");
  return result;
}

void serialize_records(const std::vector<PublicationRecord>& records, std::ostream& out) {
  for (const auto& rec : records) {
    out << record_to_json(rec).dump() << '\n';
  }
}

std::vector<PublicationRecord> filter_doc_types(const std::vector<PublicationRecord>& records,
                                                const DocTypeFilter& filter) {
  if (filter.allowed.empty()) throw std::invalid_argument("allowed doc-type set is empty");
  std::vector<PublicationRecord> out;
  out.reserve(records.size());
  for (const auto& rec : records) {
    if (!filter.allowed.contains(rec.doc_type)) continue;
    out.push_back(rec);
    if (filter.filter_reference_types) {
      auto& refs = out.back().references;
      std::erase_if(refs, [&](const ReferenceRecord& r) {
        return !filter.allowed.contains(r.doc_type);
      });
    }
  }
  return out;
}

BucketResult bucket_by_period(const std::vector<PublicationRecord>& records,
                              const BucketOptions& opts) {
  BucketResult result;
  for (const auto& rec : records) {
    if (rec.year < opts.min_year || rec.year > opts.max_year) {
      ++result.excluded;
      result.warnings.add("bucket", "record '" + rec.id + "': year " + std::to_string(rec.year) +
                                        " outside configured range, excluded");
      continue;
    }
    auto p = derive_period(rec.year, rec.month, opts.granularity,
                           opts.missing_month == MissingMonthPolicy::AssignJanuary);
    if (!p) {
      ++result.excluded;
      result.warnings.add("bucket", "record '" + rec.id +
                                        "': no month under month granularity, excluded");
      continue;
    }
    result.buckets[*p].push_back(rec);
  }
  return result;
}

}  // namespace idr
