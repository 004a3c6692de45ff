#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <vector>

#include "idr/record.hpp"
#include "idr/warnings.hpp"

namespace idr {

struct ParseOptions {
  int min_year = 1900;
  int max_year = 2100;
};

struct ParseResult {
  std::vector<PublicationRecord> records;
  WarningLog warnings;
  std::size_t lines_total = 0;    // nonempty input lines
  std::size_t lines_skipped = 0;  // malformed, duplicate or out-of-range
};

// One JSON record per line; malformed lines are reported and skipped,
// duplicate ids keep the first occurrence.
ParseResult parse_records(std::istream& in, const ParseOptions& opts = {});

// Canonical line-delimited form; parse(serialize(parse(x))) == parse(x).
void serialize_records(const std::vector<PublicationRecord>& records, std::ostream& out);

struct DocTypeFilter {
  std::set<DocType> allowed;
  bool filter_reference_types = true;
};

std::vector<PublicationRecord> filter_doc_types(const std::vector<PublicationRecord>& records,
                                                const DocTypeFilter& filter);

enum class MissingMonthPolicy { Exclude, AssignJanuary };

struct BucketOptions {
  Granularity granularity = Granularity::Year;
  MissingMonthPolicy missing_month = MissingMonthPolicy::Exclude;
  int min_year = 1900;
  int max_year = 2100;
};

struct BucketResult {
  // std::map keeps buckets in chronological key order.
  std::map<Period, std::vector<PublicationRecord>> buckets;
  WarningLog warnings;
  std::size_t excluded = 0;
};

BucketResult bucket_by_period(const std::vector<PublicationRecord>& records,
                              const BucketOptions& opts);

}  // namespace idr
