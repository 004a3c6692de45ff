#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace idr {

enum class DocType : std::uint8_t { Article, Review, Other };

// Case-insensitive match against "article" / "review"; anything else is Other.
DocType parse_doc_type(std::string_view raw);
std::string_view doc_type_name(DocType t);

struct ReferenceRecord {
  std::string ref_id;
  std::string journal_title;  // raw, possibly abbreviated, possibly empty
  std::optional<int> year;
  DocType doc_type = DocType::Article;

  bool operator==(const ReferenceRecord&) const = default;
};

struct PublicationRecord {
  std::string id;
  std::string title;
  std::string journal_title;
  int year = 0;
  std::optional<int> month;  // 1..12
  std::optional<int> day;    // 1..31
  DocType doc_type = DocType::Other;
  std::optional<std::string> abstract;
  std::vector<ReferenceRecord> references;

  bool operator==(const PublicationRecord&) const = default;
};

enum class Granularity : std::uint8_t { Year, Month };

struct Period {
  Granularity granularity = Granularity::Year;
  int year = 0;
  int month = 0;  // 1..12 when granularity == Month, else 0

  auto operator<=>(const Period&) const = default;

  // "1993" or "2020-04"
  std::string str() const;
};

Period year_period(int year);
Period month_period(int year, int month);

// Period of a (year, month) under the given granularity; nullopt when the
// month is required but absent and may not be assumed January.
std::optional<Period> derive_period(int year, std::optional<int> month, Granularity granularity,
                                    bool assign_january_when_missing);

}  // namespace idr
