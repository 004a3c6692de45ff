#include "idr/record.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace idr {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

}  // namespace

DocType parse_doc_type(std::string_view raw) {
  if (iequals(raw, "article")) return DocType::Article;
  if (iequals(raw, "review")) return DocType::Review;
  return DocType::Other;
}

std::string_view doc_type_name(DocType t) {
  switch (t) {
    case DocType::Article: return "article";
    case DocType::Review: return "review";
    case DocType::Other: return "other";
  }
  return "other";
}

std::string Period::str() const {
  char buf[16];
  if (granularity == Granularity::Month) {
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
  } else {
    std::snprintf(buf, sizeof(buf), "%04d", year);
  }
  return buf;
}

Period year_period(int year) { return Period{Granularity::Year, year, 0}; }

Period month_period(int year, int month) {
  if (month < 1 || month > 12) throw std::invalid_argument("month out of range");
  return Period{Granularity::Month, year, month};
}

std::optional<Period> derive_period(int year, std::optional<int> month, Granularity granularity,
                                    bool assign_january_when_missing) {
  if (granularity == Granularity::Year) return year_period(year);
  if (month) return month_period(year, *month);
  if (assign_january_when_missing) return month_period(year, 1);
  return std::nullopt;
}

}  // namespace idr
