#include "doctest.h"

#include <fstream>
#include <sstream>

#include "idr/records_io.hpp"

using namespace idr;

namespace {

const char* kThreeLines =
    R"({"id":"a","title":"First","journal":"Cancer Cell","year":2019,"type":"Article","references":[]})"
    "\n"
    R"({"id":"b","title":"Second","journal":"PNAS","year":2020,"month":4,"type":"Review","references":[{"ref_id":"r1","journal":"Cancer Cell","year":2018,"type":"article"}]})"
    "\n"
    R"({"id":"c","title":"Third","journal":"Lancet","year":2020,"type":"Letter","references":[]})"
    "\n";

ParseResult parse_string(const std::string& text, ParseOptions opts = {}) {
  std::istringstream in(text);
  return parse_records(in, opts);
}

}  // namespace

TEST_CASE("empty stream parses to empty list without warnings") {
  auto result = parse_string("");
  CHECK(result.records.empty());
  CHECK(result.warnings.empty());
  CHECK(result.lines_total == 0);
}

TEST_CASE("an unreadable stream is fatal") {
  std::ifstream missing("/nonexistent/records.jsonl");
  CHECK_THROWS(parse_records(missing));
}

TEST_CASE("well-formed lines parse in input order") {
  auto result = parse_string(kThreeLines);
  REQUIRE(result.records.size() == 3);
  CHECK(result.records[0].id == "a");
  CHECK(result.records[1].id == "b");
  CHECK(result.records[2].id == "c");
  CHECK(result.records[1].month == 4);
  CHECK(result.records[1].references.size() == 1);
  CHECK(result.records[2].doc_type == DocType::Other);  // "Letter"
  CHECK(result.warnings.empty());
}

TEST_CASE("truncated line is reported with its line number and skipped") {
  std::string text = kThreeLines;
  text.insert(text.find("\n{\"id\":\"c\"") + 1, "{\"id\":\"broken\",\"ti\n");
  auto result = parse_string(text);
  CHECK(result.records.size() == 3);
  CHECK(result.lines_skipped == 1);
  REQUIRE(result.warnings.size() == 1);
  CHECK(result.warnings.items()[0].message.find("line 3") != std::string::npos);
}

TEST_CASE("duplicate id keeps the first record") {
  std::string text =
      R"({"id":"a","title":"One","journal":"X","year":2019,"type":"Article"})" "\n"
      R"({"id":"a","title":"Two","journal":"Y","year":2020,"type":"Article"})" "\n";
  auto result = parse_string(text);
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0].title == "One");
  REQUIRE(result.warnings.size() == 1);
  CHECK(result.warnings.items()[0].message.find("duplicate id") != std::string::npos);
}

TEST_CASE("year outside the configured range is skipped with a warning") {
  std::string text = R"({"id":"a","title":"T","journal":"X","year":1542,"type":"Article"})" "\n";
  auto result = parse_string(text);
  CHECK(result.records.empty());
  CHECK(result.lines_skipped == 1);
}

TEST_CASE("parsed plus skipped equals nonempty input lines") {
  std::string text = kThreeLines;
  text += "not json\n\n   \n";
  text += R"({"id":"x","year":"nope"})" "\n";
  auto result = parse_string(text);
  CHECK(result.records.size() + result.lines_skipped == result.lines_total);
  CHECK(result.lines_total == 5);  // blanks don't count
}

TEST_CASE("parse-serialize-parse is a fixed point") {
  auto first = parse_string(kThreeLines);
  std::ostringstream out;
  serialize_records(first.records, out);
  auto second = parse_string(out.str());
  CHECK(second.records == first.records);

  std::ostringstream out2;
  serialize_records(second.records, out2);
  CHECK(out2.str() == out.str());
}

TEST_CASE("doc type matching is case-insensitive") {
  CHECK(parse_doc_type("ARTICLE") == DocType::Article);
  CHECK(parse_doc_type("Review") == DocType::Review);
  CHECK(parse_doc_type("preprint") == DocType::Other);
  CHECK(parse_doc_type("") == DocType::Other);
}

TEST_CASE("filter_doc_types keeps exactly the allowed types") {
  auto records = parse_string(kThreeLines).records;
  auto filtered = filter_doc_types(records, {{DocType::Article, DocType::Review}, true});
  REQUIRE(filtered.size() == 2);
  CHECK(filtered[0].id == "a");
  CHECK(filtered[1].id == "b");

  SUBCASE("allowing every type is the identity") {
    auto all =
        filter_doc_types(records, {{DocType::Article, DocType::Review, DocType::Other}, true});
    CHECK(all == records);
  }
  SUBCASE("no allowed records yields the empty list") {
    auto none = filter_doc_types(records, {{DocType::Other}, false});
    REQUIRE(none.size() == 1);
    CHECK(none[0].id == "c");
  }
  SUBCASE("idempotence") {
    CHECK(filter_doc_types(filtered, {{DocType::Article, DocType::Review}, true}) == filtered);
  }
}

TEST_CASE("reference type filter trims references of surviving records") {
  std::string text =
      R"({"id":"a","title":"T","journal":"X","year":2019,"type":"Article","references":[)"
      R"({"ref_id":"r1","journal":"A","type":"article"},)"
      R"({"ref_id":"r2","journal":"B","type":"editorial"},)"
      R"({"ref_id":"r3","journal":"C"}]})" "\n";
  auto records = parse_string(text).records;
  auto on = filter_doc_types(records, {{DocType::Article, DocType::Review}, true});
  REQUIRE(on.size() == 1);
  CHECK(on[0].references.size() == 2);  // untyped r3 defaults to article and stays

  auto off = filter_doc_types(records, {{DocType::Article, DocType::Review}, false});
  CHECK(off[0].references.size() == 3);
}

TEST_CASE("bucket_by_period groups by year") {
  auto mk = [](std::string id, int year, std::optional<int> month) {
    PublicationRecord r;
    r.id = std::move(id);
    r.year = year;
    r.month = month;
    r.doc_type = DocType::Article;
    return r;
  };
  std::vector<PublicationRecord> records = {mk("a", 1990, {}), mk("b", 1990, {}),
                                            mk("c", 1991, {})};
  auto result = bucket_by_period(records, {Granularity::Year});
  REQUIRE(result.buckets.size() == 2);
  CHECK(result.buckets.at(year_period(1990)).size() == 2);
  CHECK(result.buckets.at(year_period(1991)).size() == 1);

  SUBCASE("buckets partition the retained input") {
    std::size_t total = 0;
    for (const auto& [p, recs] : result.buckets) total += recs.size();
    CHECK(total + result.excluded == records.size());
  }

  SUBCASE("monthly singleton") {
    auto monthly = bucket_by_period({mk("d", 2020, 4)}, {Granularity::Month});
    REQUIRE(monthly.buckets.size() == 1);
    CHECK(monthly.buckets.begin()->first == month_period(2020, 4));
  }

  SUBCASE("missing month excluded by default, assigned under january policy") {
    auto excluded = bucket_by_period({mk("e", 2020, {})}, {Granularity::Month});
    CHECK(excluded.buckets.empty());
    CHECK(excluded.excluded == 1);
    CHECK(excluded.warnings.size() == 1);

    auto january = bucket_by_period({mk("e", 2020, {})},
                                    {Granularity::Month, MissingMonthPolicy::AssignJanuary});
    REQUIRE(january.buckets.size() == 1);
    CHECK(january.buckets.begin()->first == month_period(2020, 1));
  }

  SUBCASE("out-of-range year excluded with warning") {
    auto narrow = bucket_by_period(
        records, {Granularity::Year, MissingMonthPolicy::Exclude, 1991, 2100});
    CHECK(narrow.buckets.size() == 1);
    CHECK(narrow.excluded == 2);
  }
}

TEST_CASE("filter commutes with bucketing") {
  auto records = parse_string(kThreeLines).records;
  DocTypeFilter filter{{DocType::Article, DocType::Review}, true};
  BucketOptions opts{Granularity::Year};

  auto filtered_first = bucket_by_period(filter_doc_types(records, filter), opts);
  auto bucketed_first = bucket_by_period(records, opts);
  std::map<Period, std::vector<PublicationRecord>> then_filtered;
  for (const auto& [p, recs] : bucketed_first.buckets) {
    auto f = filter_doc_types(recs, filter);
    if (!f.empty()) then_filtered[p] = f;
  }
  CHECK(filtered_first.buckets == then_filtered);
}
