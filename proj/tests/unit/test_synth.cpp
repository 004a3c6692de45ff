#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "idr/batch.hpp"
#include "idr/records_io.hpp"
#include "idr/synth.hpp"

using namespace idr;

TEST_CASE("generators are deterministic for a fixed seed") {
  VariedCorpusOptions opts;
  opts.seed = 42;
  opts.papers = 60;
  auto first = make_varied_corpus(opts);
  auto second = make_varied_corpus(opts);
  CHECK(first.records_jsonl == second.records_jsonl);
  CHECK(first.catalog_csv == second.catalog_csv);
  CHECK(first.abbrev_csv == second.abbrev_csv);

  opts.seed = 43;
  CHECK(make_varied_corpus(opts).records_jsonl != first.records_jsonl);
}

TEST_CASE("varied corpus parses cleanly and exercises the filters") {
  VariedCorpusOptions opts;
  opts.seed = 42;
  opts.papers = 200;
  auto corpus = make_varied_corpus(opts);
  std::istringstream in(corpus.records_jsonl);
  auto parsed = parse_records(in);
  CHECK(parsed.records.size() == 200);
  CHECK(parsed.warnings.empty());

  std::size_t articles = 0, others = 0, with_month = 0;
  for (const auto& r : parsed.records) {
    if (r.doc_type == DocType::Article) ++articles;
    if (r.doc_type == DocType::Other) ++others;
    if (r.month) ++with_month;
  }
  CHECK(articles > 100);
  CHECK(others > 0);  // the type filter has something to reject
  CHECK(with_month == parsed.records.size());
}

TEST_CASE("planted spread corpus carries its trend through discipline assignment") {
  PlantedTrendOptions opts;
  opts.seed = 5;
  opts.periods = 5;
  opts.papers_per_period = 10;
  auto corpus = make_planted_trend_corpus(opts);

  std::istringstream in(corpus.records_jsonl);
  auto parsed = parse_records(in);
  CHECK(parsed.records.size() == 50);

  auto tmp = std::filesystem::temp_directory_path();
  {
    std::ofstream c(tmp / "idr_synth_catalog.csv");
    c << corpus.catalog_csv;
    std::ofstream a(tmp / "idr_synth_abbrev.csv");
    a << corpus.abbrev_csv;
  }
  auto catalog = load_catalog(tmp / "idr_synth_catalog.csv").catalog;
  auto abbrev = load_abbreviation_map(tmp / "idr_synth_abbrev.csv").map;

  // Every paper of period t cites exactly base + t distinct disciplines.
  std::map<int, std::set<std::size_t>> varieties_by_year;
  for (const auto& r : parsed.records) {
    auto v = discipline_vector(assign(r, catalog, abbrev));
    varieties_by_year[r.year].insert(v.nonzero_count());
  }
  CHECK(varieties_by_year.size() == 5);
  std::size_t expected = opts.base_disciplines;
  for (const auto& [year, varieties] : varieties_by_year) {
    REQUIRE(varieties.size() == 1);
    CHECK(*varieties.begin() == expected);
    ++expected;
  }
}
