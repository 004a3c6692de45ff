#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "idr/batch.hpp"
#include "idr/records_io.hpp"
#include "idr/synth.hpp"

using namespace idr;

namespace {

struct LoadedCorpus {
  std::vector<PublicationRecord> records;
  DisciplineCatalog catalog;
  AbbrevMap abbrev;
};

LoadedCorpus load(const SynthCorpus& corpus) {
  LoadedCorpus out;
  std::istringstream in(corpus.records_jsonl);
  out.records = parse_records(in).records;

  auto tmp = std::filesystem::temp_directory_path();
  {
    std::ofstream c(tmp / "idr_batch_catalog.csv");
    c << corpus.catalog_csv;
    std::ofstream a(tmp / "idr_batch_abbrev.csv");
    a << corpus.abbrev_csv;
  }
  out.catalog = load_catalog(tmp / "idr_batch_catalog.csv").catalog;
  out.abbrev = load_abbreviation_map(tmp / "idr_batch_abbrev.csv").map;
  return out;
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference exactly") {
  VariedCorpusOptions opts;
  opts.seed = 31;
  opts.papers = 400;
  auto corpus = load(make_varied_corpus(opts));
  REQUIRE(corpus.records.size() == 400);

  auto serial = assign_records_serial(corpus.records, corpus.catalog, corpus.abbrev);
  auto parallel =
      assign_records(corpus.records, corpus.catalog, corpus.abbrev, ExecMode::Parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].paper_id == parallel[i].paper_id);
    CHECK(serial[i].citing_disciplines == parallel[i].citing_disciplines);
    CHECK(serial[i].ref_disciplines == parallel[i].ref_disciplines);
    CHECK(serial[i].coverage == parallel[i].coverage);
  }

  auto counts_serial = cooccurrence_counts_serial(serial);
  auto counts_parallel = cooccurrence_counts_batch(serial, ExecMode::Parallel);
  CHECK(counts_serial == counts_parallel);

  auto disparity = disparity_matrix(counts_serial, "test");
  auto scores_serial = score_papers_serial(serial, disparity, TDMode::Canonical);
  auto scores_parallel = score_papers(serial, disparity, TDMode::Canonical, ExecMode::Parallel);
  REQUIRE(scores_serial.size() == scores_parallel.size());
  for (std::size_t i = 0; i < scores_serial.size(); ++i) {
    REQUIRE(scores_serial[i].has_value() == scores_parallel[i].has_value());
    if (scores_serial[i]) {
      CHECK(scores_serial[i]->variety == scores_parallel[i]->variety);
      CHECK(scores_serial[i]->balance == scores_parallel[i]->balance);  // bitwise
      CHECK(scores_serial[i]->true_diversity == scores_parallel[i]->true_diversity);
    }
  }
}

TEST_CASE("batch co-occurrence counts equal the graph-based accumulation") {
  VariedCorpusOptions opts;
  opts.seed = 9;
  opts.papers = 150;
  auto corpus = load(make_varied_corpus(opts));
  auto assignments = assign_records_serial(corpus.records, corpus.catalog, corpus.abbrev);

  auto batch = cooccurrence_counts_serial(assignments);
  auto via_graph = cooccurrence_counts(assignments);
  CHECK(batch == via_graph);
}

TEST_CASE("papers without identified disciplines score as nullopt") {
  DisciplineAssignment empty;
  empty.paper_id = "none";
  empty.ref_disciplines = {DisciplineSet{}, DisciplineSet{}};
  DisciplineAssignment one;
  one.paper_id = "one";
  DisciplineSet s;
  s.insert(Discipline::MEDI);
  one.ref_disciplines = {s};

  std::vector<DisciplineAssignment> papers = {empty, one};
  DisparityMatrix D;
  auto scores = score_papers_serial(papers, D, TDMode::Canonical);
  REQUIRE(scores.size() == 2);
  CHECK_FALSE(scores[0].has_value());
  REQUIRE(scores[1].has_value());
  CHECK(scores[1]->variety == 1);
  CHECK(scores[1]->true_diversity == 1.0);

  SUBCASE("paper-example mode leaves TD unset instead of failing the batch") {
    auto pe = score_papers_serial(papers, D, TDMode::PaperExample);
    REQUIRE(pe[1].has_value());
    CHECK(pe[1]->variety == 1);
    CHECK_FALSE(pe[1]->true_diversity.has_value());
  }
}
