#include "doctest.h"

#include <set>
#include <sstream>

#include "idr/qualify.hpp"
#include "idr/rng.hpp"

using namespace idr;

namespace {

struct Fixture {
  std::vector<PublicationRecord> records;
  std::vector<DisciplineAssignment> assignments;

  void add(std::string id, DocType type, std::size_t refs, double coverage) {
    PublicationRecord r;
    r.id = id;
    r.year = 2020;
    r.doc_type = type;
    r.references.resize(refs);
    records.push_back(std::move(r));

    DisciplineAssignment a;
    a.paper_id = id;
    a.citing_disciplines.insert(Discipline::MEDI);
    a.ref_disciplines.resize(refs);
    std::size_t identified = static_cast<std::size_t>(coverage * static_cast<double>(refs) + 0.5);
    for (std::size_t i = 0; i < identified && i < refs; ++i) {
      a.ref_disciplines[i].insert(Discipline::MEDI);
    }
    a.coverage = refs == 0 ? 0.0 : static_cast<double>(identified) / static_cast<double>(refs);
    a.reference_free = refs == 0;
    assignments.push_back(std::move(a));
  }

  std::vector<ScoredRecord> inputs() const {
    std::vector<ScoredRecord> out;
    for (std::size_t i = 0; i < records.size(); ++i) {
      out.push_back({&records[i], &assignments[i]});
    }
    return out;
  }
};

}  // namespace

TEST_CASE("qualification thresholds and first-failing-reason order") {
  Fixture f;
  f.add("few-refs", DocType::Article, 4, 1.0);
  f.add("low-coverage", DocType::Article, 10, 0.7);
  f.add("good", DocType::Article, 10, 0.9);
  f.add("wrong-type-and-few-refs", DocType::Other, 2, 0.0);
  f.add("exactly-80", DocType::Review, 5, 0.8);

  auto result = qualify(f.inputs(), QualificationPolicy{});
  REQUIRE(result.qualified.size() == 2);
  CHECK(result.qualified[0].record->id == "good");
  CHECK(result.qualified[1].record->id == "exactly-80");

  REQUIRE(result.rejected.size() == 3);
  CHECK(result.rejected[0].id == "few-refs");
  CHECK(result.rejected[0].reason == RejectReason::RefCount);
  CHECK(result.rejected[1].id == "low-coverage");
  CHECK(result.rejected[1].reason == RejectReason::Coverage);
  // type precedes ref-count in the fixed reason order
  CHECK(result.rejected[2].id == "wrong-type-and-few-refs");
  CHECK(result.rejected[2].reason == RejectReason::Type);

  SUBCASE("qualify is idempotent") {
    std::vector<ScoredRecord> again = result.qualified;
    auto second = qualify(again, QualificationPolicy{});
    CHECK(second.qualified.size() == result.qualified.size());
    CHECK(second.rejected.empty());
  }

  SUBCASE("partition: qualified plus rejected equals input") {
    CHECK(result.qualified.size() + result.rejected.size() == f.records.size());
  }
}

TEST_CASE("raising thresholds never grows the qualified set") {
  SplitMix64 rng(17);
  Fixture f;
  for (int i = 0; i < 200; ++i) {
    DocType type = rng.real() < 0.8 ? DocType::Article : DocType::Other;
    std::size_t refs = rng.below(15);
    double coverage = rng.real();
    f.add("r" + std::to_string(i), type, refs, coverage);
  }
  auto inputs = f.inputs();

  std::size_t previous = inputs.size() + 1;
  for (std::size_t min_refs : {1u, 3u, 5u, 7u, 9u}) {
    QualificationPolicy p;
    p.min_references = min_refs;
    p.min_coverage = 0.5;
    auto r = qualify(inputs, p);
    CHECK(r.qualified.size() <= previous);
    previous = r.qualified.size();
  }

  previous = inputs.size() + 1;
  for (double min_cov : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    QualificationPolicy p;
    p.min_coverage = min_cov;
    auto r = qualify(inputs, p);
    CHECK(r.qualified.size() <= previous);
    previous = r.qualified.size();
  }
}

TEST_CASE("keyword subsetting is case-insensitive substring matching") {
  PublicationRecord covid;
  covid.id = "a";
  covid.title = "COVID-19 drug repurposing";
  PublicationRecord mers;
  mers.id = "b";
  mers.title = "MERS serology";
  PublicationRecord lower;
  lower.id = "c";
  lower.title = "Viral dynamics";
  lower.abstract = "We study 2019-ncov spread.";

  std::vector<PublicationRecord> records = {covid, mers, lower};

  auto only_covid = keyword_subset(records, {"COVID"});
  REQUIRE(only_covid.size() == 1);
  CHECK(only_covid[0].id == "a");

  auto none_for_mers = keyword_subset({mers}, {"COVID", "2019-nCoV"});
  CHECK(none_for_mers.empty());

  auto via_abstract = keyword_subset(records, {"2019-nCoV"});
  REQUIRE(via_abstract.size() == 1);
  CHECK(via_abstract[0].id == "c");

  SUBCASE("union of term sets equals union of subsets") {
    // "i" occurs in all three titles, so the unions genuinely overlap.
    auto collect = [&](const std::vector<std::string>& terms) {
      std::set<std::string> ids;
      for (const auto& r : keyword_subset(records, terms)) ids.insert(r.id);
      return ids;
    };
    auto combined = collect({"COVID", "i"});
    auto first = collect({"COVID"});
    auto second = collect({"i"});
    std::set<std::string> unioned = first;
    unioned.insert(second.begin(), second.end());
    CHECK(combined == unioned);
  }
}

TEST_CASE("corpus stats count stages and enforce the subset chain") {
  std::vector<StageInput> stages;
  StageInput raw{"raw", {}};
  for (int i = 0; i < 10; ++i) raw.records.emplace_back("r" + std::to_string(i), 5);
  StageInput ident{"identifiable", {}};
  for (int i = 0; i < 6; ++i) ident.records.emplace_back("r" + std::to_string(i), 5);
  StageInput qual{"qualified", {}};
  for (int i = 0; i < 4; ++i) qual.records.emplace_back("r" + std::to_string(i), 5);
  stages = {raw, ident, qual};

  auto stats = corpus_stats(stages);
  REQUIRE(stats.stages.size() == 3);
  CHECK(stats.stages[0].papers == 10);
  CHECK(stats.stages[1].papers == 6);
  CHECK(stats.stages[2].papers == 4);
  CHECK(stats.stages[0].references == 50);
  CHECK(stats.stages[2].references == 20);

  std::ostringstream out;
  write_corpus_stats(stats, out);
  CHECK(out.str() ==
        "stage,papers,references\nraw,10,50\nidentifiable,6,30\nqualified,4,20\n");

  SUBCASE("identical stages give identical counts") {
    auto same = corpus_stats({raw, raw, raw});
    for (const auto& s : same.stages) {
      CHECK(s.papers == 10);
      CHECK(s.references == 50);
    }
  }

  SUBCASE("empty corpus gives zero rows") {
    auto empty = corpus_stats({{"raw", {}}, {"identifiable", {}}});
    CHECK(empty.stages[0].papers == 0);
    CHECK(empty.stages[1].references == 0);
  }

  SUBCASE("non-subset stages are a fatal consistency error") {
    StageInput bogus{"bogus", {{"not-in-raw", 1}}};
    CHECK_THROWS(corpus_stats({raw, bogus}));
  }
}
