// Serial vs OpenMP lanes on a synthetic corpus. Each kernel's parallel
// result is checked against the serial reference before timing is reported.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "idr/batch.hpp"
#include "idr/records_io.hpp"
#include "idr/synth.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto start = Clock::now();
    fn();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-22s serial %8.4fs   parallel %8.4fs   speedup %5.2fx   results %s\n", name,
              serial, parallel, serial / parallel, equal ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t papers = 20000;
  int reps = 3;
  if (argc > 1) papers = std::stoul(argv[1]);
  if (argc > 2) reps = std::stoi(argv[2]);

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel lane falls back to serial\n");
#endif
  std::printf("corpus: %zu papers, best of %d runs\n\n", papers, reps);

  idr::VariedCorpusOptions opts;
  opts.seed = 7;
  opts.papers = papers;
  idr::SynthCorpus corpus = idr::make_varied_corpus(opts);

  std::istringstream records_in(corpus.records_jsonl);
  auto parsed = idr::parse_records(records_in);

  // Loaders work on paths; write to temp files.
  auto tmp = std::filesystem::temp_directory_path() / "idr-bench";
  std::filesystem::create_directories(tmp);
  {
    std::ofstream c(tmp / "catalog.csv");
    c << corpus.catalog_csv;
    std::ofstream a(tmp / "abbrev.csv");
    a << corpus.abbrev_csv;
  }
  auto catalog = idr::load_catalog(tmp / "catalog.csv");
  auto abbrev = idr::load_abbreviation_map(tmp / "abbrev.csv");

  // assign
  std::vector<idr::DisciplineAssignment> assignments;
  double serial = time_best_of(reps, [&] {
    assignments = idr::assign_records_serial(parsed.records, catalog.catalog, abbrev.map);
  });
  std::vector<idr::DisciplineAssignment> assignments_par;
  double parallel = time_best_of(reps, [&] {
    assignments_par = idr::assign_records(parsed.records, catalog.catalog, abbrev.map,
                                          idr::ExecMode::Parallel);
  });
  bool equal = assignments.size() == assignments_par.size();
  for (std::size_t i = 0; equal && i < assignments.size(); ++i) {
    equal = assignments[i].citing_disciplines == assignments_par[i].citing_disciplines &&
            assignments[i].ref_disciplines == assignments_par[i].ref_disciplines &&
            assignments[i].coverage == assignments_par[i].coverage;
  }
  report("assign_records", serial, parallel, equal);

  // co-occurrence counts
  idr::CooccurrenceCounts counts{}, counts_par{};
  serial = time_best_of(reps, [&] { counts = idr::cooccurrence_counts_serial(assignments); });
  parallel = time_best_of(
      reps, [&] { counts_par = idr::cooccurrence_counts_batch(assignments, idr::ExecMode::Parallel); });
  report("cooccurrence_counts", serial, parallel, counts == counts_par);

  // scoring
  auto disparity = idr::disparity_matrix(counts);
  std::vector<std::optional<idr::PaperScores>> scores, scores_par;
  serial = time_best_of(
      reps, [&] { scores = idr::score_papers_serial(assignments, disparity, idr::TDMode::Canonical); });
  parallel = time_best_of(reps, [&] {
    scores_par =
        idr::score_papers(assignments, disparity, idr::TDMode::Canonical, idr::ExecMode::Parallel);
  });
  equal = scores.size() == scores_par.size();
  for (std::size_t i = 0; equal && i < scores.size(); ++i) {
    equal = scores[i].has_value() == scores_par[i].has_value() &&
            (!scores[i] || (scores[i]->variety == scores_par[i]->variety &&
                            scores[i]->balance == scores_par[i]->balance &&
                            scores[i]->true_diversity == scores_par[i]->true_diversity));
  }
  report("score_papers", serial, parallel, equal);

  return 0;
}
