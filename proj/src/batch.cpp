#include "idr/batch.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace idr {

ExecMode default_exec_mode() {
#ifdef _OPENMP
  return ExecMode::Parallel;
#else
  return ExecMode::Serial;
#endif
}

std::vector<DisciplineAssignment> assign_records_serial(std::span<const PublicationRecord> records,
                                                        const DisciplineCatalog& catalog,
                                                        const AbbrevMap& abbrev_map) {
  std::vector<DisciplineAssignment> out(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    out[i] = assign(records[i], catalog, abbrev_map);
  }
  return out;
}

std::vector<DisciplineAssignment> assign_records(std::span<const PublicationRecord> records,
                                                 const DisciplineCatalog& catalog,
                                                 const AbbrevMap& abbrev_map, ExecMode mode) {
  if (mode == ExecMode::Serial) return assign_records_serial(records, catalog, abbrev_map);
  std::vector<DisciplineAssignment> out(records.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (std::size_t i = 0; i < records.size(); ++i) {
    out[i] = assign(records[i], catalog, abbrev_map);
  }
  return out;
}

namespace {

std::optional<PaperScores> score_one(const DisciplineAssignment& paper,
                                     const DisparityMatrix& disparity, TDMode mode) {
  DisciplineVector v = discipline_vector(paper);
  if (v.total() == 0) return std::nullopt;
  PaperScores s;
  s.paper_id = paper.paper_id;
  s.mode = mode;
  s.variety = variety(v);
  s.balance = balance(v);
  try {
    s.true_diversity = true_diversity(v, disparity, mode);
  } catch (const std::domain_error&) {
    s.true_diversity = std::nullopt;
  }
  return s;
}

void add_paper_counts(CooccurrenceCounts& c, const DisciplineAssignment& paper) {
  DisciplineSet u = paper_discipline_union(paper);
  if (u.empty()) return;
  std::array<std::size_t, kDisciplineCount> members;
  std::size_t n = 0;
  u.for_each([&](Discipline d) { members[n++] = index_of(d); });
  for (std::size_t i = 0; i < n; ++i) {
    c[members[i]][members[i]] += 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      c[members[i]][members[j]] += 1.0;
      c[members[j]][members[i]] += 1.0;
    }
  }
}

}  // namespace

std::vector<std::optional<PaperScores>> score_papers_serial(
    std::span<const DisciplineAssignment> papers, const DisparityMatrix& disparity, TDMode mode) {
  std::vector<std::optional<PaperScores>> out(papers.size());
  for (std::size_t i = 0; i < papers.size(); ++i) {
    out[i] = score_one(papers[i], disparity, mode);
  }
  return out;
}

std::vector<std::optional<PaperScores>> score_papers(std::span<const DisciplineAssignment> papers,
                                                     const DisparityMatrix& disparity, TDMode mode,
                                                     ExecMode exec) {
  if (exec == ExecMode::Serial) return score_papers_serial(papers, disparity, mode);
  std::vector<std::optional<PaperScores>> out(papers.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (std::size_t i = 0; i < papers.size(); ++i) {
    out[i] = score_one(papers[i], disparity, mode);
  }
  return out;
}

CooccurrenceCounts cooccurrence_counts_serial(std::span<const DisciplineAssignment> papers) {
  CooccurrenceCounts c{};
  for (const auto& paper : papers) add_paper_counts(c, paper);
  return c;
}

CooccurrenceCounts cooccurrence_counts_batch(std::span<const DisciplineAssignment> papers,
                                             ExecMode exec) {
  if (exec == ExecMode::Serial) return cooccurrence_counts_serial(papers);
#ifdef _OPENMP
  CooccurrenceCounts total{};
#pragma omp parallel
  {
    CooccurrenceCounts local{};
#pragma omp for schedule(static) nowait
    for (std::size_t i = 0; i < papers.size(); ++i) {
      add_paper_counts(local, papers[i]);
    }
    // Entries are small integer counts, so the merge order cannot change
    // the sums.
#pragma omp critical(idr_cooccurrence_merge)
    {
      for (std::size_t r = 0; r < kDisciplineCount; ++r) {
        for (std::size_t c = 0; c < kDisciplineCount; ++c) total[r][c] += local[r][c];
      }
    }
  }
  return total;
#else
  return cooccurrence_counts_serial(papers);
#endif
}

}  // namespace idr
