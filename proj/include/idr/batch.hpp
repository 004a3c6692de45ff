#pragma once

#include <optional>
#include <span>
#include <vector>

#include "idr/catalog.hpp"
#include "idr/cooccur.hpp"
#include "idr/metrics.hpp"

namespace idr {

// Corpus-level kernels exist in two lanes: a serial reference and an OpenMP
// lane. Both produce identical results (per-item work is independent and the
// merged accumulators are exact integer sums); the *_serial entry points stay
// as the oracle the tests and the benchmark compare against.
enum class ExecMode { Serial, Parallel };

ExecMode default_exec_mode();

std::vector<DisciplineAssignment> assign_records_serial(std::span<const PublicationRecord> records,
                                                        const DisciplineCatalog& catalog,
                                                        const AbbrevMap& abbrev_map);
std::vector<DisciplineAssignment> assign_records(std::span<const PublicationRecord> records,
                                                 const DisciplineCatalog& catalog,
                                                 const AbbrevMap& abbrev_map,
                                                 ExecMode mode = default_exec_mode());

// Per-paper variety / balance / true diversity. Papers whose vectors are
// all-zero produce nullopt; papers whose TD is undefined in the chosen mode
// keep their other scores and get an unset TD.
std::vector<std::optional<PaperScores>> score_papers_serial(
    std::span<const DisciplineAssignment> papers, const DisparityMatrix& disparity, TDMode mode);
std::vector<std::optional<PaperScores>> score_papers(std::span<const DisciplineAssignment> papers,
                                                     const DisparityMatrix& disparity, TDMode mode,
                                                     ExecMode exec = default_exec_mode());

// Whole-corpus discipline co-occurrence counts (pair counts off-diagonal,
// paper counts on the diagonal) via per-thread partials.
CooccurrenceCounts cooccurrence_counts_serial(std::span<const DisciplineAssignment> papers);
CooccurrenceCounts cooccurrence_counts_batch(std::span<const DisciplineAssignment> papers,
                                             ExecMode exec = default_exec_mode());

}  // namespace idr
