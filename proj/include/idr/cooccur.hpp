#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "idr/catalog.hpp"
#include "idr/discipline.hpp"
#include "idr/metrics.hpp"
#include "idr/record.hpp"

namespace idr {

// Unordered discipline pair, stored with first < second.
struct DisciplinePair {
  Discipline a;
  Discipline b;

  DisciplinePair(Discipline x, Discipline y)
      : a(index_of(x) < index_of(y) ? x : y), b(index_of(x) < index_of(y) ? y : x) {}

  auto operator<=>(const DisciplinePair&) const = default;
};

// Per-period discipline co-occurrence graph. A paper contributes one binary
// co-occurrence pattern: the union of its identified references' discipline
// sets increments every unordered pair once and every member node once.
struct CooccurrenceGraph {
  Period period;
  std::map<Discipline, std::uint32_t> nodes;         // occurrence counts
  std::map<DisciplinePair, std::uint32_t> edges;     // paper counts
  std::map<DisciplinePair, double> edge_similarity;  // filled by reweighting

  std::uint32_t node_count(Discipline d) const;
  std::uint32_t edge_weight(Discipline x, Discipline y) const;
  bool empty() const { return nodes.empty(); }
};

// The per-paper union set of identified reference disciplines.
DisciplineSet paper_discipline_union(const DisciplineAssignment& assignment);

CooccurrenceGraph build_cooccurrence(std::span<const DisciplineAssignment* const> papers,
                                     Period period);
CooccurrenceGraph build_cooccurrence(const std::vector<DisciplineAssignment>& papers,
                                     Period period);

// Keeps the max_nodes most frequent disciplines (ties broken by enum order)
// and drops the rest with their incident edges; 0 means no cap.
CooccurrenceGraph truncate_to_top_nodes(const CooccurrenceGraph& g, std::size_t max_nodes);

// Cosine similarity of the adjacency rows of i and j, with node counts on
// the diagonal, over all nodes of the graph.
double cosine_row_similarity(const CooccurrenceGraph& g, Discipline i, Discipline j);

// Reweights every edge by the cosine similarity of its endpoint rows;
// zero-similarity edges are dropped.
CooccurrenceGraph edge_similarity(const CooccurrenceGraph& g);

// 27x27 counts matrix for the disparity basis: off-diagonal entries are the
// graph's pair counts and the diagonal carries the node occurrence counts.
CooccurrenceCounts cooccurrence_counts(const CooccurrenceGraph& g);

// Sum of per-paper contributions over a whole corpus (no period attached).
CooccurrenceCounts cooccurrence_counts(const std::vector<DisciplineAssignment>& papers);

}  // namespace idr
