#include "idr/cooccur.hpp"

#include <algorithm>
#include <cmath>

namespace idr {

std::uint32_t CooccurrenceGraph::node_count(Discipline d) const {
  auto it = nodes.find(d);
  return it == nodes.end() ? 0 : it->second;
}

std::uint32_t CooccurrenceGraph::edge_weight(Discipline x, Discipline y) const {
  auto it = edges.find(DisciplinePair(x, y));
  return it == edges.end() ? 0 : it->second;
}

DisciplineSet paper_discipline_union(const DisciplineAssignment& assignment) {
  DisciplineSet u;
  for (const auto& s : assignment.ref_disciplines) {
    s.for_each([&](Discipline d) { u.insert(d); });
  }
  return u;
}

namespace {

void add_paper(CooccurrenceGraph& g, const DisciplineAssignment& paper) {
  DisciplineSet u = paper_discipline_union(paper);
  if (u.empty()) return;
  std::vector<Discipline> members;
  u.for_each([&](Discipline d) { members.push_back(d); });
  for (Discipline d : members) ++g.nodes[d];
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      ++g.edges[DisciplinePair(members[i], members[j])];
    }
  }
}

}  // namespace

CooccurrenceGraph build_cooccurrence(std::span<const DisciplineAssignment* const> papers,
                                     Period period) {
  CooccurrenceGraph g;
  g.period = period;
  for (const DisciplineAssignment* paper : papers) add_paper(g, *paper);
  return g;
}

CooccurrenceGraph build_cooccurrence(const std::vector<DisciplineAssignment>& papers,
                                     Period period) {
  CooccurrenceGraph g;
  g.period = period;
  for (const auto& paper : papers) add_paper(g, paper);
  return g;
}

CooccurrenceGraph truncate_to_top_nodes(const CooccurrenceGraph& g, std::size_t max_nodes) {
  if (max_nodes == 0 || g.nodes.size() <= max_nodes) return g;

  std::vector<std::pair<Discipline, std::uint32_t>> ranked(g.nodes.begin(), g.nodes.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  DisciplineSet kept;
  for (std::size_t i = 0; i < max_nodes; ++i) kept.insert(ranked[i].first);

  CooccurrenceGraph out;
  out.period = g.period;
  for (const auto& [d, count] : g.nodes) {
    if (kept.contains(d)) out.nodes.emplace(d, count);
  }
  for (const auto& [pair, weight] : g.edges) {
    if (kept.contains(pair.a) && kept.contains(pair.b)) out.edges.emplace(pair, weight);
  }
  for (const auto& [pair, sim] : g.edge_similarity) {
    if (kept.contains(pair.a) && kept.contains(pair.b)) out.edge_similarity.emplace(pair, sim);
  }
  return out;
}

double cosine_row_similarity(const CooccurrenceGraph& g, Discipline i, Discipline j) {
  // Rows indexed by the graph's node set; absent pairs contribute zero.
  double dot = 0.0, sq_i = 0.0, sq_j = 0.0;
  for (const auto& [node, count] : g.nodes) {
    double ri = node == i ? static_cast<double>(g.node_count(i))
                          : static_cast<double>(g.edge_weight(i, node));
    double rj = node == j ? static_cast<double>(g.node_count(j))
                          : static_cast<double>(g.edge_weight(j, node));
    dot += ri * rj;
    sq_i += ri * ri;
    sq_j += rj * rj;
  }
  if (sq_i == 0.0 || sq_j == 0.0) return 0.0;
  return dot / (std::sqrt(sq_i) * std::sqrt(sq_j));
}

CooccurrenceGraph edge_similarity(const CooccurrenceGraph& g) {
  CooccurrenceGraph out = g;
  out.edge_similarity.clear();
  for (const auto& [pair, weight] : g.edges) {
    (void)weight;
    double sim = cosine_row_similarity(g, pair.a, pair.b);
    if (sim > 0.0) out.edge_similarity[pair] = sim;
  }
  // Drop edges whose similarity vanished.
  std::erase_if(out.edges,
                [&](const auto& kv) { return !out.edge_similarity.contains(kv.first); });
  return out;
}

CooccurrenceCounts cooccurrence_counts(const CooccurrenceGraph& g) {
  CooccurrenceCounts c{};
  for (const auto& [node, count] : g.nodes) {
    c[index_of(node)][index_of(node)] = static_cast<double>(count);
  }
  for (const auto& [pair, weight] : g.edges) {
    c[index_of(pair.a)][index_of(pair.b)] = static_cast<double>(weight);
    c[index_of(pair.b)][index_of(pair.a)] = static_cast<double>(weight);
  }
  return c;
}

CooccurrenceCounts cooccurrence_counts(const std::vector<DisciplineAssignment>& papers) {
  return cooccurrence_counts(build_cooccurrence(papers, Period{}));
}

}  // namespace idr
