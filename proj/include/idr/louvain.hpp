#pragma once

#include <cstdint>
#include <vector>

namespace idr {

// Undirected weighted graph over nodes 0..n-1. Self-loop weight is the full
// diagonal entry A_uu of the adjacency matrix (aggregation creates these).
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t node_count) : adj_(node_count) {}

  void add_edge(std::size_t u, std::size_t v, double weight);

  std::size_t node_count() const { return adj_.size(); }
  const std::vector<std::pair<std::size_t, double>>& neighbors(std::size_t u) const {
    return adj_[u];
  }
  // k_u: sum of incident weights including the self-loop entry.
  double weighted_degree(std::size_t u) const;
  double self_loop(std::size_t u) const;
  // 2m: sum of weighted degrees.
  double total_weight_2m() const;

 private:
  std::vector<std::vector<std::pair<std::size_t, double>>> adj_;
};

struct Partition {
  std::vector<std::size_t> assignment;  // node -> community id, compacted
  std::size_t community_count = 0;
  double modularity = 0.0;
  std::uint64_t seed = 0;
  double resolution = 1.0;
};

// Q = (1/2m) sum_ij [A_ij - resolution * k_i k_j / 2m] delta(c_i, c_j).
double modularity(const WeightedGraph& g, const std::vector<std::size_t>& assignment,
                  double resolution = 1.0);

// Greedy modularity optimization: seeded local moves until no gain, then
// graph aggregation, repeated until convergence. Gain ties break toward the
// lowest community id, so identical seeds give identical partitions.
Partition detect_communities(const WeightedGraph& g, std::uint64_t seed, double resolution = 1.0);

}  // namespace idr
