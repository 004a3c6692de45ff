#include "idr/louvain.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "idr/rng.hpp"

namespace idr {

void WeightedGraph::add_edge(std::size_t u, std::size_t v, double weight) {
  if (u >= adj_.size() || v >= adj_.size()) throw std::out_of_range("edge endpoint out of range");
  if (weight < 0.0) throw std::invalid_argument("edge weight must be nonnegative");
  if (u == v) {
    adj_[u].emplace_back(u, weight);
  } else {
    adj_[u].emplace_back(v, weight);
    adj_[v].emplace_back(u, weight);
  }
}

double WeightedGraph::weighted_degree(std::size_t u) const {
  double k = 0.0;
  for (const auto& [v, w] : adj_[u]) k += w;
  return k;
}

double WeightedGraph::self_loop(std::size_t u) const {
  double w = 0.0;
  for (const auto& [v, lw] : adj_[u]) {
    if (v == u) w += lw;
  }
  return w;
}

double WeightedGraph::total_weight_2m() const {
  double total = 0.0;
  for (std::size_t u = 0; u < adj_.size(); ++u) total += weighted_degree(u);
  return total;
}

double modularity(const WeightedGraph& g, const std::vector<std::size_t>& assignment,
                  double resolution) {
  if (assignment.size() != g.node_count()) {
    throw std::invalid_argument("assignment size does not match graph");
  }
  const double two_m = g.total_weight_2m();
  if (two_m == 0.0) return 0.0;

  std::map<std::size_t, double> in_weight;   // sum_{i,j in c} A_ij
  std::map<std::size_t, double> tot_degree;  // sum_{i in c} k_i
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    std::size_t c = assignment[u];
    tot_degree[c] += g.weighted_degree(u);
    for (const auto& [v, w] : g.neighbors(u)) {
      // Self-loop entries appear once per list; off-diagonal entries appear
      // in both endpoint lists, covering both ordered pairs.
      if (assignment[v] == c) in_weight[c] += w;
    }
  }

  double q = 0.0;
  for (const auto& [c, tot] : tot_degree) {
    double in = in_weight.contains(c) ? in_weight[c] : 0.0;
    q += in / two_m - resolution * (tot / two_m) * (tot / two_m);
  }
  return q;
}

namespace {

using Rng = SplitMix64;

void shuffle_order(std::vector<std::size_t>& order, Rng& rng) {
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.below(i)]);
  }
}

struct Level {
  const WeightedGraph* graph;
  double two_m;
  double resolution;
  std::vector<std::size_t> node_comm;
  std::vector<double> comm_tot;  // sum of degrees per community
  std::vector<double> comm_in;   // internal ordered-pair weight per community

  explicit Level(const WeightedGraph& g, double res)
      : graph(&g),
        two_m(g.total_weight_2m()),
        resolution(res),
        node_comm(g.node_count()),
        comm_tot(g.node_count(), 0.0),
        comm_in(g.node_count(), 0.0) {
    for (std::size_t u = 0; u < g.node_count(); ++u) {
      node_comm[u] = u;
      comm_tot[u] = g.weighted_degree(u);
      comm_in[u] = g.self_loop(u);
    }
  }

  // Weight from node u to each community among its neighbors (u excluded).
  std::map<std::size_t, double> neighbor_communities(std::size_t u) const {
    std::map<std::size_t, double> w;
    w[node_comm[u]] += 0.0;  // staying put is always a candidate
    for (const auto& [v, lw] : graph->neighbors(u)) {
      if (v != u) w[node_comm[v]] += lw;
    }
    return w;
  }

  void remove(std::size_t u, std::size_t c, double w_uc) {
    comm_tot[c] -= graph->weighted_degree(u);
    comm_in[c] -= 2.0 * w_uc + graph->self_loop(u);
    node_comm[u] = static_cast<std::size_t>(-1);
  }

  void insert(std::size_t u, std::size_t c, double w_uc) {
    comm_tot[c] += graph->weighted_degree(u);
    comm_in[c] += 2.0 * w_uc + graph->self_loop(u);
    node_comm[u] = c;
  }

  double gain(std::size_t u, std::size_t c, double w_uc) const {
    // Proportional gain of inserting isolated node u into community c.
    return w_uc - resolution * comm_tot[c] * graph->weighted_degree(u) / two_m;
  }

  double quality() const {
    double q = 0.0;
    for (std::size_t c = 0; c < comm_tot.size(); ++c) {
      if (comm_tot[c] > 0.0 || comm_in[c] > 0.0) {
        q += comm_in[c] / two_m - resolution * (comm_tot[c] / two_m) * (comm_tot[c] / two_m);
      }
    }
    return q;
  }
};

constexpr double kMinGain = 1e-12;

bool one_level(Level& level, Rng& rng) {
  const std::size_t n = level.graph->node_count();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle_order(order, rng);

  bool improved = false;
  std::size_t moves = 1;
  double cur_q = level.quality();
  while (moves > 0) {
    moves = 0;
    for (std::size_t idx = 0; idx < n; ++idx) {
      std::size_t u = order[idx];
      std::size_t old_comm = level.node_comm[u];
      auto comm_weights = level.neighbor_communities(u);
      level.remove(u, old_comm, comm_weights[old_comm]);

      std::size_t best_comm = old_comm;
      double best_gain = level.gain(u, old_comm, comm_weights[old_comm]);
      // std::map iterates ascending, so strict > keeps the lowest community
      // id on exact ties.
      for (const auto& [c, w_uc] : comm_weights) {
        double g = level.gain(u, c, w_uc);
        if (g > best_gain) {
          best_gain = g;
          best_comm = c;
        }
      }
      level.insert(u, best_comm, comm_weights[best_comm]);
      if (best_comm != old_comm) ++moves;
    }
    if (moves > 0) improved = true;
    double new_q = level.quality();
    if (new_q - cur_q < kMinGain) break;
    cur_q = new_q;
  }
  return improved;
}

// Compacts community ids to 0..k-1 in order of first appearance by node.
std::vector<std::size_t> compact(const std::vector<std::size_t>& assignment,
                                 std::size_t* count_out) {
  std::map<std::size_t, std::size_t> renumber;
  std::vector<std::size_t> out(assignment.size());
  for (std::size_t u = 0; u < assignment.size(); ++u) {
    auto [it, inserted] = renumber.emplace(assignment[u], renumber.size());
    out[u] = it->second;
  }
  if (count_out) *count_out = renumber.size();
  return out;
}

WeightedGraph aggregate(const WeightedGraph& g, const std::vector<std::size_t>& comm,
                        std::size_t comm_count) {
  WeightedGraph agg(comm_count);
  std::map<std::pair<std::size_t, std::size_t>, double> edges;
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    for (const auto& [v, w] : g.neighbors(u)) {
      std::size_t cu = comm[u];
      std::size_t cv = comm[v];
      if (u == v) {
        edges[{cu, cu}] += w;  // diagonal entry, listed once
      } else if (u < v) {
        if (cu == cv) {
          edges[{cu, cu}] += 2.0 * w;  // both ordered pairs fold into A_cc
        } else {
          edges[{std::min(cu, cv), std::max(cu, cv)}] += w;
        }
      }
    }
  }
  for (const auto& [key, w] : edges) agg.add_edge(key.first, key.second, w);
  return agg;
}

}  // namespace

Partition detect_communities(const WeightedGraph& g, std::uint64_t seed, double resolution) {
  if (g.node_count() == 0) throw std::invalid_argument("graph has no nodes");
  if (resolution <= 0.0) throw std::invalid_argument("resolution must be positive");

  Partition p;
  p.seed = seed;
  p.resolution = resolution;

  if (g.total_weight_2m() == 0.0) {
    p.assignment.resize(g.node_count());
    std::iota(p.assignment.begin(), p.assignment.end(), 0);
    p.community_count = g.node_count();
    p.modularity = 0.0;
    return p;
  }

  Rng rng(seed);
  // node of the original graph -> node of the current aggregated graph
  std::vector<std::size_t> mapping(g.node_count());
  std::iota(mapping.begin(), mapping.end(), 0);

  WeightedGraph current = g;
  while (true) {
    Level level(current, resolution);
    bool improved = one_level(level, rng);
    std::size_t comm_count = 0;
    std::vector<std::size_t> comm = compact(level.node_comm, &comm_count);
    for (auto& m : mapping) m = comm[m];
    if (!improved || comm_count == current.node_count()) break;
    current = aggregate(current, comm, comm_count);
  }

  p.assignment = compact(mapping, &p.community_count);
  p.modularity = modularity(g, p.assignment, resolution);
  return p;
}

}  // namespace idr
