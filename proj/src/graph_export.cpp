#include "idr/graph_export.hpp"

#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include "idr/streams.hpp"

namespace idr {

namespace {

std::map<Discipline, std::size_t> node_indices(const CooccurrenceGraph& g) {
  std::map<Discipline, std::size_t> idx;
  for (const auto& [d, count] : g.nodes) idx.emplace(d, idx.size());
  return idx;
}

void check_partition(const CooccurrenceGraph& g, const Partition* p) {
  if (p && p->assignment.size() != g.nodes.size()) {
    throw std::invalid_argument("partition does not match the graph's node set");
  }
}

}  // namespace

void export_graphml(const CooccurrenceGraph& g, const Partition* partition, std::ostream& out) {
  check_partition(g, partition);
  auto idx = node_indices(g);

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"code\" for=\"node\" attr.name=\"code\" attr.type=\"string\"/>\n"
      << "  <key id=\"count\" for=\"node\" attr.name=\"count\" attr.type=\"long\"/>\n";
  if (partition) {
    out << "  <key id=\"community\" for=\"node\" attr.name=\"community\" attr.type=\"long\"/>\n";
  }
  out << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
      << "  <key id=\"similarity\" for=\"edge\" attr.name=\"similarity\" attr.type=\"double\"/>\n"
      << "  <graph id=\"" << g.period.str() << "\" edgedefault=\"undirected\">\n";

  for (const auto& [d, count] : g.nodes) {
    out << "    <node id=\"" << abbreviation(d) << "\">\n"
        << "      <data key=\"code\">" << abbreviation(d) << "</data>\n"
        << "      <data key=\"count\">" << count << "</data>\n";
    if (partition) {
      out << "      <data key=\"community\">" << partition->assignment[idx[d]] << "</data>\n";
    }
    out << "    </node>\n";
  }

  char buf[40];
  for (const auto& [pair, weight] : g.edges) {
    out << "    <edge source=\"" << abbreviation(pair.a) << "\" target=\"" << abbreviation(pair.b)
        << "\">\n"
        << "      <data key=\"weight\">" << weight << "</data>\n";
    auto sim = g.edge_similarity.find(pair);
    if (sim != g.edge_similarity.end()) {
      std::snprintf(buf, sizeof(buf), "%.6f", sim->second);
      out << "      <data key=\"similarity\">" << buf << "</data>\n";
    }
    out << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void export_dot(const CooccurrenceGraph& g, const Partition* partition, std::ostream& out) {
  check_partition(g, partition);
  auto idx = node_indices(g);

  out << "graph \"" << g.period.str() << "\" {\n";
  for (const auto& [d, count] : g.nodes) {
    out << "  " << abbreviation(d) << " [count=" << count;
    if (partition) out << ", community=" << partition->assignment[idx[d]];
    out << "];\n";
  }
  char buf[40];
  for (const auto& [pair, weight] : g.edges) {
    out << "  " << abbreviation(pair.a) << " -- " << abbreviation(pair.b)
        << " [weight=" << weight;
    auto sim = g.edge_similarity.find(pair);
    if (sim != g.edge_similarity.end()) {
      std::snprintf(buf, sizeof(buf), "%.6f", sim->second);
      out << ", similarity=" << buf;
    }
    out << "];\n";
  }
  out << "}\n";
}

}  // namespace idr
