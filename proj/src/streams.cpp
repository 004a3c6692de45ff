#include "idr/streams.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace idr {

std::vector<Discipline> graph_nodes(const CooccurrenceGraph& g) {
  std::vector<Discipline> nodes;
  nodes.reserve(g.nodes.size());
  for (const auto& [d, count] : g.nodes) nodes.push_back(d);
  return nodes;
}

std::string label_community(const std::vector<Discipline>& members, const CooccurrenceGraph& g) {
  if (members.empty()) throw std::invalid_argument("cannot label an empty community");
  if (members.size() == 1) return std::string(abbreviation(members[0]));

  auto pair_label = [](Discipline x, Discipline y) {
    std::string a(abbreviation(x));
    std::string b(abbreviation(y));
    if (b < a) std::swap(a, b);
    return a + "&" + b;
  };

  std::uint32_t best_weight = 0;
  std::string best_label;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      std::uint32_t w = g.edge_weight(members[i], members[j]);
      if (w == 0) continue;
      std::string label = pair_label(members[i], members[j]);
      if (w > best_weight || (w == best_weight && label < best_label)) {
        best_weight = w;
        best_label = label;
      }
    }
  }
  if (!best_label.empty()) return best_label;

  // No intra-community edge; fall back to the most frequent member.
  Discipline top = members[0];
  for (Discipline d : members) {
    if (g.node_count(d) > g.node_count(top)) top = d;
  }
  return std::string(abbreviation(top));
}

std::string_view stream_event_name(StreamEvent e) {
  switch (e) {
    case StreamEvent::Split: return "split";
    case StreamEvent::Merge: return "merge";
    case StreamEvent::Birth: return "birth";
    case StreamEvent::Death: return "death";
  }
  return "";
}

namespace {

std::vector<StreamCommunity> slice_communities(const PeriodPartition& slice) {
  std::vector<Discipline> nodes = graph_nodes(slice.graph);
  if (nodes.size() != slice.partition.assignment.size()) {
    throw std::invalid_argument("partition does not cover the graph's node set");
  }
  std::vector<StreamCommunity> out(slice.partition.community_count);
  for (std::size_t c = 0; c < out.size(); ++c) out[c].community_id = c;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto& community = out[slice.partition.assignment[i]];
    community.members.push_back(nodes[i]);
    community.size += slice.graph.node_count(nodes[i]);
  }
  for (auto& community : out) {
    community.label = label_community(community.members, slice.graph);
  }
  return out;
}

}  // namespace

StreamGraph align_streams(const std::vector<PeriodPartition>& slices, double overlap_threshold) {
  if (slices.size() < 2) throw std::invalid_argument("stream alignment needs at least 2 periods");

  StreamGraph s;
  for (const auto& slice : slices) {
    s.periods.push_back(slice.period);
    s.communities.push_back(slice_communities(slice));
  }

  for (std::size_t t = 0; t + 1 < slices.size(); ++t) {
    const auto& from = s.communities[t];
    const auto& to = s.communities[t + 1];
    const auto& g_from = slices[t].graph;
    const auto& g_to = slices[t + 1].graph;

    std::vector<std::size_t> out_degree(from.size(), 0);
    std::vector<std::size_t> in_degree(to.size(), 0);

    for (std::size_t a = 0; a < from.size(); ++a) {
      for (std::size_t b = 0; b < to.size(); ++b) {
        std::uint64_t shared = 0;
        for (Discipline d : from[a].members) {
          if (std::find(to[b].members.begin(), to[b].members.end(), d) != to[b].members.end()) {
            shared += std::min(g_from.node_count(d), g_to.node_count(d));
          }
        }
        if (shared == 0) continue;
        std::uint64_t smaller = std::min(from[a].size, to[b].size);
        if (smaller == 0) continue;
        double normalized = static_cast<double>(shared) / static_cast<double>(smaller);
        if (normalized >= overlap_threshold) {
          s.edges.push_back({t, a, b, normalized});
          ++out_degree[a];
          ++in_degree[b];
        }
      }
    }

    for (std::size_t a = 0; a < from.size(); ++a) {
      if (out_degree[a] >= 2) s.events.push_back({t, a, StreamEvent::Split});
      if (out_degree[a] == 0) s.events.push_back({t, a, StreamEvent::Death});
    }
    for (std::size_t b = 0; b < to.size(); ++b) {
      if (in_degree[b] >= 2) s.events.push_back({t + 1, b, StreamEvent::Merge});
    }
  }

  // Births: communities after the first period with no incoming edge.
  for (std::size_t t = 1; t < s.communities.size(); ++t) {
    for (std::size_t b = 0; b < s.communities[t].size(); ++b) {
      bool has_incoming = std::any_of(s.edges.begin(), s.edges.end(), [&](const TemporalEdge& e) {
        return e.from_period == t - 1 && e.to_community == b;
      });
      if (!has_incoming) s.events.push_back({t, b, StreamEvent::Birth});
    }
  }
  return s;
}

StreamFormat parse_stream_format(const std::string& name) {
  if (name == "sankey-json") return StreamFormat::SankeyJson;
  if (name == "graphml") return StreamFormat::GraphML;
  if (name == "dot") return StreamFormat::Dot;
  throw std::invalid_argument("unknown stream export format: " + name);
}

namespace {

std::string node_id(const StreamGraph& s, std::size_t period, std::size_t community) {
  return "p" + s.periods[period].str() + "c" + std::to_string(community);
}

// Flat node index used by the sankey link list.
std::size_t node_index(const StreamGraph& s, std::size_t period, std::size_t community) {
  std::size_t idx = 0;
  for (std::size_t t = 0; t < period; ++t) idx += s.communities[t].size();
  return idx + community;
}

void export_sankey(const StreamGraph& s, std::ostream& out) {
  nlohmann::ordered_json doc;
  auto nodes = nlohmann::ordered_json::array();
  for (std::size_t t = 0; t < s.communities.size(); ++t) {
    for (const auto& c : s.communities[t]) {
      nlohmann::ordered_json n;
      n["period"] = s.periods[t].str();
      n["community"] = c.community_id;
      n["label"] = c.label;
      n["size"] = c.size;
      nodes.push_back(std::move(n));
    }
  }
  auto links = nlohmann::ordered_json::array();
  for (const auto& e : s.edges) {
    nlohmann::ordered_json l;
    l["source"] = node_index(s, e.from_period, e.from_community);
    l["target"] = node_index(s, e.from_period + 1, e.to_community);
    l["weight"] = e.overlap;
    links.push_back(std::move(l));
  }
  auto events = nlohmann::ordered_json::array();
  for (const auto& ev : s.events) {
    nlohmann::ordered_json j;
    j["period"] = s.periods[ev.period].str();
    j["community"] = ev.community;
    j["event"] = std::string(stream_event_name(ev.kind));
    events.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  doc["links"] = std::move(links);
  doc["events"] = std::move(events);
  out << doc.dump(2) << '\n';
}

void export_graphml(const StreamGraph& s, std::ostream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"period\" for=\"node\" attr.name=\"period\" attr.type=\"string\"/>\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"size\" for=\"node\" attr.name=\"size\" attr.type=\"long\"/>\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
      << "  <graph id=\"streams\" edgedefault=\"directed\">\n";
  for (std::size_t t = 0; t < s.communities.size(); ++t) {
    for (const auto& c : s.communities[t]) {
      out << "    <node id=\"" << node_id(s, t, c.community_id) << "\">\n"
          << "      <data key=\"period\">" << s.periods[t].str() << "</data>\n"
          << "      <data key=\"label\">" << c.label << "</data>\n"
          << "      <data key=\"size\">" << c.size << "</data>\n"
          << "    </node>\n";
    }
  }
  char buf[40];
  for (const auto& e : s.edges) {
    std::snprintf(buf, sizeof(buf), "%.6f", e.overlap);
    out << "    <edge source=\"" << node_id(s, e.from_period, e.from_community)
        << "\" target=\"" << node_id(s, e.from_period + 1, e.to_community) << "\">\n"
        << "      <data key=\"weight\">" << buf << "</data>\n"
        << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void export_dot(const StreamGraph& s, std::ostream& out) {
  out << "digraph streams {\n  rankdir=LR;\n";
  for (std::size_t t = 0; t < s.communities.size(); ++t) {
    for (const auto& c : s.communities[t]) {
      out << "  \"" << node_id(s, t, c.community_id) << "\" [label=\"" << s.periods[t].str()
          << "\\n" << c.label << "\", size=" << c.size << "];\n";
    }
  }
  char buf[40];
  for (const auto& e : s.edges) {
    std::snprintf(buf, sizeof(buf), "%.6f", e.overlap);
    out << "  \"" << node_id(s, e.from_period, e.from_community) << "\" -> \""
        << node_id(s, e.from_period + 1, e.to_community) << "\" [weight=" << buf << "];\n";
  }
  out << "}\n";
}

}  // namespace

void export_streams(const StreamGraph& s, StreamFormat format, std::ostream& out) {
  switch (format) {
    case StreamFormat::SankeyJson: export_sankey(s, out); return;
    case StreamFormat::GraphML: export_graphml(s, out); return;
    case StreamFormat::Dot: export_dot(s, out); return;
  }
  throw std::invalid_argument("unknown stream export format");
}

}  // namespace idr
