#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "idr/cooccur.hpp"
#include "idr/louvain.hpp"
#include "idr/record.hpp"

namespace idr {

// One detected time slice: the period's graph, its node list (enum order,
// matching the Partition's node indexing) and the partition itself.
struct PeriodPartition {
  Period period;
  CooccurrenceGraph graph;
  Partition partition;
};

std::vector<Discipline> graph_nodes(const CooccurrenceGraph& g);

// "ABBR1&ABBR2" for the heaviest intra-community co-occurrence edge
// (alphabetical on ties), plain "ABBR" for singletons.
std::string label_community(const std::vector<Discipline>& members, const CooccurrenceGraph& g);

struct StreamCommunity {
  std::size_t community_id = 0;
  std::vector<Discipline> members;
  std::uint64_t size = 0;  // sum of member occurrence counts
  std::string label;
};

struct TemporalEdge {
  std::size_t from_period = 0;  // index into StreamGraph::periods
  std::size_t from_community = 0;
  std::size_t to_community = 0;
  double overlap = 0.0;  // normalized by the smaller community size
};

enum class StreamEvent : std::uint8_t { Split, Merge, Birth, Death };
std::string_view stream_event_name(StreamEvent e);

struct StreamEventRecord {
  std::size_t period = 0;
  std::size_t community = 0;
  StreamEvent kind = StreamEvent::Birth;
};

struct StreamGraph {
  std::vector<Period> periods;
  std::vector<std::vector<StreamCommunity>> communities;  // one list per period
  std::vector<TemporalEdge> edges;
  std::vector<StreamEventRecord> events;
};

// Links communities of adjacent periods whose membership overlap, normalized
// by the smaller community size, reaches the threshold; derives
// split/merge/birth/death events from the kept edges.
StreamGraph align_streams(const std::vector<PeriodPartition>& slices, double overlap_threshold);

enum class StreamFormat { SankeyJson, GraphML, Dot };
StreamFormat parse_stream_format(const std::string& name);

// Byte-deterministic for a fixed input and format.
void export_streams(const StreamGraph& s, StreamFormat format, std::ostream& out);

}  // namespace idr
