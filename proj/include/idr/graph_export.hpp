#pragma once

#include <iosfwd>

#include "idr/cooccur.hpp"
#include "idr/louvain.hpp"

namespace idr {

// GraphML / DOT writers for one period's co-occurrence graph. Node
// attributes: code, count (and community when a partition is given); edge
// attributes: weight and, when present, similarity.
void export_graphml(const CooccurrenceGraph& g, const Partition* partition, std::ostream& out);
void export_dot(const CooccurrenceGraph& g, const Partition* partition, std::ostream& out);

}  // namespace idr
