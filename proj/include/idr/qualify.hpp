#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "idr/catalog.hpp"
#include "idr/record.hpp"

namespace idr {

struct QualificationPolicy {
  std::size_t min_references = 5;
  double min_coverage = 0.80;  // inclusive: exactly 80% qualifies
  std::set<DocType> allowed_types = {DocType::Article, DocType::Review};
};

enum class RejectReason { Type, RefCount, Coverage };
std::string_view reject_reason_name(RejectReason r);

struct ScoredRecord {
  const PublicationRecord* record = nullptr;
  const DisciplineAssignment* assignment = nullptr;
};

struct Rejection {
  std::string id;
  RejectReason reason;
};

struct QualifyResult {
  std::vector<ScoredRecord> qualified;
  std::vector<Rejection> rejected;
};

// A record qualifies iff doc type is allowed, reference count >=
// min_references and coverage >= min_coverage. Rejected records carry the
// first failing reason in the order type, ref-count, coverage.
QualifyResult qualify(const std::vector<ScoredRecord>& inputs, const QualificationPolicy& policy);

// Case-insensitive substring match of any term against title or abstract.
bool keyword_match(const PublicationRecord& record, const std::vector<std::string>& terms);
std::vector<PublicationRecord> keyword_subset(const std::vector<PublicationRecord>& records,
                                              const std::vector<std::string>& terms);

struct StageCount {
  std::string stage;
  std::size_t papers = 0;
  std::size_t references = 0;
};

struct StageInput {
  std::string name;
  // (id, reference count) per record in the stage.
  std::vector<std::pair<std::string, std::size_t>> records;
};

struct CorpusStats {
  std::vector<StageCount> stages;
};

// Stages must be successive subsets (by record id); throws otherwise.
CorpusStats corpus_stats(const std::vector<StageInput>& stages);

// `stage,papers,references` table.
void write_corpus_stats(const CorpusStats& stats, std::ostream& out);

}  // namespace idr
