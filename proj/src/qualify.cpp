#include "idr/qualify.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace idr {

std::string_view reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::Type: return "type";
    case RejectReason::RefCount: return "ref-count";
    case RejectReason::Coverage: return "coverage";
  }
  return "";
}

QualifyResult qualify(const std::vector<ScoredRecord>& inputs, const QualificationPolicy& policy) {
  QualifyResult result;
  for (const auto& item : inputs) {
    const PublicationRecord& rec = *item.record;
    const DisciplineAssignment& a = *item.assignment;
    if (!policy.allowed_types.contains(rec.doc_type)) {
      result.rejected.push_back({rec.id, RejectReason::Type});
    } else if (rec.references.size() < policy.min_references) {
      result.rejected.push_back({rec.id, RejectReason::RefCount});
    } else if (a.coverage < policy.min_coverage) {
      result.rejected.push_back({rec.id, RejectReason::Coverage});
    } else {
      result.qualified.push_back(item);
    }
  }
  return result;
}

namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

bool keyword_match(const PublicationRecord& record, const std::vector<std::string>& terms) {
  if (terms.empty()) throw std::invalid_argument("keyword term list is empty");
  std::string title = to_lower(record.title);
  std::string abstract = record.abstract ? to_lower(*record.abstract) : std::string();
  return std::any_of(terms.begin(), terms.end(), [&](const std::string& raw) {
    std::string term = to_lower(raw);
    return title.find(term) != std::string::npos ||
           (!abstract.empty() && abstract.find(term) != std::string::npos);
  });
}

std::vector<PublicationRecord> keyword_subset(const std::vector<PublicationRecord>& records,
                                              const std::vector<std::string>& terms) {
  if (terms.empty()) throw std::invalid_argument("keyword term list is empty");
  std::vector<PublicationRecord> out;
  for (const auto& rec : records) {
    if (keyword_match(rec, terms)) out.push_back(rec);
  }
  return out;
}

CorpusStats corpus_stats(const std::vector<StageInput>& stages) {
  CorpusStats stats;
  std::unordered_set<std::string> previous_ids;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const StageInput& stage = stages[i];
    StageCount count;
    count.stage = stage.name;
    count.papers = stage.records.size();
    std::unordered_set<std::string> ids;
    ids.reserve(stage.records.size());
    for (const auto& [id, refs] : stage.records) {
      count.references += refs;
      ids.insert(id);
      if (i > 0 && !previous_ids.contains(id)) {
        throw std::runtime_error("corpus stats: stage '" + stage.name + "' contains record '" +
                                 id + "' absent from the previous stage");
      }
    }
    stats.stages.push_back(std::move(count));
    previous_ids = std::move(ids);
  }
  return stats;
}

void write_corpus_stats(const CorpusStats& stats, std::ostream& out) {
  out << "stage,papers,references\n";
  for (const auto& s : stats.stages) {
    out << s.stage << ',' << s.papers << ',' << s.references << '\n';
  }
}

}  // namespace idr
