#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "idr/batch.hpp"
#include "idr/catalog.hpp"
#include "idr/cooccur.hpp"
#include "idr/metrics.hpp"
#include "idr/qualify.hpp"
#include "idr/records_io.hpp"
#include "idr/streams.hpp"
#include "idr/warnings.hpp"

namespace idr {

// Exit code 2: unusable configuration (missing paths, bad values).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Exit code 1: the data cannot support the requested analysis.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DisparityBasis { Global, PerWindow };
DisparityBasis parse_disparity_basis(const std::string& name);
std::string_view disparity_basis_name(DisparityBasis b);

struct PeriodBound {
  int year = 0;
  std::optional<int> month;
};
// "YYYY" or "YYYY-MM"
PeriodBound parse_period_bound(const std::string& text);

struct RunConfig {
  std::filesystem::path records_path;
  std::filesystem::path catalog_path;
  std::filesystem::path abbrev_map_path;
  std::filesystem::path out_dir = "out";
  char map_delimiter = ',';

  std::size_t min_references = 5;
  double min_coverage = 0.80;
  std::set<DocType> allowed_types{DocType::Article, DocType::Review};
  bool filter_reference_types = true;

  Granularity granularity = Granularity::Year;
  MissingMonthPolicy missing_month = MissingMonthPolicy::Exclude;
  std::optional<PeriodBound> from;
  std::optional<PeriodBound> to;
  std::vector<std::string> query_terms;

  TDMode td_mode = TDMode::Canonical;
  DisparityBasis disparity_basis = DisparityBasis::Global;
  std::uint64_t seed = 42;
  double resolution = 1.0;
  double overlap_threshold = 0.5;
  std::size_t max_nodes_per_slot = 0;  // 0 = no cap
  ExecMode exec = default_exec_mode();
};

struct OutputFile {
  std::string name;
  std::string digest;
  std::uint64_t bytes = 0;
};

// FNV-1a 64 as a content fingerprint for the output manifest.
std::string fnv1a64_hex(std::string_view bytes);

// Orchestrates the pipeline. Stages write their artifacts under
// cfg.out_dir; downstream stages load an artifact written by an earlier
// invocation when present and recompute from the inputs otherwise.
class Pipeline {
 public:
  explicit Pipeline(RunConfig cfg);

  // subcommand in {ingest, qualify, metrics, disparity, cooccur, streams,
  // report, all}; throws ConfigError / DataError.
  void run(const std::string& subcommand);

  const WarningLog& warnings() const { return warnings_; }

 private:
  struct PaperMeta {
    std::string id;
    int year = 0;
    std::optional<int> month;
    DocType doc_type = DocType::Other;
  };

  void stage_ingest();
  void stage_qualify();
  void stage_metrics();
  void stage_disparity();
  void stage_cooccur();
  void stage_streams(bool required);
  void stage_report();

  void ensure_records(bool allow_artifact);
  void ensure_catalog();
  void ensure_analysis(bool allow_artifact);
  void ensure_buckets();
  const DisparityMatrix& ensure_global_disparity();
  const std::map<Period, DisparityMatrix>& ensure_window_disparity();
  void ensure_slices();
  void ensure_scores();

  bool in_window(const Period& p) const;
  std::filesystem::path artifact(const std::string& name) const;
  void write_artifact(const std::string& name, const std::string& content);
  std::vector<OutputFile> scan_outputs() const;

  RunConfig cfg_;
  WarningLog warnings_;
  std::vector<std::pair<std::string, double>> timings_;

  bool have_records_ = false;
  std::vector<PublicationRecord> records_;
  std::vector<std::pair<std::string, std::size_t>> raw_stage_;  // (id, ref count) pre-filter

  bool have_catalog_ = false;
  DisciplineCatalog catalog_;
  AbbrevMap abbrev_map_;

  bool have_analysis_ = false;
  std::vector<DisciplineAssignment> analysis_;  // qualified + keyword-filtered
  std::vector<PaperMeta> analysis_meta_;        // aligned with analysis_
  std::optional<CorpusStats> stats_;            // set when recomputed from records
  std::vector<Rejection> rejections_;
  std::vector<std::string> qualified_ids_;

  bool have_buckets_ = false;
  std::map<Period, std::vector<std::size_t>> buckets_;  // indices into analysis_

  std::optional<DisparityMatrix> global_disparity_;
  std::optional<std::map<Period, DisparityMatrix>> window_disparity_;

  bool have_slices_ = false;
  std::vector<PeriodPartition> slices_;

  bool have_scores_ = false;
  std::vector<std::pair<Period, PaperScores>> scores_;
};

const std::vector<std::string>& subcommand_names();

}  // namespace idr
