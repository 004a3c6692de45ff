#include "idr/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "idr/graph_export.hpp"

namespace idr {

namespace {

using ordered_json = nlohmann::ordered_json;

class StageTimer {
 public:
  StageTimer(std::vector<std::pair<std::string, double>>& sink, std::string name)
      : sink_(sink), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    auto elapsed = std::chrono::steady_clock::now() - start_;
    sink_.emplace_back(name_, std::chrono::duration<double>(elapsed).count());
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace

DisparityBasis parse_disparity_basis(const std::string& name) {
  if (name == "global") return DisparityBasis::Global;
  if (name == "per-window") return DisparityBasis::PerWindow;
  throw ConfigError("unknown disparity basis: " + name);
}

std::string_view disparity_basis_name(DisparityBasis b) {
  return b == DisparityBasis::Global ? "global" : "per-window";
}

PeriodBound parse_period_bound(const std::string& text) {
  PeriodBound bound;
  int year = 0, month = 0;
  if (std::sscanf(text.c_str(), "%d-%d", &year, &month) == 2) {
    if (month < 1 || month > 12) throw ConfigError("month out of range in period: " + text);
    bound.year = year;
    bound.month = month;
  } else if (std::sscanf(text.c_str(), "%d", &year) == 1) {
    bound.year = year;
  } else {
    throw ConfigError("cannot parse period bound: " + text);
  }
  return bound;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names = {"ingest", "qualify", "metrics", "disparity",
                                                 "cooccur", "streams", "report", "all"};
  return names;
}

Pipeline::Pipeline(RunConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.min_coverage < 0.0 || cfg_.min_coverage > 1.0) {
    throw ConfigError("min-coverage must lie in [0,1]");
  }
  if (cfg_.resolution <= 0.0) throw ConfigError("resolution must be positive");
  if (cfg_.overlap_threshold < 0.0 || cfg_.overlap_threshold > 1.0) {
    throw ConfigError("overlap-threshold must lie in [0,1]");
  }
  if (cfg_.min_references < 1) throw ConfigError("min-refs must be at least 1");
  if (cfg_.allowed_types.empty()) throw ConfigError("allowed-types must not be empty");
}

std::filesystem::path Pipeline::artifact(const std::string& name) const {
  return cfg_.out_dir / name;
}

void Pipeline::write_artifact(const std::string& name, const std::string& content) {
  std::filesystem::create_directories(cfg_.out_dir);
  auto final_path = artifact(name);
  auto tmp_path = artifact(name + ".tmp");
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + tmp_path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp_path.string());
  }
  std::filesystem::rename(tmp_path, final_path);
}

void Pipeline::ensure_records(bool allow_artifact) {
  if (have_records_) return;

  if (allow_artifact && std::filesystem::exists(artifact("ingested.jsonl"))) {
    std::ifstream in(artifact("ingested.jsonl"));
    ParseResult parsed = parse_records(in);
    warnings_.append(parsed.warnings);
    raw_stage_.clear();
    for (const auto& r : parsed.records) raw_stage_.emplace_back(r.id, r.references.size());
    records_ = filter_doc_types(parsed.records,
                                {cfg_.allowed_types, cfg_.filter_reference_types});
    have_records_ = true;
    return;
  }

  if (cfg_.records_path.empty()) {
    throw ConfigError("no records file configured (--records)");
  }
  if (!std::filesystem::exists(cfg_.records_path)) {
    throw ConfigError("records file not found: " + cfg_.records_path.string());
  }
  std::ifstream in(cfg_.records_path);
  ParseResult parsed = parse_records(in);
  warnings_.append(parsed.warnings);
  raw_stage_.clear();
  raw_stage_.reserve(parsed.records.size());
  for (const auto& r : parsed.records) raw_stage_.emplace_back(r.id, r.references.size());
  records_ = filter_doc_types(parsed.records, {cfg_.allowed_types, cfg_.filter_reference_types});
  have_records_ = true;
}

void Pipeline::ensure_catalog() {
  if (have_catalog_) return;
  if (cfg_.catalog_path.empty()) {
    throw ConfigError("no discipline catalog configured (--catalog)");
  }
  if (!std::filesystem::exists(cfg_.catalog_path)) {
    throw ConfigError("catalog file not found: " + cfg_.catalog_path.string());
  }
  CatalogLoadResult loaded = load_catalog(cfg_.catalog_path, cfg_.map_delimiter);
  warnings_.append(loaded.warnings);
  catalog_ = std::move(loaded.catalog);

  if (cfg_.abbrev_map_path.empty()) {
    warnings_.add("config", "no abbreviation map configured; journal abbreviations will not "
                            "be expanded");
  } else {
    if (!std::filesystem::exists(cfg_.abbrev_map_path)) {
      throw ConfigError("abbreviation map not found: " + cfg_.abbrev_map_path.string());
    }
    AbbrevLoadResult loaded_map = load_abbreviation_map(cfg_.abbrev_map_path, cfg_.map_delimiter);
    warnings_.append(loaded_map.warnings);
    abbrev_map_ = std::move(loaded_map.map);
  }
  have_catalog_ = true;
}

void Pipeline::ensure_analysis(bool allow_artifact) {
  if (have_analysis_) return;

  if (allow_artifact && std::filesystem::exists(artifact("assignments.jsonl"))) {
    std::ifstream in(artifact("assignments.jsonl"));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object()) {
        throw DataError("assignments.jsonl line " + std::to_string(line_no) + " is malformed");
      }
      PaperMeta meta;
      meta.id = j.at("id").get<std::string>();
      meta.year = j.at("year").get<int>();
      if (j.contains("month")) meta.month = j["month"].get<int>();
      meta.doc_type = parse_doc_type(j.value("type", "other"));

      DisciplineAssignment a;
      a.paper_id = meta.id;
      for (const auto& code : j.at("citing")) {
        if (auto d = parse_discipline(code.get<std::string>())) a.citing_disciplines.insert(*d);
      }
      for (const auto& ref : j.at("refs")) {
        DisciplineSet s;
        for (const auto& code : ref) {
          if (auto d = parse_discipline(code.get<std::string>())) s.insert(*d);
        }
        a.ref_disciplines.push_back(s);
      }
      a.coverage = j.at("coverage").get<double>();
      a.reference_free = a.ref_disciplines.empty();
      analysis_meta_.push_back(std::move(meta));
      analysis_.push_back(std::move(a));
    }
    have_analysis_ = true;
    return;
  }

  ensure_records(allow_artifact);
  ensure_catalog();

  std::vector<DisciplineAssignment> assignments =
      assign_records(records_, catalog_, abbrev_map_, cfg_.exec);

  std::vector<ScoredRecord> identifiable;
  identifiable.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (!assignments[i].citing_disciplines.empty()) {
      identifiable.push_back({&records_[i], &assignments[i]});
    }
  }

  QualificationPolicy policy{cfg_.min_references, cfg_.min_coverage, cfg_.allowed_types};
  QualifyResult q = qualify(identifiable, policy);
  rejections_ = q.rejected;

  std::vector<ScoredRecord> analysis_set;
  if (cfg_.query_terms.empty()) {
    analysis_set = q.qualified;
  } else {
    for (const auto& item : q.qualified) {
      if (keyword_match(*item.record, cfg_.query_terms)) analysis_set.push_back(item);
    }
  }

  std::vector<StageInput> stages;
  stages.push_back({"raw", raw_stage_});
  auto stage_of = [](const std::string& name, const std::vector<ScoredRecord>& items) {
    StageInput s;
    s.name = name;
    s.records.reserve(items.size());
    for (const auto& item : items) {
      s.records.emplace_back(item.record->id, item.record->references.size());
    }
    return s;
  };
  stages.push_back(stage_of("identifiable", identifiable));
  stages.push_back(stage_of("qualified", q.qualified));
  if (!cfg_.query_terms.empty()) stages.push_back(stage_of("keyword-subset", analysis_set));
  stats_ = corpus_stats(stages);

  qualified_ids_.clear();
  for (const auto& item : q.qualified) qualified_ids_.push_back(item.record->id);

  analysis_.clear();
  analysis_meta_.clear();
  analysis_.reserve(analysis_set.size());
  for (const auto& item : analysis_set) {
    analysis_.push_back(*item.assignment);
    analysis_meta_.push_back(
        {item.record->id, item.record->year, item.record->month, item.record->doc_type});
  }
  have_analysis_ = true;
}

bool Pipeline::in_window(const Period& p) const {
  if (cfg_.from) {
    if (p.year < cfg_.from->year) return false;
    if (p.granularity == Granularity::Month && p.year == cfg_.from->year &&
        p.month < cfg_.from->month.value_or(1))
      return false;
  }
  if (cfg_.to) {
    if (p.year > cfg_.to->year) return false;
    if (p.granularity == Granularity::Month && p.year == cfg_.to->year &&
        p.month > cfg_.to->month.value_or(12))
      return false;
  }
  return true;
}

void Pipeline::ensure_buckets() {
  if (have_buckets_) return;
  for (std::size_t i = 0; i < analysis_.size(); ++i) {
    const PaperMeta& meta = analysis_meta_[i];
    auto p = derive_period(meta.year, meta.month, cfg_.granularity,
                           cfg_.missing_month == MissingMonthPolicy::AssignJanuary);
    if (!p) {
      warnings_.add("bucket",
                    "record '" + meta.id + "': no month under month granularity, excluded");
      continue;
    }
    if (!in_window(*p)) {
      warnings_.add("bucket", "record '" + meta.id + "': period " + p->str() +
                                  " outside the analysis window, excluded");
      continue;
    }
    buckets_[*p].push_back(i);
  }
  have_buckets_ = true;
}

const DisparityMatrix& Pipeline::ensure_global_disparity() {
  if (!global_disparity_) {
    CooccurrenceCounts counts = cooccurrence_counts_batch(analysis_, cfg_.exec);
    global_disparity_ = disparity_matrix(
        counts, "global co-occurrence basis over " + std::to_string(analysis_.size()) + " papers");
    if (!global_disparity_->zero_rows.empty()) {
      std::string joined;
      global_disparity_->zero_rows.for_each([&](Discipline d) {
        if (!joined.empty()) joined += ", ";
        joined += abbreviation(d);
      });
      warnings_.add("disparity",
                    "disciplines absent from the corpus carry maximal disparity: " + joined);
    }
  }
  return *global_disparity_;
}

const std::map<Period, DisparityMatrix>& Pipeline::ensure_window_disparity() {
  if (!window_disparity_) {
    ensure_buckets();
    window_disparity_.emplace();
    for (const auto& [period, indices] : buckets_) {
      std::vector<DisciplineAssignment> window;
      window.reserve(indices.size());
      for (std::size_t i : indices) window.push_back(analysis_[i]);
      CooccurrenceCounts counts = cooccurrence_counts_serial(window);
      window_disparity_->emplace(
          period, disparity_matrix(counts, "window " + period.str() + " co-occurrence basis"));
    }
  }
  return *window_disparity_;
}

void Pipeline::ensure_scores() {
  if (have_scores_) return;
  ensure_buckets();

  auto record_score = [&](Period period, std::size_t index,
                          const std::optional<PaperScores>& s) {
    const std::string& id = analysis_meta_[index].id;
    if (!s) {
      warnings_.add("metrics",
                    "paper '" + id + "': no identified reference disciplines, not scored");
      return;
    }
    if (!s->true_diversity && cfg_.td_mode == TDMode::PaperExample) {
      warnings_.add("metrics", "paper '" + id +
                                   "': true diversity undefined in paper-example mode, "
                                   "excluded from the td series");
    }
    scores_.emplace_back(period, *s);
  };

  if (cfg_.disparity_basis == DisparityBasis::Global) {
    const DisparityMatrix& d = ensure_global_disparity();
    auto scored = score_papers(analysis_, d, cfg_.td_mode, cfg_.exec);
    for (const auto& [period, indices] : buckets_) {
      for (std::size_t i : indices) record_score(period, i, scored[i]);
    }
  } else {
    const auto& windows = ensure_window_disparity();
    for (const auto& [period, indices] : buckets_) {
      std::vector<DisciplineAssignment> window;
      window.reserve(indices.size());
      for (std::size_t i : indices) window.push_back(analysis_[i]);
      auto scored = score_papers(window, windows.at(period), cfg_.td_mode, cfg_.exec);
      for (std::size_t k = 0; k < indices.size(); ++k) {
        record_score(period, indices[k], scored[k]);
      }
    }
  }
  have_scores_ = true;
}

void Pipeline::ensure_slices() {
  if (have_slices_) return;
  ensure_buckets();
  for (const auto& [period, indices] : buckets_) {
    std::vector<const DisciplineAssignment*> papers;
    papers.reserve(indices.size());
    for (std::size_t i : indices) papers.push_back(&analysis_[i]);
    CooccurrenceGraph g = build_cooccurrence(papers, period);
    if (g.empty()) {
      warnings_.add("cooccur", "period " + period.str() +
                                   ": no identified disciplines, no co-occurrence graph");
      continue;
    }
    if (cfg_.max_nodes_per_slot > 0 && g.nodes.size() > cfg_.max_nodes_per_slot) {
      std::size_t dropped = g.nodes.size() - cfg_.max_nodes_per_slot;
      g = truncate_to_top_nodes(g, cfg_.max_nodes_per_slot);
      warnings_.add("cooccur", "period " + period.str() + ": " + std::to_string(dropped) +
                                   " low-count disciplines dropped by the node cap");
    }
    CooccurrenceGraph sim = edge_similarity(g);

    std::vector<Discipline> nodes = graph_nodes(sim);
    std::map<Discipline, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
    WeightedGraph wg(nodes.size());
    for (const auto& [pair, similarity] : sim.edge_similarity) {
      wg.add_edge(index[pair.a], index[pair.b], similarity);
    }
    Partition partition = detect_communities(wg, cfg_.seed, cfg_.resolution);
    slices_.push_back({period, std::move(sim), std::move(partition)});
  }
  have_slices_ = true;
}

void Pipeline::stage_ingest() {
  StageTimer timer(timings_, "ingest");
  ensure_records(false);
  std::ostringstream out;
  serialize_records(records_, out);
  write_artifact("ingested.jsonl", out.str());
}

void Pipeline::stage_qualify() {
  StageTimer timer(timings_, "qualify");
  ensure_analysis(false);

  std::ostringstream stats_out;
  write_corpus_stats(*stats_, stats_out);
  write_artifact("corpus_stats.csv", stats_out.str());

  std::ostringstream rej;
  rej << "id,reason\n";
  for (const auto& r : rejections_) {
    rej << r.id << ',' << reject_reason_name(r.reason) << '\n';
  }
  write_artifact("rejections.csv", rej.str());

  std::ostringstream ids;
  for (const auto& id : qualified_ids_) ids << id << '\n';
  write_artifact("qualified_ids.txt", ids.str());

  std::ostringstream rows;
  for (std::size_t i = 0; i < analysis_.size(); ++i) {
    const PaperMeta& meta = analysis_meta_[i];
    const DisciplineAssignment& a = analysis_[i];
    ordered_json j;
    j["id"] = meta.id;
    j["year"] = meta.year;
    if (meta.month) j["month"] = *meta.month;
    j["type"] = std::string(doc_type_name(meta.doc_type));
    auto citing = ordered_json::array();
    a.citing_disciplines.for_each(
        [&](Discipline d) { citing.push_back(std::string(abbreviation(d))); });
    j["citing"] = std::move(citing);
    j["coverage"] = a.coverage;
    auto refs = ordered_json::array();
    for (const auto& s : a.ref_disciplines) {
      auto codes = ordered_json::array();
      s.for_each([&](Discipline d) { codes.push_back(std::string(abbreviation(d))); });
      refs.push_back(std::move(codes));
    }
    j["refs"] = std::move(refs);
    rows << j.dump() << '\n';
  }
  write_artifact("assignments.jsonl", rows.str());

  if (analysis_.empty()) {
    throw DataError("qualified corpus is empty under the configured policy");
  }
}

void Pipeline::stage_metrics() {
  StageTimer timer(timings_, "metrics");
  ensure_analysis(true);
  if (analysis_.empty()) throw DataError("qualified corpus is empty");
  ensure_scores();
  if (scores_.empty()) throw DataError("no scoreable papers in the analysis window");

  std::ostringstream rows;
  rows << "id,period,variety,balance,td\n";
  for (const auto& [period, s] : scores_) {
    rows << s.paper_id << ',' << period.str() << ',' << s.variety << ','
         << format_double(s.balance) << ',';
    if (s.true_diversity) rows << format_double(*s.true_diversity);
    rows << '\n';
  }
  write_artifact("paper_scores.csv", rows.str());

  MetricSeries series = aggregate_series(scores_);
  std::ostringstream table;
  write_metric_series(series, table);
  write_artifact("metric_series.csv", table.str());
}

void Pipeline::stage_disparity() {
  StageTimer timer(timings_, "disparity");
  ensure_analysis(true);
  if (analysis_.empty()) throw DataError("qualified corpus is empty");

  if (cfg_.disparity_basis == DisparityBasis::Global) {
    std::ostringstream out;
    write_disparity_matrix(ensure_global_disparity(), out);
    write_artifact("disparity.csv", out.str());
  } else {
    for (const auto& [period, matrix] : ensure_window_disparity()) {
      std::ostringstream out;
      write_disparity_matrix(matrix, out);
      write_artifact("disparity_" + period.str() + ".csv", out.str());
    }
  }
}

void Pipeline::stage_cooccur() {
  StageTimer timer(timings_, "cooccur");
  ensure_analysis(true);
  if (analysis_.empty()) throw DataError("qualified corpus is empty");
  ensure_slices();
  if (slices_.empty()) throw DataError("no co-occurrence graphs in the analysis window");

  std::ostringstream communities;
  communities << "period,community,label,size,members\n";
  for (const auto& slice : slices_) {
    {
      std::ostringstream out;
      export_graphml(slice.graph, &slice.partition, out);
      write_artifact("cooccur_" + slice.period.str() + ".graphml", out.str());
    }
    {
      std::ostringstream out;
      export_dot(slice.graph, &slice.partition, out);
      write_artifact("cooccur_" + slice.period.str() + ".dot", out.str());
    }
    std::vector<Discipline> nodes = graph_nodes(slice.graph);
    std::vector<std::vector<Discipline>> members(slice.partition.community_count);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      members[slice.partition.assignment[i]].push_back(nodes[i]);
    }
    for (std::size_t c = 0; c < members.size(); ++c) {
      std::uint64_t size = 0;
      std::string joined;
      for (Discipline d : members[c]) {
        size += slice.graph.node_count(d);
        if (!joined.empty()) joined += ';';
        joined += abbreviation(d);
      }
      communities << slice.period.str() << ',' << c << ','
                  << label_community(members[c], slice.graph) << ',' << size << ',' << joined
                  << '\n';
    }
  }
  write_artifact("communities.csv", communities.str());
}

void Pipeline::stage_streams(bool required) {
  StageTimer timer(timings_, "streams");
  ensure_analysis(true);
  if (analysis_.empty()) throw DataError("qualified corpus is empty");
  ensure_slices();
  if (slices_.size() < 2) {
    if (required) throw DataError("stream alignment needs at least 2 periods, found " +
                                  std::to_string(slices_.size()));
    warnings_.add("streams", "fewer than 2 periods, stream alignment skipped");
    return;
  }

  StreamGraph s = align_streams(slices_, cfg_.overlap_threshold);
  {
    std::ostringstream out;
    export_streams(s, StreamFormat::SankeyJson, out);
    write_artifact("streams.sankey.json", out.str());
  }
  {
    std::ostringstream out;
    export_streams(s, StreamFormat::GraphML, out);
    write_artifact("streams.graphml", out.str());
  }
  {
    std::ostringstream out;
    export_streams(s, StreamFormat::Dot, out);
    write_artifact("streams.dot", out.str());
  }
}

std::vector<OutputFile> Pipeline::scan_outputs() const {
  std::vector<OutputFile> outputs;
  if (!std::filesystem::exists(cfg_.out_dir)) return outputs;
  for (const auto& entry : std::filesystem::directory_iterator(cfg_.out_dir)) {
    if (!entry.is_regular_file()) continue;
    std::string name = entry.path().filename().string();
    if (name == "run_report.json" || name == "manifest.txt" || name.ends_with(".tmp")) continue;
    std::string content = read_file(entry.path());
    outputs.push_back({name, fnv1a64_hex(content), content.size()});
  }
  std::sort(outputs.begin(), outputs.end(),
            [](const OutputFile& a, const OutputFile& b) { return a.name < b.name; });
  return outputs;
}

void Pipeline::stage_report() {
  StageTimer timer(timings_, "report");
  std::vector<OutputFile> outputs = scan_outputs();

  std::ostringstream manifest;
  for (const auto& f : outputs) {
    manifest << f.digest << "  " << f.name << '\n';
  }
  write_artifact("manifest.txt", manifest.str());

  ordered_json doc;
  ordered_json config;
  config["records"] = cfg_.records_path.string();
  config["catalog"] = cfg_.catalog_path.string();
  config["abbrev_map"] = cfg_.abbrev_map_path.string();
  config["out"] = cfg_.out_dir.string();
  config["min_refs"] = cfg_.min_references;
  config["min_coverage"] = cfg_.min_coverage;
  auto types = ordered_json::array();
  for (DocType t : cfg_.allowed_types) types.push_back(std::string(doc_type_name(t)));
  config["allowed_types"] = std::move(types);
  config["filter_reference_types"] = cfg_.filter_reference_types;
  config["granularity"] = cfg_.granularity == Granularity::Year ? "year" : "month";
  config["missing_month"] =
      cfg_.missing_month == MissingMonthPolicy::Exclude ? "exclude" : "january";
  auto bound_str = [](const std::optional<PeriodBound>& b) -> ordered_json {
    if (!b) return nullptr;
    if (!b->month) return std::to_string(b->year);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", b->year, *b->month);
    return std::string(buf);
  };
  config["from"] = bound_str(cfg_.from);
  config["to"] = bound_str(cfg_.to);
  config["query"] = cfg_.query_terms;
  config["td_mode"] = std::string(td_mode_name(cfg_.td_mode));
  config["disparity_basis"] = std::string(disparity_basis_name(cfg_.disparity_basis));
  config["seed"] = cfg_.seed;
  config["resolution"] = cfg_.resolution;
  config["overlap_threshold"] = cfg_.overlap_threshold;
  config["max_nodes"] = cfg_.max_nodes_per_slot;
  config["exec"] = cfg_.exec == ExecMode::Parallel ? "parallel" : "serial";
  doc["config"] = std::move(config);

  if (stats_) {
    auto stages = ordered_json::array();
    for (const auto& s : stats_->stages) {
      ordered_json row;
      row["stage"] = s.stage;
      row["papers"] = s.papers;
      row["references"] = s.references;
      stages.push_back(std::move(row));
    }
    doc["stats"] = std::move(stages);
  } else {
    doc["stats"] = nullptr;
  }

  auto warn = ordered_json::array();
  for (const auto& w : warnings_.items()) {
    ordered_json row;
    row["stage"] = w.stage;
    row["message"] = w.message;
    warn.push_back(std::move(row));
  }
  doc["warnings"] = std::move(warn);

  auto files = ordered_json::array();
  for (const auto& f : outputs) {
    ordered_json row;
    row["file"] = f.name;
    row["digest"] = f.digest;
    row["bytes"] = f.bytes;
    files.push_back(std::move(row));
  }
  doc["outputs"] = std::move(files);

  auto times = ordered_json::array();
  for (const auto& [stage, seconds] : timings_) {
    ordered_json row;
    row["stage"] = stage;
    row["seconds"] = seconds;
    times.push_back(std::move(row));
  }
  doc["timings"] = std::move(times);

  write_artifact("run_report.json", doc.dump(2) + "\n");
}

void Pipeline::run(const std::string& subcommand) {
  if (subcommand == "ingest") {
    stage_ingest();
  } else if (subcommand == "qualify") {
    stage_qualify();
  } else if (subcommand == "metrics") {
    stage_metrics();
  } else if (subcommand == "disparity") {
    stage_disparity();
  } else if (subcommand == "cooccur") {
    stage_cooccur();
  } else if (subcommand == "streams") {
    stage_streams(true);
  } else if (subcommand == "report") {
    // report only rescans; nothing else to do
  } else if (subcommand == "all") {
    stage_ingest();
    stage_qualify();
    stage_metrics();
    stage_disparity();
    stage_cooccur();
    stage_streams(false);
  } else {
    throw ConfigError("unknown subcommand: " + subcommand);
  }
  stage_report();
}

}  // namespace idr
