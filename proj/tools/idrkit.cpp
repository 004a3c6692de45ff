#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "idr/pipeline.hpp"

namespace {

int log_level() {
  const char* env = std::getenv("IDRKIT_LOG");
  if (!env) return 1;  // warn
  std::string v(env);
  if (v == "error" || v == "quiet") return 0;
  if (v == "warn") return 1;
  if (v == "info") return 2;
  if (v == "debug") return 3;
  return 1;
}

idr::DocType parse_allowed_type(const std::string& token) {
  if (token == "article") return idr::DocType::Article;
  if (token == "review") return idr::DocType::Review;
  if (token == "other") return idr::DocType::Other;
  throw idr::ConfigError("unknown document type in --allowed-types: " + token);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"idrkit - reference-list interdisciplinarity analytics"};
  app.set_config("--config", "", "key=value configuration file; command-line flags win");

  std::string records, catalog, abbrev_map, out_dir = "out";
  std::string granularity = "year", missing_month = "exclude";
  std::string from, to, td_mode = "canonical", disparity_basis = "global", exec = "";
  std::string allowed_types = "article,review", map_delimiter = ",";
  std::vector<std::string> query_terms;
  std::size_t min_refs = 5, max_nodes = 0;
  double min_coverage = 0.80, resolution = 1.0, overlap_threshold = 0.5;
  std::uint64_t seed = 42;
  bool filter_reference_types = true;

  app.add_option("--records", records, "line-delimited publication records (JSONL)")
      ->check(CLI::ExistingFile);
  app.add_option("--catalog", catalog, "journal -> discipline codes table (CSV)")
      ->check(CLI::ExistingFile);
  app.add_option("--abbrev-map", abbrev_map, "journal abbreviation -> full name table (CSV)")
      ->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--granularity", granularity, "period granularity: year|month")
      ->check(CLI::IsMember({"year", "month"}))
      ->capture_default_str();
  app.add_option("--from", from, "first period, YEAR or YEAR-MM");
  app.add_option("--to", to, "last period, YEAR or YEAR-MM");
  app.add_option("--min-refs", min_refs, "minimum reference count for qualification")
      ->capture_default_str();
  app.add_option("--min-coverage", min_coverage,
                 "minimum identified-reference ratio for qualification")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--query", query_terms,
                 "keyword term, repeatable; records matching any term are kept");
  app.add_option("--td-mode", td_mode, "true-diversity mode: canonical|paper-example")
      ->check(CLI::IsMember({"canonical", "paper-example"}))
      ->capture_default_str();
  app.add_option("--disparity-basis", disparity_basis,
                 "co-occurrence basis for disparity: global|per-window")
      ->check(CLI::IsMember({"global", "per-window"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for community detection")->capture_default_str();
  app.add_option("--resolution", resolution, "modularity resolution parameter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--overlap-threshold", overlap_threshold,
                 "normalized overlap needed to connect communities across periods")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--max-nodes", max_nodes,
                 "keep only the N most frequent disciplines per period graph (0 = no cap)")
      ->capture_default_str();
  app.add_option("--allowed-types", allowed_types,
                 "comma-separated document types kept by the type filter")
      ->capture_default_str();
  app.add_flag("--filter-reference-types,!--no-filter-reference-types", filter_reference_types,
               "apply the type filter to references of retained records");
  app.add_option("--missing-month", missing_month,
                 "records without a month under month granularity: exclude|january")
      ->check(CLI::IsMember({"exclude", "january"}))
      ->capture_default_str();
  app.add_option("--map-delimiter", map_delimiter, "delimiter of the catalog/abbreviation files")
      ->capture_default_str();
  app.add_option("--exec", exec, "kernel execution lane: serial|parallel")
      ->check(CLI::IsMember({"serial", "parallel"}));

  static const std::map<std::string, std::string> descriptions = {
      {"ingest", "parse and type-filter records, write ingested.jsonl"},
      {"qualify", "assign disciplines, apply qualification filters, write stats"},
      {"metrics", "per-paper variety/balance/TD and per-period series"},
      {"disparity", "export the discipline disparity matrix"},
      {"cooccur", "per-period co-occurrence graphs and communities"},
      {"streams", "align communities across periods, export streams"},
      {"report", "write run report and output manifest"},
      {"all", "run the whole pipeline"},
  };
  for (const auto& name : idr::subcommand_names()) {
    auto* sub = app.add_subcommand(name, descriptions.at(name));
    sub->fallthrough();
  }
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const int verbosity = log_level();
  try {
    idr::RunConfig cfg;
    cfg.records_path = records;
    cfg.catalog_path = catalog;
    cfg.abbrev_map_path = abbrev_map;
    cfg.out_dir = out_dir;
    cfg.min_references = min_refs;
    cfg.min_coverage = min_coverage;
    cfg.allowed_types.clear();
    {
      std::stringstream ss(allowed_types);
      std::string token;
      while (std::getline(ss, token, ',')) {
        if (!token.empty()) cfg.allowed_types.insert(parse_allowed_type(token));
      }
    }
    cfg.filter_reference_types = filter_reference_types;
    cfg.granularity = granularity == "month" ? idr::Granularity::Month : idr::Granularity::Year;
    cfg.missing_month = missing_month == "january" ? idr::MissingMonthPolicy::AssignJanuary
                                                   : idr::MissingMonthPolicy::Exclude;
    if (!from.empty()) cfg.from = idr::parse_period_bound(from);
    if (!to.empty()) cfg.to = idr::parse_period_bound(to);
    cfg.query_terms = query_terms;
    cfg.td_mode = idr::parse_td_mode(td_mode);
    cfg.disparity_basis = idr::parse_disparity_basis(disparity_basis);
    cfg.seed = seed;
    cfg.resolution = resolution;
    cfg.overlap_threshold = overlap_threshold;
    cfg.max_nodes_per_slot = max_nodes;
    if (map_delimiter.size() != 1) {
      throw idr::ConfigError("--map-delimiter must be a single character");
    }
    cfg.map_delimiter = map_delimiter[0];
    if (!exec.empty()) {
      cfg.exec = exec == "serial" ? idr::ExecMode::Serial : idr::ExecMode::Parallel;
    }

    const std::string subcommand = app.get_subcommands().front()->get_name();
    if (verbosity >= 2) std::cerr << "idrkit: running '" << subcommand << "'\n";

    idr::Pipeline pipeline(cfg);
    pipeline.run(subcommand);

    if (verbosity >= 1) {
      for (const auto& w : pipeline.warnings().items()) {
        std::cerr << "warning [" << w.stage << "] " << w.message << '\n';
      }
    }
    if (verbosity >= 2) {
      std::cerr << "idrkit: outputs written to " << cfg.out_dir.string() << '\n';
    }
    return 0;
  } catch (const idr::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const idr::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
