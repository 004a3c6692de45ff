#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idr/record.hpp"

namespace idr {

// Text content of the three input files the toolkit consumes.
struct SynthCorpus {
  std::string records_jsonl;
  std::string catalog_csv;
  std::string abbrev_csv;
};

// Planted-trend corpus: every paper in period t cites exactly
// base_disciplines + t * spread_step distinct disciplines (capped at 27), so
// the per-period mean variety is strictly increasing by construction. When
// dominant_growth > 0 the first discipline's reference share additionally
// grows with t, driving balance down.
struct PlantedTrendOptions {
  std::uint64_t seed = 42;
  int start_year = 2000;
  int periods = 6;
  std::size_t papers_per_period = 30;
  std::size_t base_disciplines = 4;
  std::size_t spread_step = 1;
  std::uint32_t dominant_growth = 0;  // extra refs per period to discipline 0
  std::size_t noise_refs = 3;         // extra refs within the existing pool
};

SynthCorpus make_planted_trend_corpus(const PlantedTrendOptions& opts);

// Mixed corpus with uneven types, reference counts, abbreviated and unknown
// journals, months, and COVID-style keywords; exercises every filter.
struct VariedCorpusOptions {
  std::uint64_t seed = 42;
  std::size_t papers = 200;
  int start_year = 2018;
  int end_year = 2020;
};

SynthCorpus make_varied_corpus(const VariedCorpusOptions& opts);

}  // namespace idr
