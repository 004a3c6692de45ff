#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idr/discipline.hpp"
#include "idr/record.hpp"

namespace idr {

// Number of disciplines with a nonzero count; throws on an all-zero vector.
int variety(const DisciplineVector& v);

// 1 - Gini over the nonzero counts; 1 means a perfectly even distribution.
// Sorting the nonzero counts ascending as x_1..x_V:
//   B = 1 - sum_i (2i - V - 1) x_i / (V * sum_i x_i)
double balance(const DisciplineVector& v);

// Symmetric 27x27 distance matrix, d_ij = 1 - cosine(row_i, row_j) of the
// discipline co-occurrence count matrix. Disciplines with an all-zero row
// get maximal disparity against everything and are flagged.
struct DisparityMatrix {
  std::array<std::array<double, kDisciplineCount>, kDisciplineCount> d{};
  DisciplineSet zero_rows;
  std::string provenance;

  double at(Discipline i, Discipline j) const { return d[index_of(i)][index_of(j)]; }
};

using CooccurrenceCounts = std::array<std::array<double, kDisciplineCount>, kDisciplineCount>;

DisparityMatrix disparity_matrix(const CooccurrenceCounts& counts,
                                 std::string provenance = {});

// 27x27 delimited table with code headers.
void write_disparity_matrix(const DisparityMatrix& m, std::ostream& out);
DisparityMatrix read_disparity_matrix(std::istream& in);

// The printed formula and its worked example disagree; both are shipped as
// explicit modes. Canonical is the literal reciprocal double sum over all
// ordered pairs (a Hill-type number, >= 1 and exactly 1 for a single
// discipline). PaperExample is the reciprocal of sum_{i<j} d_ij p_i p_j,
// which reproduces the published worked value and is undefined when every
// pairwise term vanishes.
enum class TDMode { Canonical, PaperExample };

TDMode parse_td_mode(const std::string& name);
std::string_view td_mode_name(TDMode mode);

double true_diversity(const DisciplineVector& v, const DisparityMatrix& D, TDMode mode);

struct PaperScores {
  std::string paper_id;
  int variety = 0;
  double balance = 0.0;
  // Unset when the mode leaves TD undefined (PaperExample with one
  // discipline or all-zero pairwise disparities).
  std::optional<double> true_diversity;
  TDMode mode = TDMode::Canonical;
};

struct SeriesPoint {
  std::size_t n = 0;
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  bool degenerate = false;  // n == 1, interval collapsed
};

struct MetricSeries {
  // period -> metric name -> point; metric names: variety, balance, td.
  std::map<Period, std::map<std::string, SeriesPoint>> points;
};

// Mean and 95% normal-approximation interval (1.96 * s/sqrt(n), sample
// standard deviation with n-1 denominator) per period and metric.
MetricSeries aggregate_series(const std::vector<std::pair<Period, PaperScores>>& scores);

// `period,metric,n,mean,ci_low,ci_high` table.
void write_metric_series(const MetricSeries& series, std::ostream& out);

}  // namespace idr
