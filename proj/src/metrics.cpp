#include "idr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace idr {

int variety(const DisciplineVector& v) {
  std::size_t n = v.nonzero_count();
  if (n == 0) throw std::domain_error("variety of an all-zero discipline vector");
  return static_cast<int>(n);
}

double balance(const DisciplineVector& v) {
  std::vector<double> x;
  x.reserve(kDisciplineCount);
  for (auto c : v.counts) {
    if (c != 0) x.push_back(static_cast<double>(c));
  }
  if (x.empty()) throw std::domain_error("balance of an all-zero discipline vector");
  std::sort(x.begin(), x.end());

  const double V = static_cast<double>(x.size());
  double total = 0.0;
  double weighted = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    total += x[i];
    weighted += (2.0 * static_cast<double>(i + 1) - V - 1.0) * x[i];
  }
  return 1.0 - weighted / (V * total);
}

DisparityMatrix disparity_matrix(const CooccurrenceCounts& counts, std::string provenance) {
  for (std::size_t i = 0; i < kDisciplineCount; ++i) {
    for (std::size_t j = 0; j < kDisciplineCount; ++j) {
      if (counts[i][j] < 0.0) {
        throw std::invalid_argument("co-occurrence matrix has a negative entry");
      }
      if (counts[i][j] != counts[j][i]) {
        throw std::invalid_argument("co-occurrence matrix is not symmetric");
      }
    }
  }

  std::array<double, kDisciplineCount> norms{};
  for (std::size_t i = 0; i < kDisciplineCount; ++i) {
    double sq = 0.0;
    for (std::size_t n = 0; n < kDisciplineCount; ++n) sq += counts[i][n] * counts[i][n];
    norms[i] = std::sqrt(sq);
  }

  DisparityMatrix m;
  m.provenance = std::move(provenance);
  for (std::size_t i = 0; i < kDisciplineCount; ++i) {
    if (norms[i] == 0.0) m.zero_rows.insert(discipline_at(i));
  }
  for (std::size_t i = 0; i < kDisciplineCount; ++i) {
    m.d[i][i] = 0.0;
    for (std::size_t j = i + 1; j < kDisciplineCount; ++j) {
      double dij;
      if (norms[i] == 0.0 || norms[j] == 0.0) {
        dij = 1.0;
      } else {
        double dot = 0.0;
        for (std::size_t n = 0; n < kDisciplineCount; ++n) dot += counts[i][n] * counts[j][n];
        dij = 1.0 - dot / (norms[i] * norms[j]);
        dij = std::clamp(dij, 0.0, 1.0);
      }
      m.d[i][j] = dij;
      m.d[j][i] = dij;
    }
  }
  return m;
}

namespace {

void format_double(std::ostream& out, double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  out << buf;
}

}  // namespace

void write_disparity_matrix(const DisparityMatrix& m, std::ostream& out) {
  out << "code";
  for (std::size_t j = 0; j < kDisciplineCount; ++j) {
    out << ',' << abbreviation(discipline_at(j));
  }
  out << '\n';
  for (std::size_t i = 0; i < kDisciplineCount; ++i) {
    out << abbreviation(discipline_at(i));
    for (std::size_t j = 0; j < kDisciplineCount; ++j) {
      out << ',';
      format_double(out, m.d[i][j]);
    }
    out << '\n';
  }
}

DisparityMatrix read_disparity_matrix(std::istream& in) {
  DisparityMatrix m;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("disparity table is empty");
  for (std::size_t i = 0; i < kDisciplineCount; ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("disparity table is truncated");
    std::stringstream row(line);
    std::string cell;
    if (!std::getline(row, cell, ',')) throw std::runtime_error("disparity row is empty");
    if (cell != abbreviation(discipline_at(i))) {
      throw std::runtime_error("disparity table rows out of order at '" + cell + "'");
    }
    for (std::size_t j = 0; j < kDisciplineCount; ++j) {
      if (!std::getline(row, cell, ',')) throw std::runtime_error("disparity row is truncated");
      m.d[i][j] = std::stod(cell);
    }
  }
  return m;
}

TDMode parse_td_mode(const std::string& name) {
  if (name == "canonical") return TDMode::Canonical;
  if (name == "paper-example") return TDMode::PaperExample;
  throw std::invalid_argument("unknown td mode: " + name);
}

std::string_view td_mode_name(TDMode mode) {
  return mode == TDMode::Canonical ? "canonical" : "paper-example";
}

double true_diversity(const DisciplineVector& v, const DisparityMatrix& D, TDMode mode) {
  const double total = static_cast<double>(v.total());
  if (total == 0.0) throw std::domain_error("true diversity of an all-zero discipline vector");

  std::array<double, kDisciplineCount> p{};
  std::vector<std::size_t> present;
  for (std::size_t i = 0; i < kDisciplineCount; ++i) {
    if (v.counts[i] != 0) {
      p[i] = static_cast<double>(v.counts[i]) / total;
      present.push_back(i);
    }
  }

  if (mode == TDMode::Canonical) {
    // All ordered pairs including i == j, where 1 - d_ii == 1.
    double denom = 0.0;
    for (std::size_t a : present) {
      denom += p[a] * p[a];
      for (std::size_t b : present) {
        if (b != a) denom += (1.0 - D.d[a][b]) * p[a] * p[b];
      }
    }
    return 1.0 / denom;
  }

  double denom = 0.0;
  for (std::size_t ai = 0; ai < present.size(); ++ai) {
    for (std::size_t bi = ai + 1; bi < present.size(); ++bi) {
      denom += D.d[present[ai]][present[bi]] * p[present[ai]] * p[present[bi]];
    }
  }
  if (denom == 0.0) {
    throw std::domain_error("paper-example true diversity undefined: zero denominator");
  }
  return 1.0 / denom;
}

MetricSeries aggregate_series(const std::vector<std::pair<Period, PaperScores>>& scores) {
  struct Acc {
    std::vector<double> values;
  };
  std::map<Period, std::map<std::string, Acc>> groups;
  for (const auto& [period, s] : scores) {
    auto& g = groups[period];
    g["variety"].values.push_back(static_cast<double>(s.variety));
    g["balance"].values.push_back(s.balance);
    if (s.true_diversity) g["td"].values.push_back(*s.true_diversity);
  }

  MetricSeries series;
  for (const auto& [period, metrics] : groups) {
    for (const auto& [name, acc] : metrics) {
      if (acc.values.empty()) continue;
      SeriesPoint pt;
      pt.n = acc.values.size();
      double sum = 0.0;
      for (double v : acc.values) sum += v;
      pt.mean = sum / static_cast<double>(pt.n);
      if (pt.n == 1) {
        pt.ci_low = pt.mean;
        pt.ci_high = pt.mean;
        pt.degenerate = true;
      } else {
        double sq = 0.0;
        for (double v : acc.values) sq += (v - pt.mean) * (v - pt.mean);
        double sd = std::sqrt(sq / static_cast<double>(pt.n - 1));
        double half = 1.96 * sd / std::sqrt(static_cast<double>(pt.n));
        pt.ci_low = pt.mean - half;
        pt.ci_high = pt.mean + half;
      }
      series.points[period][name] = pt;
    }
  }
  return series;
}

void write_metric_series(const MetricSeries& series, std::ostream& out) {
  out << "period,metric,n,mean,ci_low,ci_high\n";
  for (const auto& [period, metrics] : series.points) {
    for (const auto& [name, pt] : metrics) {
      out << period.str() << ',' << name << ',' << pt.n << ',';
      format_double(out, pt.mean);
      out << ',';
      format_double(out, pt.ci_low);
      out << ',';
      format_double(out, pt.ci_high);
      out << '\n';
    }
  }
}

}  // namespace idr
