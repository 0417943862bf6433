#pragma once

// Analysis bundle and its two renderings: JSON at full precision, and a
// text summary with numbers rounded to four decimals.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "suitescore/doe.hpp"
#include "suitescore/metrics.hpp"

namespace suitescore {

struct BoostingRow {
  std::string candidate;
  double arithmetic = 0.0;
  double geometric = 0.0;
  double harmonic = 0.0;
  double quadratic = 0.0;
};

struct ImprovementEntry {
  std::string label;
  std::string name_a;
  std::string name_b;
  double perf_a = 0.0;
  double perf_b = 0.0;
  MetricDirection direction = MetricDirection::HigherBetter;
  ComparisonResult result;
};

struct BreakevenEntry {
  double price_low = 0.0;
  double price_high = 0.0;
  double percent = 0.0;
};

struct ReportBundle {
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> seed;
  std::optional<double> alpha;

  std::vector<BoostingRow> boosting;
  std::optional<StandardizedMatrix> standardized;
  std::vector<std::pair<std::string, double>> radar_areas;
  std::vector<doe::EffectSet> effects;
  std::vector<ImprovementEntry> improvements;
  std::vector<BreakevenEntry> breakevens;

  // True when no analysis section is present (provenance alone does not count).
  bool empty() const noexcept;
};

// Both writers throw EmptyBundle for an empty bundle.
std::string write_report_json(const ReportBundle& bundle);
std::string write_report_text(const ReportBundle& bundle);

// Inverse of write_report_json.
ReportBundle read_report_json(std::string_view json_text);

}  // namespace suitescore
