#pragma once

// Boosting metrics: single summary scores over a suite of benchmark results.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace suitescore {

enum class MetricDirection { HigherBetter, LowerBetter };

std::string_view to_string(MetricDirection direction) noexcept;  // "HB" / "LB"
// Accepts "HB" or "LB"; anything else is std::nullopt.
std::optional<MetricDirection> parse_direction(std::string_view text) noexcept;

struct BenchmarkValue {
  std::string metric_name;
  double value = 0.0;
  std::string unit;
  MetricDirection direction;

  friend bool operator==(const BenchmarkValue&, const BenchmarkValue&) = default;
};

struct CandidateProfile {
  std::string candidate_name;
  std::vector<BenchmarkValue> values;

  friend bool operator==(const CandidateProfile&, const CandidateProfile&) = default;
};

// Throws EmptyInput, DuplicateMetric or NonPositiveValue.
void validate_profile(const CandidateProfile& profile);

// entries[metric][candidate], each in (0, 1], every row's maximum exactly 1.
struct StandardizedMatrix {
  std::vector<std::string> metric_names;
  std::vector<std::string> candidate_names;
  std::vector<std::vector<double>> entries;

  double at(std::size_t metric, std::size_t candidate) const {
    return entries[metric][candidate];
  }
  // One candidate's values in metric (axis) order.
  std::vector<double> column(std::size_t candidate) const;

  friend bool operator==(const StandardizedMatrix&, const StandardizedMatrix&) = default;
};

struct ComparisonResult {
  double improvement_percent = 0.0;
  std::string better_candidate;  // empty on a tie
  bool tie = false;
};

enum class MeanKind { Arithmetic, Geometric, Harmonic, Quadratic };

std::string_view to_string(MeanKind kind) noexcept;
std::optional<MeanKind> parse_mean_kind(std::string_view text) noexcept;

// All four means require a non-empty sequence of finite, strictly positive
// values (EmptyInput / NonPositiveValue otherwise) and return a value clamped
// into [min, max] of the input, which the exact result always satisfies.
double arithmetic_mean(std::span<const double> values);
// Evaluated as exp(mean(log v)) so long suites cannot overflow the product.
double geometric_mean(std::span<const double> values);
double harmonic_mean(std::span<const double> values);
double quadratic_mean(std::span<const double> values);
double mean(MeanKind kind, std::span<const double> values);

// Sustained System Performance: geometric mean of per-core results scaled by
// the core count.
double sustained_system_performance(std::span<const double> per_core_values,
                                    std::int64_t core_count);

// Per metric, across candidates: HB rows divide by the row maximum, LB rows
// take reciprocals first so the smallest raw value scores 1.
StandardizedMatrix standardize_profiles(std::span<const CandidateProfile> profiles);

// Area of the radar polygon whose i-th vertex sits at angle 2πi/n and radius
// values[i]. Order-sensitive in general; invariant under cyclic rotation.
double radar_area(std::span<const double> standardized_values);

// |a − b| / min(a, b) × 100, with the denominator fixed to the smaller value
// regardless of which side is the reference.
ComparisonResult improvement_ratio(double perf_a, double perf_b, MetricDirection direction,
                                   std::string_view name_a = "first",
                                   std::string_view name_b = "second");

// Percent price increase from the cheaper to the dearer option: the
// performance improvement the dearer option must exceed to win per unit cost.
double cost_breakeven(double price_low, double price_high);

}  // namespace suitescore
