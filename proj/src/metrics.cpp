#include "suitescore/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "suitescore/error.hpp"
#include "suitescore/kernels.hpp"

namespace suitescore {
namespace {

struct Bounds {
  double lo;
  double hi;
};

Bounds check_positive(std::span<const double> values, std::string_view what) {
  if (values.empty()) fail(ErrorCode::EmptyInput, std::string(what) + ": no values supplied");
  Bounds b{values.front(), values.front()};
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v) || v <= 0.0) {
      fail(ErrorCode::NonPositiveValue, std::string(what) + ": value #" + std::to_string(i) +
                                            " is not a finite positive number");
    }
    b.lo = std::min(b.lo, v);
    b.hi = std::max(b.hi, v);
  }
  return b;
}

double clamp_to(double x, Bounds b) { return std::clamp(x, b.lo, b.hi); }

}  // namespace

std::string_view to_string(MetricDirection direction) noexcept {
  return direction == MetricDirection::HigherBetter ? "HB" : "LB";
}

std::optional<MetricDirection> parse_direction(std::string_view text) noexcept {
  if (text == "HB") return MetricDirection::HigherBetter;
  if (text == "LB") return MetricDirection::LowerBetter;
  return std::nullopt;
}

std::string_view to_string(MeanKind kind) noexcept {
  switch (kind) {
    case MeanKind::Arithmetic: return "arithmetic";
    case MeanKind::Geometric: return "geometric";
    case MeanKind::Harmonic: return "harmonic";
    case MeanKind::Quadratic: return "quadratic";
  }
  return "geometric";
}

std::optional<MeanKind> parse_mean_kind(std::string_view text) noexcept {
  for (MeanKind k : {MeanKind::Arithmetic, MeanKind::Geometric, MeanKind::Harmonic,
                     MeanKind::Quadratic}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

void validate_profile(const CandidateProfile& profile) {
  if (profile.values.empty()) {
    fail(ErrorCode::EmptyInput, "profile '" + profile.candidate_name + "' has no values");
  }
  std::set<std::string_view> seen;
  for (const auto& v : profile.values) {
    if (!seen.insert(v.metric_name).second) {
      fail(ErrorCode::DuplicateMetric, "profile '" + profile.candidate_name +
                                           "' repeats metric '" + v.metric_name + "'");
    }
    if (!std::isfinite(v.value) || v.value <= 0.0) {
      fail(ErrorCode::NonPositiveValue, "profile '" + profile.candidate_name + "', metric '" +
                                            v.metric_name + "': value must be finite and > 0");
    }
  }
}

std::vector<double> StandardizedMatrix::column(std::size_t candidate) const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& row : entries) out.push_back(row[candidate]);
  return out;
}

double arithmetic_mean(std::span<const double> values) {
  const Bounds b = check_positive(values, "arithmetic_mean");
  return clamp_to(kernels::sum(values) / static_cast<double>(values.size()), b);
}

double geometric_mean(std::span<const double> values) {
  const Bounds b = check_positive(values, "geometric_mean");
  double log_sum = 0.0;
  for (double v : values) log_sum += std::log(v);
  return clamp_to(std::exp(log_sum / static_cast<double>(values.size())), b);
}

double harmonic_mean(std::span<const double> values) {
  const Bounds b = check_positive(values, "harmonic_mean");
  return clamp_to(static_cast<double>(values.size()) / kernels::sum_reciprocal(values), b);
}

double quadratic_mean(std::span<const double> values) {
  const Bounds b = check_positive(values, "quadratic_mean");
  return clamp_to(std::sqrt(kernels::sum_squares(values) / static_cast<double>(values.size())),
                  b);
}

double mean(MeanKind kind, std::span<const double> values) {
  switch (kind) {
    case MeanKind::Arithmetic: return arithmetic_mean(values);
    case MeanKind::Geometric: return geometric_mean(values);
    case MeanKind::Harmonic: return harmonic_mean(values);
    case MeanKind::Quadratic: return quadratic_mean(values);
  }
  return geometric_mean(values);
}

double sustained_system_performance(std::span<const double> per_core_values,
                                    std::int64_t core_count) {
  if (core_count < 1) {
    fail(ErrorCode::InvalidCoreCount,
         "core count must be >= 1, got " + std::to_string(core_count));
  }
  return geometric_mean(per_core_values) * static_cast<double>(core_count);
}

StandardizedMatrix standardize_profiles(std::span<const CandidateProfile> profiles) {
  if (profiles.empty()) fail(ErrorCode::EmptyInput, "standardize: no candidate profiles");
  const CandidateProfile& first = profiles.front();
  for (const auto& p : profiles) {
    validate_profile(p);
    if (p.values.size() != first.values.size()) {
      fail(ErrorCode::SchemaMismatch, "profile '" + p.candidate_name + "' has " +
                                          std::to_string(p.values.size()) + " metrics, '" +
                                          first.candidate_name + "' has " +
                                          std::to_string(first.values.size()));
    }
    for (std::size_t i = 0; i < p.values.size(); ++i) {
      if (p.values[i].metric_name != first.values[i].metric_name ||
          p.values[i].direction != first.values[i].direction) {
        fail(ErrorCode::SchemaMismatch, "profile '" + p.candidate_name + "' disagrees with '" +
                                            first.candidate_name + "' on metric #" +
                                            std::to_string(i) + " name or direction");
      }
    }
  }

  StandardizedMatrix out;
  for (const auto& p : profiles) out.candidate_names.push_back(p.candidate_name);
  for (std::size_t m = 0; m < first.values.size(); ++m) {
    out.metric_names.push_back(first.values[m].metric_name);
    const bool lower_better = first.values[m].direction == MetricDirection::LowerBetter;
    std::vector<double> row;
    row.reserve(profiles.size());
    for (const auto& p : profiles) {
      const double v = p.values[m].value;
      row.push_back(lower_better ? 1.0 / v : v);
    }
    const double best = *std::max_element(row.begin(), row.end());
    for (double& x : row) x /= best;
    out.entries.push_back(std::move(row));
  }
  return out;
}

double radar_area(std::span<const double> standardized_values) {
  const std::size_t n = standardized_values.size();
  if (n < 3) {
    fail(ErrorCode::TooFewAxes,
         "radar area needs at least 3 axes, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double v = standardized_values[i];
    if (!(v > 0.0 && v <= 1.0)) {
      fail(ErrorCode::OutOfRange,
           "standardized value #" + std::to_string(i) + " lies outside (0, 1]");
    }
  }
  // Σ s_i·s_{i+1} over the open chain, then the wrap-around edge.
  const double chain = kernels::dot(standardized_values.first(n - 1),
                                    standardized_values.subspan(1));
  const double adjacent = chain + standardized_values[n - 1] * standardized_values[0];
  return std::sin(2.0 * std::numbers::pi / static_cast<double>(n)) * adjacent / 2.0;
}

ComparisonResult improvement_ratio(double perf_a, double perf_b, MetricDirection direction,
                                   std::string_view name_a, std::string_view name_b) {
  for (double v : {perf_a, perf_b}) {
    if (!std::isfinite(v) || v <= 0.0) {
      fail(ErrorCode::NonPositiveValue, "performance values must be finite and > 0");
    }
  }
  ComparisonResult r;
  if (perf_a == perf_b) {
    r.tie = true;
    return r;
  }
  r.improvement_percent = std::abs(perf_a - perf_b) / std::min(perf_a, perf_b) * 100.0;
  const bool a_larger = perf_a > perf_b;
  const bool a_wins = direction == MetricDirection::HigherBetter ? a_larger : !a_larger;
  r.better_candidate = std::string(a_wins ? name_a : name_b);
  return r;
}

double cost_breakeven(double price_low, double price_high) {
  for (double v : {price_low, price_high}) {
    if (!std::isfinite(v) || v <= 0.0) {
      fail(ErrorCode::NonPositiveValue, "prices must be finite and > 0");
    }
  }
  if (price_low > price_high) {
    fail(ErrorCode::OrderViolation, "price_low exceeds price_high");
  }
  return (price_high - price_low) / price_low * 100.0;
}

}  // namespace suitescore
