#pragma once

// Two-level full-factorial designs: construction, trial planning, replicate
// aggregation, effect estimation and Lenth's significance test.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "suitescore/metrics.hpp"

namespace suitescore::doe {

inline constexpr std::size_t kMaxFactors = 16;

struct Factor {
  std::string name;
  std::string low_label;
  std::string high_label;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// One level label per factor, in factor order.
using Assignment = std::vector<std::string>;

// 2^k runs in standard (Yates) order: in run r, factor j sits at its high
// level iff bit j of r is set, so the first factor alternates fastest.
class DesignMatrix {
 public:
  DesignMatrix() = default;

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::size_t factor_count() const noexcept { return factors_.size(); }
  std::size_t run_count() const noexcept { return std::size_t{1} << factors_.size(); }

  // Coded level, −1 or +1.
  int code(std::size_t run, std::size_t factor) const noexcept {
    return ((run >> factor) & 1U) ? 1 : -1;
  }
  // Sign of the product of the coded columns selected by term_mask.
  int term_sign(std::size_t run, std::uint32_t term_mask) const noexcept;

  Assignment decode(std::size_t run) const;
  std::optional<std::size_t> find_run(const Assignment& assignment) const;

  // "A", "AB", ... when every factor name is one character, else "A*B".
  std::string term_label(std::uint32_t term_mask) const;

 private:
  friend DesignMatrix build_design(std::vector<Factor> factors);
  std::vector<Factor> factors_;
};

// Throws NoFactors, DuplicateFactor, TooManyFactors, or InvalidSpec when a
// factor's two labels coincide.
DesignMatrix build_design(std::vector<Factor> factors);

class ResponseTable {
 public:
  explicit ResponseTable(DesignMatrix design) : design_(std::move(design)) {}

  // values[r] is the response at design run r. Throws LengthMismatch or
  // NonNumericCell for non-finite values.
  void add_response(std::string name, std::vector<double> values);

  const DesignMatrix& design() const noexcept { return design_; }
  const std::map<std::string, std::vector<double>>& responses() const noexcept {
    return responses_;
  }
  // Throws UnknownResponse.
  const std::vector<double>& response(std::string_view name) const;

 private:
  DesignMatrix design_;
  std::map<std::string, std::vector<double>> responses_;
};

struct TermEffect {
  std::string term;
  std::uint32_t mask = 0;
  double effect = 0.0;
};

// All 2^k − 1 main and interaction effects in standard order:
// effect(S) = Σ_r y_r·Π_{f∈S} code_f(r) / 2^(k−1).
std::vector<TermEffect> estimate_effects(const ResponseTable& table, std::string_view response);

// Lenth's pseudo standard error: s0 = 1.5·median|e|, then
// PSE = 1.5·median{|e| : |e| < 2.5·s0}. Zero when s0 is zero.
double lenth_pse(std::span<const double> effects);

// t_{1−α/2, m/3} · PSE.
double lenth_margin(double pse, std::size_t effect_count, double alpha);

struct EffectSet {
  std::string response;
  std::vector<TermEffect> terms;  // descending |effect|
  double pse = 0.0;
  double margin_of_error = 0.0;
  double alpha = 0.05;
  std::vector<std::string> significant;  // in the order of `terms`
  bool degenerate = false;               // PSE collapsed to zero
  std::string warning;

  bool is_significant(std::string_view term) const;
};

EffectSet pareto_analysis(const ResponseTable& table, std::string_view response,
                          double alpha = 0.05);

struct TrialDescriptor {
  Assignment assignment;
  std::string benchmark;
  unsigned replicate = 1;  // 1-based
  std::size_t position = 0;

  friend bool operator==(const TrialDescriptor&, const TrialDescriptor&) = default;
};

struct TrialPlan {
  std::uint64_t seed = 0;
  std::vector<TrialDescriptor> trials;
};

// Every (assignment, benchmark, replicate) once, in an order fixed by the
// seed: each trial draws two 64-bit keys from std::mt19937_64(seed) in
// Cartesian order and the plan is sorted on (key1, key2).
TrialPlan plan_trials(std::span<const Assignment> assignments,
                      std::span<const std::string> benchmarks, unsigned replicates,
                      std::uint64_t seed);

struct TrialRecord {
  Assignment assignment;
  std::string benchmark;
  unsigned replicate = 1;
  std::string response;
  double value = 0.0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

std::vector<TrialRecord> filter_response(std::span<const TrialRecord> records,
                                         std::string_view response);

// Replicates collapse per (assignment, benchmark), then benchmarks collapse
// per assignment, both with `kind`. All records must carry the same response
// (MixedResponses) and every assignment must cover every benchmark seen
// (EmptyGroup).
std::map<Assignment, double> aggregate_trials(std::span<const TrialRecord> records,
                                              MeanKind kind = MeanKind::Geometric);

// Aggregated values in design-run order; EmptyGroup for a missing run.
std::vector<double> align_to_design(const std::map<Assignment, double>& aggregated,
                                    const DesignMatrix& design);

}  // namespace suitescore::doe
