#include "suitescore/doe.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "suitescore/error.hpp"
#include "suitescore/kernels.hpp"
#include "suitescore/student_t.hpp"

namespace suitescore::doe {
namespace {

std::string join_assignment(const Assignment& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += a[i];
  }
  return out + ")";
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

int DesignMatrix::term_sign(std::size_t run, std::uint32_t term_mask) const noexcept {
  // Each factor in the term sitting at its low level flips the sign.
  const auto lows = term_mask & ~static_cast<std::uint32_t>(run);
  return std::popcount(lows) % 2 ? -1 : 1;
}

Assignment DesignMatrix::decode(std::size_t run) const {
  Assignment out;
  out.reserve(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    out.push_back(code(run, j) > 0 ? factors_[j].high_label : factors_[j].low_label);
  }
  return out;
}

std::optional<std::size_t> DesignMatrix::find_run(const Assignment& assignment) const {
  if (assignment.size() != factors_.size()) return std::nullopt;
  std::size_t run = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (assignment[j] == factors_[j].high_label) {
      run |= std::size_t{1} << j;
    } else if (assignment[j] != factors_[j].low_label) {
      return std::nullopt;
    }
  }
  return run;
}

std::string DesignMatrix::term_label(std::uint32_t term_mask) const {
  const bool compact = std::all_of(factors_.begin(), factors_.end(),
                                   [](const Factor& f) { return f.name.size() == 1; });
  std::string out;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (!((term_mask >> j) & 1U)) continue;
    if (!out.empty() && !compact) out += '*';
    out += factors_[j].name;
  }
  return out;
}

DesignMatrix build_design(std::vector<Factor> factors) {
  if (factors.empty()) fail(ErrorCode::NoFactors, "design needs at least one factor");
  if (factors.size() > kMaxFactors) {
    fail(ErrorCode::TooManyFactors, "design supports at most " + std::to_string(kMaxFactors) +
                                        " factors, got " + std::to_string(factors.size()));
  }
  std::set<std::string_view> names;
  for (const auto& f : factors) {
    if (f.name.empty()) fail(ErrorCode::InvalidSpec, "factor name must not be empty");
    if (!names.insert(f.name).second) {
      fail(ErrorCode::DuplicateFactor, "factor '" + f.name + "' declared twice");
    }
    if (f.low_label == f.high_label) {
      fail(ErrorCode::InvalidSpec, "factor '" + f.name + "' uses the same label for both levels");
    }
  }
  DesignMatrix d;
  d.factors_ = std::move(factors);
  return d;
}

void ResponseTable::add_response(std::string name, std::vector<double> values) {
  if (values.size() != design_.run_count()) {
    fail(ErrorCode::LengthMismatch, "response '" + name + "' has " +
                                        std::to_string(values.size()) + " values for " +
                                        std::to_string(design_.run_count()) + " runs");
  }
  for (double v : values) {
    if (!std::isfinite(v)) fail(ErrorCode::NonNumericCell, "response '" + name + "' is not finite");
  }
  responses_[std::move(name)] = std::move(values);
}

const std::vector<double>& ResponseTable::response(std::string_view name) const {
  const auto it = responses_.find(std::string(name));
  if (it == responses_.end()) {
    fail(ErrorCode::UnknownResponse, "no response named '" + std::string(name) + "'");
  }
  return it->second;
}

std::vector<TermEffect> estimate_effects(const ResponseTable& table, std::string_view response) {
  const DesignMatrix& design = table.design();
  const std::vector<double>& y = table.response(response);
  const std::size_t runs = design.run_count();
  if (y.size() != runs) fail(ErrorCode::LengthMismatch, "response length differs from run count");

  const double half = static_cast<double>(runs / 2);
  // Contrasts ignore a constant shift; removing y[0] makes a flat response
  // contrast to exactly zero.
  std::vector<double> shifted(runs);
  for (std::size_t r = 0; r < runs; ++r) shifted[r] = y[r] - y[0];
  std::vector<double> signs(runs);
  std::vector<TermEffect> out;
  out.reserve(runs - 1);
  for (std::uint32_t mask = 1; mask < runs; ++mask) {
    for (std::size_t r = 0; r < runs; ++r) signs[r] = design.term_sign(r, mask);
    out.push_back({design.term_label(mask), mask, kernels::dot(shifted, signs) / half});
  }
  return out;
}

double lenth_pse(std::span<const double> effects) {
  if (effects.size() < 3) {
    fail(ErrorCode::TooFewEffects,
         "Lenth's method needs at least 3 effects, got " + std::to_string(effects.size()));
  }
  std::vector<double> magnitudes;
  magnitudes.reserve(effects.size());
  for (double e : effects) magnitudes.push_back(std::abs(e));
  const double s0 = 1.5 * median_of(magnitudes);
  std::vector<double> trimmed;
  for (double a : magnitudes) {
    if (a < 2.5 * s0) trimmed.push_back(a);
  }
  // Only empty when s0 == 0, i.e. the kept magnitudes are all zero.
  if (trimmed.empty()) return 0.0;
  return 1.5 * median_of(std::move(trimmed));
}

double lenth_margin(double pse, std::size_t effect_count, double alpha) {
  if (effect_count < 3) {
    fail(ErrorCode::TooFewEffects,
         "Lenth's method needs at least 3 effects, got " + std::to_string(effect_count));
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    fail(ErrorCode::OutOfRange, "alpha must lie in (0, 1)");
  }
  if (!(pse >= 0.0) || !std::isfinite(pse)) fail(ErrorCode::OutOfRange, "PSE must be >= 0");
  const double df = static_cast<double>(effect_count) / 3.0;
  return stats::t_quantile(1.0 - alpha / 2.0, df) * pse;
}

bool EffectSet::is_significant(std::string_view term) const {
  return std::find(significant.begin(), significant.end(), term) != significant.end();
}

EffectSet pareto_analysis(const ResponseTable& table, std::string_view response, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorCode::OutOfRange, "alpha must lie in (0, 1)");
  EffectSet set;
  set.response = std::string(response);
  set.alpha = alpha;
  set.terms = estimate_effects(table, response);

  std::vector<double> values;
  for (const auto& t : set.terms) values.push_back(t.effect);
  set.pse = lenth_pse(values);
  set.margin_of_error = lenth_margin(set.pse, values.size(), alpha);
  if (set.pse == 0.0) {
    set.degenerate = true;
    set.warning =
        "pseudo standard error is zero; every nonzero effect is flagged significant";
  }

  std::stable_sort(set.terms.begin(), set.terms.end(), [](const TermEffect& a, const TermEffect& b) {
    return std::abs(a.effect) > std::abs(b.effect);
  });
  for (const auto& t : set.terms) {
    if (std::abs(t.effect) > set.margin_of_error) set.significant.push_back(t.term);
  }
  return set;
}

TrialPlan plan_trials(std::span<const Assignment> assignments,
                      std::span<const std::string> benchmarks, unsigned replicates,
                      std::uint64_t seed) {
  if (assignments.empty()) fail(ErrorCode::EmptyAssignments, "no factor-level assignments");
  if (benchmarks.empty()) fail(ErrorCode::EmptyBenchmarks, "no benchmarks");
  if (replicates == 0) fail(ErrorCode::ZeroReplicates, "replicates must be >= 1");
  if (std::set<Assignment>(assignments.begin(), assignments.end()).size() != assignments.size()) {
    fail(ErrorCode::InvalidSpec, "assignments must be distinct");
  }
  if (std::set<std::string>(benchmarks.begin(), benchmarks.end()).size() != benchmarks.size()) {
    fail(ErrorCode::InvalidSpec, "benchmark names must be distinct");
  }

  struct Keyed {
    std::uint64_t k1;
    std::uint64_t k2;
    std::size_t index;
    TrialDescriptor trial;
  };
  std::mt19937_64 rng(seed);
  std::vector<Keyed> keyed;
  keyed.reserve(assignments.size() * benchmarks.size() * replicates);
  for (const auto& a : assignments) {
    for (const auto& b : benchmarks) {
      for (unsigned r = 1; r <= replicates; ++r) {
        const std::uint64_t k1 = rng();
        const std::uint64_t k2 = rng();
        keyed.push_back({k1, k2, keyed.size(), TrialDescriptor{a, b, r, 0}});
      }
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
    return std::tie(x.k1, x.k2, x.index) < std::tie(y.k1, y.k2, y.index);
  });

  TrialPlan plan;
  plan.seed = seed;
  plan.trials.reserve(keyed.size());
  for (auto& k : keyed) {
    k.trial.position = plan.trials.size();
    plan.trials.push_back(std::move(k.trial));
  }
  return plan;
}

std::vector<TrialRecord> filter_response(std::span<const TrialRecord> records,
                                         std::string_view response) {
  std::vector<TrialRecord> out;
  for (const auto& r : records) {
    if (r.response == response) out.push_back(r);
  }
  return out;
}

std::map<Assignment, double> aggregate_trials(std::span<const TrialRecord> records,
                                              MeanKind kind) {
  if (records.empty()) fail(ErrorCode::EmptyGroup, "no trial records to aggregate");
  std::map<Assignment, std::map<std::string, std::vector<double>>> cells;
  std::set<std::string> all_benchmarks;
  for (const auto& r : records) {
    if (r.response != records.front().response) {
      fail(ErrorCode::MixedResponses, "records mix responses '" + records.front().response +
                                          "' and '" + r.response + "'");
    }
    if (!std::isfinite(r.value) || r.value <= 0.0) {
      fail(ErrorCode::NonPositiveValue, "trial " + join_assignment(r.assignment) + " / " +
                                            r.benchmark + " has a non-positive value");
    }
    cells[r.assignment][r.benchmark].push_back(r.value);
    all_benchmarks.insert(r.benchmark);
  }

  std::map<Assignment, double> out;
  for (const auto& [assignment, by_benchmark] : cells) {
    std::vector<double> per_benchmark;
    for (const auto& b : all_benchmarks) {
      const auto it = by_benchmark.find(b);
      if (it == by_benchmark.end()) {
        fail(ErrorCode::EmptyGroup,
             "no records for benchmark '" + b + "' at " + join_assignment(assignment));
      }
      per_benchmark.push_back(mean(kind, it->second));
    }
    out.emplace(assignment, mean(kind, per_benchmark));
  }
  return out;
}

std::vector<double> align_to_design(const std::map<Assignment, double>& aggregated,
                                    const DesignMatrix& design) {
  std::vector<double> out;
  out.reserve(design.run_count());
  for (std::size_t r = 0; r < design.run_count(); ++r) {
    const Assignment a = design.decode(r);
    const auto it = aggregated.find(a);
    if (it == aggregated.end()) {
      fail(ErrorCode::EmptyGroup, "no aggregated response for design run " + join_assignment(a));
    }
    out.push_back(it->second);
  }
  return out;
}

}  // namespace suitescore::doe
