#pragma once

// CSV ingestion and emission.
//
// Results CSV:  metric,direction,unit,<candidate1>,<candidate2>,...
//               one row per metric, direction HB or LB.
// Trial CSV:    <factor1>,...,<factork>,benchmark,replicate,response,value
//               replicate is 1-based.
// Fields may be double-quoted; LF or CRLF line endings; '.' decimals.
// Errors carry the 1-based line number.

#include <string>
#include <string_view>
#include <vector>

#include "suitescore/design_spec.hpp"
#include "suitescore/doe.hpp"
#include "suitescore/metrics.hpp"

namespace suitescore {

struct ResultsDocument {
  std::vector<CandidateProfile> profiles;
  std::string source;

  friend bool operator==(const ResultsDocument&, const ResultsDocument&) = default;
};

std::vector<std::string> split_csv_line(std::string_view line);
std::string csv_field(std::string_view text);
// Shortest decimal text that parses back to the same double.
std::string format_real(double value);

ResultsDocument parse_results_csv(std::string_view text, std::string source = {});
std::string serialize_results_csv(const ResultsDocument& document);

// Metric rows, one column per candidate, fixed `decimals` after the point.
std::string serialize_standardized_csv(const StandardizedMatrix& matrix, int decimals = 4);

// Factor cells must be one of the spec's declared levels (baseline included).
std::vector<doe::TrialRecord> parse_trial_results(std::string_view text, const DesignSpec& spec);

// Trial skeleton in run order, `value` left blank for the operator to fill
// in. With no responses the `response` column is blank as well; otherwise
// each trial yields one row per response.
std::string serialize_plan_csv(const doe::TrialPlan& plan, const DesignSpec& spec,
                               const std::vector<std::string>& responses = {});

}  // namespace suitescore
