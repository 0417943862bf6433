#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "suitescore/doe.hpp"
#include "suitescore/metrics.hpp"

namespace suitescore {

// JSON experiment description:
//   { "factors":   [ {"name": "A", "low": "m1", "high": "m2"}, ... ],
//     "benchmarks": ["BT", "CG", ...],
//     "replicates": 5, "seed": 2012, "alpha": 0.05, "mean": "geometric",
//     "baseline":  [ {"A": "m1", "B": "1"}, ... ] }
// `alpha`, `mean` and `baseline` are optional.
struct DesignSpec {
  std::vector<doe::Factor> factors;
  std::vector<std::string> benchmarks;
  unsigned replicates = 1;
  std::uint64_t seed = 0;
  double alpha = 0.05;
  MeanKind mean = MeanKind::Geometric;
  // Extra level combinations planned alongside the 2^k grid but kept out of
  // the factorial analysis.
  std::vector<doe::Assignment> baseline;

  doe::DesignMatrix design() const { return doe::build_design(factors); }
  // Design runs in standard order followed by the baseline assignments.
  std::vector<doe::Assignment> assignments() const;
  // Every label factor `index` may take, counting baseline levels.
  std::vector<std::string> allowed_levels(std::size_t index) const;
};

// Throws InvalidSpec for structural problems, ZeroReplicates, OutOfRange for
// alpha, plus the build_design errors.
DesignSpec parse_design_spec(std::string_view json_text);

}  // namespace suitescore
