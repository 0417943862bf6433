#pragma once

// Standalone SVG 1.1 charts. Output bytes depend only on the inputs.

#include <map>
#include <string>

#include "suitescore/doe.hpp"
#include "suitescore/metrics.hpp"

namespace suitescore {

struct ChartInventory {
  std::size_t axes = 0;
  std::size_t polygons = 0;
  std::size_t bars = 0;
  std::size_t significant_bars = 0;
  std::size_t reference_lines = 0;
  std::size_t legend_entries = 0;
  std::size_t labels = 0;
};

struct ChartDocument {
  std::string svg;
  ChartInventory inventory;
};

// One axis per metric, one closed polygon per candidate, and a legend entry
// "<name> (<area, 3 decimals>)". Candidates missing from `areas` are listed
// without an area. Throws TooFewAxes below three metrics.
ChartDocument render_radar_svg(const StandardizedMatrix& matrix,
                               const std::map<std::string, double>& areas);

// Horizontal |effect| bars in the set's order with one reference line at the
// margin of error. Bars are marked significant exactly when the set says so.
ChartDocument render_pareto_svg(const doe::EffectSet& effects);

}  // namespace suitescore
