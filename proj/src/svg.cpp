#include "suitescore/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "suitescore/error.hpp"

namespace suitescore {
namespace {

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fixed(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  // "-0.00" and "0.00" must not differ between otherwise identical charts.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string open_svg(double width, double height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fixed(width, 0) + "\" height=\"" + fixed(height, 0) + "\" viewBox=\"0 0 " +
         fixed(width, 0) + " " + fixed(height, 0) + "\">\n" +
         "<rect x=\"0\" y=\"0\" width=\"" + fixed(width, 0) + "\" height=\"" + fixed(height, 0) +
         "\" fill=\"#ffffff\"/>\n";
}

}  // namespace

ChartDocument render_radar_svg(const StandardizedMatrix& matrix,
                               const std::map<std::string, double>& areas) {
  const std::size_t n = matrix.metric_names.size();
  if (n < 3) {
    fail(ErrorCode::TooFewAxes, "radar chart needs at least 3 metrics, got " + std::to_string(n));
  }
  constexpr double kCx = 260.0, kCy = 270.0, kRadius = 190.0;
  const double width = 760.0;
  const double height = std::max(540.0, 80.0 + 24.0 * static_cast<double>(matrix.candidate_names.size()));

  auto vertex = [&](std::size_t axis, double r) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(axis) / static_cast<double>(n);
    return std::array<double, 2>{kCx + kRadius * r * std::sin(theta),
                                 kCy - kRadius * r * std::cos(theta)};
  };
  auto points = [&](auto&& radius_of) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = vertex(i, radius_of(i));
      if (i) s += ' ';
      s += fixed(p[0]) + "," + fixed(p[1]);
    }
    return s;
  };

  ChartDocument doc;
  std::string& out = doc.svg;
  out = open_svg(width, height);
  out += "<text class=\"title\" x=\"20\" y=\"30\" font-family=\"sans-serif\" font-size=\"16\">"
         "Standardized benchmark results</text>\n";

  out += "<g class=\"grid\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (double ring : {0.25, 0.5, 0.75, 1.0}) {
    out += "<polygon class=\"ring\" points=\"" + points([&](std::size_t) { return ring; }) + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g class=\"axes\" stroke=\"#888888\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto tip = vertex(i, 1.0);
    out += "<line class=\"axis\" x1=\"" + fixed(kCx) + "\" y1=\"" + fixed(kCy) + "\" x2=\"" +
           fixed(tip[0]) + "\" y2=\"" + fixed(tip[1]) + "\"/>\n";
    ++doc.inventory.axes;
  }
  out += "</g>\n";

  out += "<g class=\"axis-labels\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = vertex(i, 1.1);
    const char* anchor = p[0] > kCx + 1.0 ? "start" : (p[0] < kCx - 1.0 ? "end" : "middle");
    out += "<text class=\"axis-label\" x=\"" + fixed(p[0]) + "\" y=\"" + fixed(p[1] + 4.0) +
           "\" text-anchor=\"" + anchor + "\">" + escape(matrix.metric_names[i]) + "</text>\n";
    ++doc.inventory.labels;
  }
  out += "</g>\n";

  out += "<g class=\"candidates\">\n";
  for (std::size_t c = 0; c < matrix.candidate_names.size(); ++c) {
    const char* color = kPalette[c % kPalette.size()];
    out += "<polygon class=\"candidate\" data-name=\"" + escape(matrix.candidate_names[c]) +
           "\" points=\"" + points([&](std::size_t i) { return matrix.at(i, c); }) +
           "\" fill=\"" + color + "\" fill-opacity=\"0.15\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    ++doc.inventory.polygons;
  }
  out += "</g>\n";

  out += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t c = 0; c < matrix.candidate_names.size(); ++c) {
    const std::string& name = matrix.candidate_names[c];
    const double y = 60.0 + 24.0 * static_cast<double>(c);
    std::string entry = name;
    if (const auto it = areas.find(name); it != areas.end()) entry += " (" + fixed(it->second, 3) + ")";
    out += "<rect class=\"swatch\" x=\"520\" y=\"" + fixed(y - 10.0) +
           "\" width=\"14\" height=\"14\" fill=\"" + kPalette[c % kPalette.size()] + "\"/>\n";
    out += "<text class=\"legend-entry\" x=\"542\" y=\"" + fixed(y + 2.0) + "\">" +
           escape(entry) + "</text>\n";
    ++doc.inventory.legend_entries;
  }
  out += "</g>\n</svg>\n";
  return doc;
}

ChartDocument render_pareto_svg(const doe::EffectSet& effects) {
  if (effects.terms.empty()) fail(ErrorCode::EmptyEffects, "Pareto chart needs at least one effect");
  constexpr double kLeft = 90.0, kBarSpan = 520.0, kTop = 60.0, kRow = 30.0;
  const double rows = static_cast<double>(effects.terms.size());
  const double width = 760.0;
  const double height = kTop + kRow * rows + 80.0;

  double scale = effects.margin_of_error;
  for (const auto& t : effects.terms) scale = std::max(scale, std::abs(t.effect));
  if (!(scale > 0.0)) scale = 1.0;
  auto x_of = [&](double magnitude) { return kLeft + kBarSpan * magnitude / scale; };

  ChartDocument doc;
  std::string& out = doc.svg;
  out = open_svg(width, height);
  out += "<text class=\"title\" x=\"20\" y=\"30\" font-family=\"sans-serif\" font-size=\"16\">"
         "Pareto chart of effects: " + escape(effects.response) + "</text>\n";

  out += "<g class=\"bars\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < effects.terms.size(); ++i) {
    const auto& t = effects.terms[i];
    const bool significant = effects.is_significant(t.term);
    const double y = kTop + kRow * static_cast<double>(i);
    const double magnitude = std::abs(t.effect);
    out += "<text class=\"term-label\" x=\"" + fixed(kLeft - 8.0) + "\" y=\"" +
           fixed(y + kRow * 0.5 + 4.0) + "\" text-anchor=\"end\">" + escape(t.term) + "</text>\n";
    out += std::string("<rect class=\"") + (significant ? "bar significant" : "bar") +
           "\" data-term=\"" + escape(t.term) + "\" x=\"" + fixed(kLeft) + "\" y=\"" +
           fixed(y + 4.0) + "\" width=\"" + fixed(x_of(magnitude) - kLeft) + "\" height=\"" +
           fixed(kRow - 8.0) + "\" fill=\"" + (significant ? "#1f4e79" : "#9dbcd4") + "\"/>\n";
    out += "<text class=\"bar-value\" x=\"" + fixed(x_of(magnitude) + 6.0) + "\" y=\"" +
           fixed(y + kRow * 0.5 + 4.0) + "\">" + fixed(magnitude, 4) + "</text>\n";
    ++doc.inventory.bars;
    ++doc.inventory.labels;
    if (significant) ++doc.inventory.significant_bars;
  }
  out += "</g>\n";

  const double axis_y = kTop + kRow * rows + 4.0;
  out += "<line class=\"x-axis\" x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(axis_y) + "\" x2=\"" +
         fixed(kLeft + kBarSpan) + "\" y2=\"" + fixed(axis_y) +
         "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  out += "<text class=\"x-axis-label\" x=\"" + fixed(kLeft + kBarSpan / 2.0) + "\" y=\"" +
         fixed(axis_y + 24.0) + "\" font-family=\"sans-serif\" font-size=\"12\" "
         "text-anchor=\"middle\">|effect|</text>\n";

  const double ref_x = x_of(effects.margin_of_error);
  out += "<line class=\"reference\" x1=\"" + fixed(ref_x) + "\" y1=\"" + fixed(kTop - 6.0) +
         "\" x2=\"" + fixed(ref_x) + "\" y2=\"" + fixed(axis_y) +
         "\" stroke=\"#d62728\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
  out += "<text class=\"reference-label\" x=\"" + fixed(ref_x + 4.0) + "\" y=\"" +
         fixed(kTop - 10.0) + "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#d62728\">"
         "ME = " + fixed(effects.margin_of_error, 4) + " (\xCE\xB1 = " + fixed(effects.alpha, 3) +
         ")</text>\n";
  ++doc.inventory.reference_lines;

  if (effects.degenerate) {
    out += "<text class=\"warning\" x=\"20\" y=\"" + fixed(height - 16.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#b00000\">" +
           escape(effects.warning) + "</text>\n";
  }
  out += "</svg>\n";
  return doc;
}

}  // namespace suitescore
