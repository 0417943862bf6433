#include "suitescore/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>

#include "suitescore/error.hpp"

namespace suitescore {
namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

// Non-blank lines with their 1-based numbers; a trailing '\r' is dropped.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) out.push_back({number, line});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

double parse_number(std::string_view cell, std::size_t line, std::string_view column) {
  const std::string_view t = trim(cell);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(value)) {
    fail(ErrorCode::NonNumericCell, at_line(line) + "column '" + std::string(column) +
                                        "' holds '" + std::string(cell) + "', not a number");
  }
  return value;
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos &&
      trim(text).size() == text.size()) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

ResultsDocument parse_results_csv(std::string_view text, std::string source) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail(ErrorCode::MalformedHeader, "results CSV is empty");
  const auto header = split_csv_line(lines.front().text);
  const std::size_t header_line = lines.front().number;
  if (header.size() < 4 || trim(header[0]) != "metric" || trim(header[1]) != "direction" ||
      trim(header[2]) != "unit") {
    fail(ErrorCode::MalformedHeader,
         at_line(header_line) + "expected 'metric,direction,unit,<candidate>,...'");
  }

  ResultsDocument doc;
  doc.source = std::move(source);
  std::set<std::string> candidate_names;
  for (std::size_t c = 3; c < header.size(); ++c) {
    std::string name(trim(header[c]));
    if (name.empty() || !candidate_names.insert(name).second) {
      fail(ErrorCode::MalformedHeader,
           at_line(header_line) + "candidate names must be non-empty and distinct");
    }
    doc.profiles.push_back({std::move(name), {}});
  }

  std::set<std::string> metric_names;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, line] = lines[i];
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      fail(ErrorCode::MalformedRow, at_line(number) + "expected " +
                                        std::to_string(header.size()) + " fields, got " +
                                        std::to_string(cells.size()));
    }
    const std::string metric(trim(cells[0]));
    if (metric.empty()) fail(ErrorCode::MalformedRow, at_line(number) + "empty metric name");
    if (!metric_names.insert(metric).second) {
      fail(ErrorCode::DuplicateMetric, at_line(number) + "metric '" + metric + "' repeated");
    }
    const auto direction = parse_direction(trim(cells[1]));
    if (!direction) {
      fail(ErrorCode::BadDirection, at_line(number) + "metric '" + metric + "' has direction '" +
                                        cells[1] + "', expected HB or LB");
    }
    const std::string unit(trim(cells[2]));
    for (std::size_t c = 3; c < cells.size(); ++c) {
      const double v = parse_number(cells[c], number, doc.profiles[c - 3].candidate_name);
      if (v <= 0.0) {
        fail(ErrorCode::NonPositiveValue, at_line(number) + "metric '" + metric + "' for '" +
                                              doc.profiles[c - 3].candidate_name +
                                              "' must be > 0");
      }
      doc.profiles[c - 3].values.push_back({metric, v, unit, *direction});
    }
  }
  if (metric_names.empty()) fail(ErrorCode::EmptyInput, "results CSV has no metric rows");
  return doc;
}

std::string serialize_results_csv(const ResultsDocument& document) {
  std::string out = "metric,direction,unit";
  for (const auto& p : document.profiles) out += "," + csv_field(p.candidate_name);
  out += '\n';
  if (document.profiles.empty()) return out;
  const auto& first = document.profiles.front().values;
  for (std::size_t m = 0; m < first.size(); ++m) {
    out += csv_field(first[m].metric_name) + "," + std::string(to_string(first[m].direction)) +
           "," + csv_field(first[m].unit);
    for (const auto& p : document.profiles) out += "," + format_real(p.values.at(m).value);
    out += '\n';
  }
  return out;
}

std::string serialize_standardized_csv(const StandardizedMatrix& matrix, int decimals) {
  std::string out = "metric";
  for (const auto& c : matrix.candidate_names) out += "," + csv_field(c);
  out += '\n';
  char buf[64];
  for (std::size_t m = 0; m < matrix.metric_names.size(); ++m) {
    out += csv_field(matrix.metric_names[m]);
    for (double v : matrix.entries[m]) {
      std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
      out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::vector<doe::TrialRecord> parse_trial_results(std::string_view text, const DesignSpec& spec) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail(ErrorCode::MalformedHeader, "trial CSV is empty");
  const std::size_t k = spec.factors.size();
  const auto header = split_csv_line(lines.front().text);
  bool ok = header.size() == k + 4;
  for (std::size_t j = 0; ok && j < k; ++j) ok = trim(header[j]) == spec.factors[j].name;
  ok = ok && trim(header[k]) == "benchmark" && trim(header[k + 1]) == "replicate" &&
       trim(header[k + 2]) == "response" && trim(header[k + 3]) == "value";
  if (!ok) {
    std::string expected;
    for (const auto& f : spec.factors) expected += f.name + ",";
    fail(ErrorCode::MalformedHeader, at_line(lines.front().number) + "expected '" + expected +
                                         "benchmark,replicate,response,value'");
  }

  std::vector<std::vector<std::string>> levels;
  for (std::size_t j = 0; j < k; ++j) levels.push_back(spec.allowed_levels(j));

  std::vector<doe::TrialRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, line] = lines[i];
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      fail(ErrorCode::MalformedRow, at_line(number) + "expected " +
                                        std::to_string(header.size()) + " fields, got " +
                                        std::to_string(cells.size()));
    }
    doe::TrialRecord rec;
    for (std::size_t j = 0; j < k; ++j) {
      std::string level(trim(cells[j]));
      if (std::find(levels[j].begin(), levels[j].end(), level) == levels[j].end()) {
        fail(ErrorCode::UnknownLevel, at_line(number) + "factor '" + spec.factors[j].name +
                                          "' has no level '" + level + "'");
      }
      rec.assignment.push_back(std::move(level));
    }
    rec.benchmark = std::string(trim(cells[k]));
    if (rec.benchmark.empty()) fail(ErrorCode::MalformedRow, at_line(number) + "empty benchmark");

    const std::string_view rep = trim(cells[k + 1]);
    long long replicate = 0;
    const auto [ptr, ec] = std::from_chars(rep.data(), rep.data() + rep.size(), replicate);
    if (rep.empty() || ec != std::errc{} || ptr != rep.data() + rep.size()) {
      fail(ErrorCode::NonNumericCell,
           at_line(number) + "replicate '" + std::string(rep) + "' is not an integer");
    }
    if (replicate < 1) {
      fail(ErrorCode::OutOfRange, at_line(number) + "replicate must be >= 1, got " +
                                      std::to_string(replicate));
    }
    rec.replicate = static_cast<unsigned>(replicate);

    rec.response = std::string(trim(cells[k + 2]));
    if (rec.response.empty()) fail(ErrorCode::MalformedRow, at_line(number) + "empty response");
    rec.value = parse_number(cells[k + 3], number, "value");
    out.push_back(std::move(rec));
  }
  return out;
}

std::string serialize_plan_csv(const doe::TrialPlan& plan, const DesignSpec& spec,
                               const std::vector<std::string>& responses) {
  std::string out;
  for (const auto& f : spec.factors) out += csv_field(f.name) + ",";
  out += "benchmark,replicate,response,value\n";
  const std::vector<std::string> rows = responses.empty() ? std::vector<std::string>{""} : responses;
  for (const auto& t : plan.trials) {
    std::string prefix;
    for (const auto& level : t.assignment) prefix += csv_field(level) + ",";
    prefix += csv_field(t.benchmark) + "," + std::to_string(t.replicate) + ",";
    for (const auto& r : rows) out += prefix + csv_field(r) + ",\n";
  }
  return out;
}

}  // namespace suitescore
