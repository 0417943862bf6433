#include "suitescore/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "suitescore/csv.hpp"
#include "suitescore/design_spec.hpp"
#include "suitescore/doe.hpp"
#include "suitescore/error.hpp"
#include "suitescore/metrics.hpp"
#include "suitescore/report.hpp"
#include "suitescore/svg.hpp"

namespace suitescore {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::Io, "cannot write '" + path + "'");
  out << bytes;
  if (!out) fail(ErrorCode::Io, "failed writing '" + path + "'");
}

// Re-throws input errors with the file name in front.
template <typename F>
auto with_file(const std::string& path, F&& f) {
  try {
    return f(read_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Io) throw;
    throw Error(e.code(), path + ": " + e.what());
  }
}

ResultsDocument load_results(const std::string& path) {
  return with_file(path, [&](const std::string& text) { return parse_results_csv(text, path); });
}

DesignSpec load_spec(const std::string& path) {
  return with_file(path, [](const std::string& text) { return parse_design_spec(text); });
}

std::vector<doe::TrialRecord> load_trials(const std::string& path, const DesignSpec& spec) {
  return with_file(path, [&](const std::string& text) { return parse_trial_results(text, spec); });
}

std::vector<double> raw_values(const CandidateProfile& p) {
  std::vector<double> v;
  for (const auto& b : p.values) v.push_back(b.value);
  return v;
}

doe::EffectSet analyze_response(const DesignSpec& spec, std::span<const doe::TrialRecord> records,
                                const std::string& response) {
  const doe::DesignMatrix design = spec.design();
  std::vector<doe::TrialRecord> in_design;
  bool seen = false;
  for (const auto& r : records) {
    if (r.response != response) continue;
    seen = true;
    // Baseline levels sit outside the factorial grid.
    if (design.find_run(r.assignment)) in_design.push_back(r);
  }
  if (!seen) fail(ErrorCode::UnknownResponse, "no trial records for response '" + response + "'");
  const auto aggregated = doe::aggregate_trials(in_design, spec.mean);
  doe::ResponseTable table(design);
  table.add_response(response, doe::align_to_design(aggregated, design));
  return doe::pareto_analysis(table, response, spec.alpha);
}

std::vector<std::pair<std::string, double>> radar_areas(const StandardizedMatrix& m) {
  std::vector<std::pair<std::string, double>> out;
  for (std::size_t c = 0; c < m.candidate_names.size(); ++c) {
    out.emplace_back(m.candidate_names[c], radar_area(m.column(c)));
  }
  return out;
}

MetricDirection direction_flag(const std::string& text) {
  const auto d = parse_direction(text);
  if (!d) fail(ErrorCode::Usage, "--direction must be HB or LB, got '" + text + "'");
  return *d;
}

void emit(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path.empty()) {
    out << bytes;
  } else {
    write_file(path, bytes);
  }
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boosting metrics and 2^k factorial analysis for benchmark suites", "suitescore"};
  app.require_subcommand(1, 1);

  std::function<void()> action;

  // boost
  auto* boost = app.add_subcommand("boost", "Summary mean of each candidate's benchmark values");
  std::string boost_in, boost_mean = "geometric";
  std::int64_t boost_cores = 0;
  boost->add_option("--in", boost_in, "Results CSV")->required();
  boost->add_option("--mean", boost_mean, "arithmetic | geometric | harmonic | quadratic | ssp");
  boost->add_option("--cores", boost_cores, "Core count for --mean ssp");
  boost->callback([&] {
    action = [&] {
      const bool ssp = boost_mean == "ssp";
      const auto kind = parse_mean_kind(boost_mean);
      if (!ssp && !kind) fail(ErrorCode::Usage, "--mean: unknown kind '" + boost_mean + "'");
      if (ssp && boost->count("--cores") == 0) fail(ErrorCode::Usage, "--mean ssp requires --cores");
      const auto doc = load_results(boost_in);
      for (const auto& p : doc.profiles) {
        const auto v = raw_values(p);
        const double score = ssp ? sustained_system_performance(v, boost_cores) : mean(*kind, v);
        out << p.candidate_name << '\t' << format_real(score) << '\n';
      }
    };
  });

  // standardize
  auto* standardize = app.add_subcommand("standardize", "Standardized matrix as CSV");
  std::string std_in, std_out;
  int std_decimals = 4;
  standardize->add_option("--in", std_in, "Results CSV")->required();
  standardize->add_option("--out", std_out, "Output CSV (default stdout)");
  standardize->add_option("--decimals", std_decimals, "Digits after the decimal point")
      ->check(CLI::Range(0, 17));
  standardize->callback([&] {
    action = [&] {
      const auto doc = load_results(std_in);
      emit(std_out, serialize_standardized_csv(standardize_profiles(doc.profiles), std_decimals),
           out);
    };
  });

  // radar
  auto* radar = app.add_subcommand("radar", "Radar chart SVG and polygon areas");
  std::string radar_in, radar_out;
  radar->add_option("--in", radar_in, "Results CSV")->required();
  radar->add_option("--out", radar_out, "Output SVG")->required();
  radar->callback([&] {
    action = [&] {
      const auto doc = load_results(radar_in);
      const auto matrix = standardize_profiles(doc.profiles);
      const auto areas = radar_areas(matrix);
      const std::map<std::string, double> by_name(areas.begin(), areas.end());
      write_file(radar_out, render_radar_svg(matrix, by_name).svg);
      for (const auto& [name, area] : areas) out << name << '\t' << format_real(area) << '\n';
    };
  });

  // improve
  auto* improve = app.add_subcommand("improve", "Improvement percentage between two results");
  double perf_a = 0.0, perf_b = 0.0;
  std::string improve_direction;
  std::vector<std::string> improve_names;
  std::vector<double> prices;
  improve->add_option("--a", perf_a, "First performance value")->required();
  improve->add_option("--b", perf_b, "Second performance value")->required();
  improve->add_option("--direction", improve_direction, "HB or LB")->required();
  improve->add_option("--names", improve_names, "Names for a and b")->delimiter(',')->expected(2);
  improve->add_option("--prices", prices, "Prices low,high for the break-even")
      ->delimiter(',')
      ->expected(2);
  improve->callback([&] {
    action = [&] {
      const MetricDirection dir = direction_flag(improve_direction);
      const std::string name_a = improve_names.empty() ? "first" : improve_names[0];
      const std::string name_b = improve_names.empty() ? "second" : improve_names[1];
      const auto r = improvement_ratio(perf_a, perf_b, dir, name_a, name_b);
      out << "improvement_percent\t" << format_real(r.improvement_percent) << '\n';
      out << "better\t" << (r.tie ? std::string("tie") : r.better_candidate) << '\n';
      if (!prices.empty()) {
        out << "breakeven_percent\t" << format_real(cost_breakeven(prices[0], prices[1])) << '\n';
      }
    };
  });

  // plan
  auto* plan = app.add_subcommand("plan", "Randomized trial CSV skeleton");
  std::string plan_spec, plan_out;
  std::vector<std::string> plan_responses;
  plan->add_option("--spec", plan_spec, "Design spec JSON")->required();
  plan->add_option("--out", plan_out, "Output CSV (default stdout)");
  plan->add_option("--responses", plan_responses, "One skeleton row per response")
      ->delimiter(',');
  plan->callback([&] {
    action = [&] {
      const auto spec = load_spec(plan_spec);
      const auto assignments = spec.assignments();
      const auto trials = doe::plan_trials(assignments, spec.benchmarks, spec.replicates, spec.seed);
      emit(plan_out, serialize_plan_csv(trials, spec, plan_responses), out);
    };
  });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Effects, Lenth margin and Pareto chart");
  std::string an_spec, an_results, an_response, an_json, an_svg;
  analyze->add_option("--spec", an_spec, "Design spec JSON")->required();
  analyze->add_option("--results", an_results, "Filled-in trial CSV")->required();
  analyze->add_option("--response", an_response, "Response to analyze")->required();
  analyze->add_option("--json", an_json, "EffectSet JSON path (default stdout)");
  analyze->add_option("--svg", an_svg, "Pareto chart SVG path");
  analyze->callback([&] {
    action = [&] {
      const auto spec = load_spec(an_spec);
      const auto records = load_trials(an_results, spec);
      const auto effects = analyze_response(spec, records, an_response);
      ReportBundle bundle;
      bundle.inputs = {an_spec, an_results};
      bundle.seed = spec.seed;
      bundle.alpha = spec.alpha;
      bundle.effects.push_back(effects);
      emit(an_json, write_report_json(bundle), out);
      if (!an_svg.empty()) write_file(an_svg, render_pareto_svg(effects).svg);
      if (effects.degenerate) err << "warning: " << effects.warning << '\n';
    };
  });

  // report
  auto* report = app.add_subcommand("report", "Bundle every available analysis");
  std::string rep_in, rep_spec, rep_results, rep_json, rep_text, rep_direction = "HB";
  std::vector<std::string> rep_responses;
  std::vector<double> rep_perf, rep_prices;
  report->add_option("--in", rep_in, "Results CSV");
  report->add_option("--spec", rep_spec, "Design spec JSON");
  report->add_option("--results", rep_results, "Filled-in trial CSV");
  report->add_option("--response", rep_responses, "Responses to analyze (default: all)")
      ->delimiter(',');
  report->add_option("--perf", rep_perf, "Two performance values a,b")->delimiter(',')->expected(2);
  report->add_option("--direction", rep_direction, "HB or LB for --perf");
  report->add_option("--prices", rep_prices, "Prices low,high")->delimiter(',')->expected(2);
  report->add_option("--json", rep_json, "JSON report path");
  report->add_option("--text", rep_text, "Text report path (default stdout)");
  report->callback([&] {
    action = [&] {
      if (rep_spec.empty() != rep_results.empty()) {
        fail(ErrorCode::Usage, "--spec and --results must be given together");
      }
      ReportBundle bundle;
      if (!rep_in.empty()) {
        bundle.inputs.push_back(rep_in);
        const auto doc = load_results(rep_in);
        for (const auto& p : doc.profiles) {
          const auto v = raw_values(p);
          bundle.boosting.push_back({p.candidate_name, arithmetic_mean(v), geometric_mean(v),
                                     harmonic_mean(v), quadratic_mean(v)});
        }
        bundle.standardized = standardize_profiles(doc.profiles);
        if (bundle.standardized->metric_names.size() >= 3) {
          bundle.radar_areas = radar_areas(*bundle.standardized);
        }
      }
      if (!rep_spec.empty()) {
        bundle.inputs.push_back(rep_spec);
        bundle.inputs.push_back(rep_results);
        const auto spec = load_spec(rep_spec);
        const auto records = load_trials(rep_results, spec);
        bundle.seed = spec.seed;
        bundle.alpha = spec.alpha;
        std::vector<std::string> responses = rep_responses;
        if (responses.empty()) {
          std::set<std::string> names;
          for (const auto& r : records) names.insert(r.response);
          responses.assign(names.begin(), names.end());
        }
        for (const auto& r : responses) bundle.effects.push_back(analyze_response(spec, records, r));
      }
      if (!rep_perf.empty()) {
        ImprovementEntry e;
        e.name_a = "first";
        e.name_b = "second";
        e.perf_a = rep_perf[0];
        e.perf_b = rep_perf[1];
        e.direction = direction_flag(rep_direction);
        e.result = improvement_ratio(e.perf_a, e.perf_b, e.direction);
        bundle.improvements.push_back(e);
      }
      if (!rep_prices.empty()) {
        bundle.breakevens.push_back(
            {rep_prices[0], rep_prices[1], cost_breakeven(rep_prices[0], rep_prices[1])});
      }
      if (bundle.empty()) {
        fail(ErrorCode::EmptyBundle, "nothing to report: pass --in, --spec/--results, --perf or --prices");
      }
      if (!rep_json.empty()) write_file(rep_json, write_report_json(bundle));
      emit(rep_text, write_report_text(bundle), out);
    };
  });

  std::vector<const char*> argv{"suitescore"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    action();
    return kExitOk;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
}

}  // namespace suitescore
