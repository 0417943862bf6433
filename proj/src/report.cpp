#include "suitescore/report.hpp"

#include <cstdio>
#include <json.hpp>

#include "suitescore/error.hpp"

namespace suitescore {
namespace {

using Json = nlohmann::ordered_json;

std::string dec4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

Json effects_to_json(const doe::EffectSet& set) {
  Json terms = Json::array();
  for (const auto& t : set.terms) {
    terms.push_back({{"term", t.term},
                     {"mask", t.mask},
                     {"effect", t.effect},
                     {"significant", set.is_significant(t.term)}});
  }
  Json j{{"response", set.response},
         {"alpha", set.alpha},
         {"pse", set.pse},
         {"margin_of_error", set.margin_of_error},
         {"degenerate", set.degenerate},
         {"terms", std::move(terms)}};
  if (!set.warning.empty()) j["warning"] = set.warning;
  return j;
}

doe::EffectSet effects_from_json(const Json& j) {
  doe::EffectSet set;
  set.response = j.at("response").get<std::string>();
  set.alpha = j.at("alpha").get<double>();
  set.pse = j.at("pse").get<double>();
  set.margin_of_error = j.at("margin_of_error").get<double>();
  set.degenerate = j.at("degenerate").get<bool>();
  if (j.contains("warning")) set.warning = j.at("warning").get<std::string>();
  for (const auto& t : j.at("terms")) {
    set.terms.push_back({t.at("term").get<std::string>(), t.at("mask").get<std::uint32_t>(),
                         t.at("effect").get<double>()});
    if (t.at("significant").get<bool>()) set.significant.push_back(set.terms.back().term);
  }
  return set;
}

}  // namespace

bool ReportBundle::empty() const noexcept {
  return boosting.empty() && !standardized && radar_areas.empty() && effects.empty() &&
         improvements.empty() && breakevens.empty();
}

std::string write_report_json(const ReportBundle& bundle) {
  if (bundle.empty()) fail(ErrorCode::EmptyBundle, "report bundle holds no results");
  Json root;
  Json provenance{{"inputs", bundle.inputs}};
  if (bundle.seed) provenance["seed"] = *bundle.seed;
  if (bundle.alpha) provenance["alpha"] = *bundle.alpha;
  root["provenance"] = std::move(provenance);

  if (!bundle.boosting.empty()) {
    Json rows = Json::array();
    for (const auto& r : bundle.boosting) {
      rows.push_back({{"candidate", r.candidate},
                      {"arithmetic", r.arithmetic},
                      {"geometric", r.geometric},
                      {"harmonic", r.harmonic},
                      {"quadratic", r.quadratic}});
    }
    root["boosting"] = std::move(rows);
  }
  if (bundle.standardized) {
    root["standardized"] = {{"metrics", bundle.standardized->metric_names},
                            {"candidates", bundle.standardized->candidate_names},
                            {"entries", bundle.standardized->entries}};
  }
  if (!bundle.radar_areas.empty()) {
    Json areas = Json::array();
    for (const auto& [name, area] : bundle.radar_areas) {
      areas.push_back({{"candidate", name}, {"area", area}});
    }
    root["radar_areas"] = std::move(areas);
  }
  if (!bundle.effects.empty()) {
    Json sets = Json::array();
    for (const auto& s : bundle.effects) sets.push_back(effects_to_json(s));
    root["effects"] = std::move(sets);
  }
  if (!bundle.improvements.empty()) {
    Json items = Json::array();
    for (const auto& i : bundle.improvements) {
      items.push_back({{"label", i.label},
                       {"name_a", i.name_a},
                       {"name_b", i.name_b},
                       {"perf_a", i.perf_a},
                       {"perf_b", i.perf_b},
                       {"direction", std::string(to_string(i.direction))},
                       {"improvement_percent", i.result.improvement_percent},
                       {"better", i.result.better_candidate},
                       {"tie", i.result.tie}});
    }
    root["improvements"] = std::move(items);
  }
  if (!bundle.breakevens.empty()) {
    Json items = Json::array();
    for (const auto& b : bundle.breakevens) {
      items.push_back(
          {{"price_low", b.price_low}, {"price_high", b.price_high}, {"percent", b.percent}});
    }
    root["breakeven"] = std::move(items);
  }
  return root.dump(2) + "\n";
}

std::string write_report_text(const ReportBundle& bundle) {
  if (bundle.empty()) fail(ErrorCode::EmptyBundle, "report bundle holds no results");
  std::string out = "Benchmark suite report\n";
  out += "inputs:";
  for (const auto& in : bundle.inputs) out += " " + in;
  out += "\n";
  if (bundle.seed) out += "seed: " + std::to_string(*bundle.seed) + "\n";
  if (bundle.alpha) out += "alpha: " + dec4(*bundle.alpha) + "\n";

  if (!bundle.boosting.empty()) {
    out += "\n[boosting metrics]\ncandidate\tarithmetic\tgeometric\tharmonic\tquadratic\n";
    for (const auto& r : bundle.boosting) {
      out += r.candidate + "\t" + dec4(r.arithmetic) + "\t" + dec4(r.geometric) + "\t" +
             dec4(r.harmonic) + "\t" + dec4(r.quadratic) + "\n";
    }
  }
  if (bundle.standardized) {
    const auto& m = *bundle.standardized;
    out += "\n[standardized]\nmetric";
    for (const auto& c : m.candidate_names) out += "\t" + c;
    out += "\n";
    for (std::size_t i = 0; i < m.metric_names.size(); ++i) {
      out += m.metric_names[i];
      for (double v : m.entries[i]) out += "\t" + dec4(v);
      out += "\n";
    }
  }
  if (!bundle.radar_areas.empty()) {
    out += "\n[radar areas]\n";
    for (const auto& [name, area] : bundle.radar_areas) out += name + "\t" + dec4(area) + "\n";
  }
  for (const auto& s : bundle.effects) {
    out += "\n[effects: " + s.response + "]\n";
    out += "pse\t" + dec4(s.pse) + "\nmargin_of_error\t" + dec4(s.margin_of_error) +
           "\nalpha\t" + dec4(s.alpha) + "\n";
    for (const auto& t : s.terms) {
      out += t.term + "\t" + dec4(t.effect) + (s.is_significant(t.term) ? "\t*" : "") + "\n";
    }
    if (s.degenerate) out += "warning: " + s.warning + "\n";
  }
  if (!bundle.improvements.empty()) {
    out += "\n[improvement]\n";
    for (const auto& i : bundle.improvements) {
      out += (i.label.empty() ? std::string("comparison") : i.label) + "\t" + i.name_a + " " +
             dec4(i.perf_a) + " vs " + i.name_b + " " + dec4(i.perf_b) + " (" +
             std::string(to_string(i.direction)) + ")\t" + dec4(i.result.improvement_percent) +
             "%\t" + (i.result.tie ? std::string("tie") : "better: " + i.result.better_candidate) +
             "\n";
    }
  }
  if (!bundle.breakevens.empty()) {
    out += "\n[cost break-even]\n";
    for (const auto& b : bundle.breakevens) {
      out += dec4(b.price_low) + " -> " + dec4(b.price_high) + "\t" + dec4(b.percent) + "%\n";
    }
  }
  return out;
}

ReportBundle read_report_json(std::string_view json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
    ReportBundle b;
    const Json& prov = root.at("provenance");
    b.inputs = prov.at("inputs").get<std::vector<std::string>>();
    if (prov.contains("seed")) b.seed = prov.at("seed").get<std::uint64_t>();
    if (prov.contains("alpha")) b.alpha = prov.at("alpha").get<double>();
    if (root.contains("boosting")) {
      for (const auto& r : root.at("boosting")) {
        b.boosting.push_back({r.at("candidate").get<std::string>(), r.at("arithmetic").get<double>(),
                              r.at("geometric").get<double>(), r.at("harmonic").get<double>(),
                              r.at("quadratic").get<double>()});
      }
    }
    if (root.contains("standardized")) {
      const Json& s = root.at("standardized");
      b.standardized = StandardizedMatrix{s.at("metrics").get<std::vector<std::string>>(),
                                          s.at("candidates").get<std::vector<std::string>>(),
                                          s.at("entries").get<std::vector<std::vector<double>>>()};
    }
    if (root.contains("radar_areas")) {
      for (const auto& a : root.at("radar_areas")) {
        b.radar_areas.emplace_back(a.at("candidate").get<std::string>(), a.at("area").get<double>());
      }
    }
    if (root.contains("effects")) {
      for (const auto& e : root.at("effects")) b.effects.push_back(effects_from_json(e));
    }
    if (root.contains("improvements")) {
      for (const auto& i : root.at("improvements")) {
        ImprovementEntry e;
        e.label = i.at("label").get<std::string>();
        e.name_a = i.at("name_a").get<std::string>();
        e.name_b = i.at("name_b").get<std::string>();
        e.perf_a = i.at("perf_a").get<double>();
        e.perf_b = i.at("perf_b").get<double>();
        const auto dir = parse_direction(i.at("direction").get<std::string>());
        if (!dir) fail(ErrorCode::BadDirection, "report: bad improvement direction");
        e.direction = *dir;
        e.result.improvement_percent = i.at("improvement_percent").get<double>();
        e.result.better_candidate = i.at("better").get<std::string>();
        e.result.tie = i.at("tie").get<bool>();
        b.improvements.push_back(std::move(e));
      }
    }
    if (root.contains("breakeven")) {
      for (const auto& x : root.at("breakeven")) {
        b.breakevens.push_back({x.at("price_low").get<double>(), x.at("price_high").get<double>(),
                                x.at("percent").get<double>()});
      }
    }
    return b;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidSpec, std::string("report JSON is malformed: ") + e.what());
  }
}

}  // namespace suitescore
