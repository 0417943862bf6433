#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "suitescore/doe.hpp"
#include "suitescore/error.hpp"
#include "suitescore/student_t.hpp"

using namespace suitescore;
using namespace suitescore::doe;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected suitescore::Error");
  return ErrorCode::Io;
}

DesignMatrix table_four_design() {
  return build_design({{"A", "m1", "m2"}, {"B", "2", "4"}, {"C", "W", "A"}});
}

// Table IV rows keyed by (A, B, C) labels.
const std::map<Assignment, std::pair<double, double>>& table_four_rows() {
  static const std::map<Assignment, std::pair<double, double>> rows{
      {{"m1", "2", "W"}, {3.727, 299.813}}, {{"m1", "4", "A"}, {18.138, 513.873}},
      {{"m2", "2", "W"}, {3.401, 351.003}}, {{"m1", "2", "A"}, {31.176, 298.949}},
      {{"m2", "2", "A"}, {24.537, 379.765}}, {{"m2", "4", "A"}, {25.32, 368.289}},
      {{"m1", "4", "W"}, {2.73, 412.717}},  {{"m2", "4", "W"}, {2.987, 373.948}}};
  return rows;
}

ResponseTable table_four() {
  const DesignMatrix d = table_four_design();
  std::vector<double> r1, r2;
  for (std::size_t r = 0; r < d.run_count(); ++r) {
    const auto& row = table_four_rows().at(d.decode(r));
    r1.push_back(row.first);
    r2.push_back(row.second);
  }
  ResponseTable t(d);
  t.add_response("R1", r1);
  t.add_response("R2", r2);
  return t;
}

double effect_of(const std::vector<TermEffect>& effects, const std::string& term) {
  for (const auto& e : effects) {
    if (e.term == term) return e.effect;
  }
  FAIL("missing term " << term);
  return 0.0;
}

std::vector<Factor> factors(std::size_t k) {
  std::vector<Factor> f;
  for (std::size_t j = 0; j < k; ++j) f.push_back({std::string(1, char('A' + j)), "lo", "hi"});
  return f;
}

}  // namespace

TEST_SUITE("design") {
  TEST_CASE("k = 1 is [-1, +1]") {
    const auto d = build_design({{"X", "off", "on"}});
    REQUIRE(d.run_count() == 2);
    CHECK(d.code(0, 0) == -1);
    CHECK(d.code(1, 0) == 1);
    CHECK(d.decode(0) == Assignment{"off"});
    CHECK(d.decode(1) == Assignment{"on"});
  }

  TEST_CASE("k = 3 decodes to the eight Table IV conditions") {
    const auto d = table_four_design();
    REQUIRE(d.run_count() == 8);
    std::set<Assignment> decoded;
    for (std::size_t r = 0; r < 8; ++r) decoded.insert(d.decode(r));
    std::set<Assignment> expected;
    for (const auto& [a, _] : table_four_rows()) expected.insert(a);
    CHECK(decoded == expected);
    CHECK(d.find_run({"m2", "4", "A"}) == std::size_t{7});
    CHECK_FALSE(d.find_run({"m3", "4", "A"}));
    CHECK_FALSE(d.find_run({"m2", "4"}));
  }

  TEST_CASE("every term column is balanced and pairwise orthogonal") {
    for (std::size_t k = 1; k <= 6; ++k) {
      const auto d = build_design(factors(k));
      const auto runs = d.run_count();
      std::set<std::vector<int>> rows;
      for (std::size_t r = 0; r < runs; ++r) {
        std::vector<int> row;
        for (std::size_t j = 0; j < k; ++j) row.push_back(d.code(r, j));
        rows.insert(row);
      }
      CHECK(rows.size() == runs);
      for (std::uint32_t a = 1; a < runs; ++a) {
        int sum = 0;
        for (std::size_t r = 0; r < runs; ++r) sum += d.term_sign(r, a);
        CHECK(sum == 0);
        for (std::uint32_t b = a + 1; b < runs; ++b) {
          int dot = 0;
          for (std::size_t r = 0; r < runs; ++r) dot += d.term_sign(r, a) * d.term_sign(r, b);
          CHECK(dot == 0);
        }
      }
    }
  }

  TEST_CASE("term labels") {
    const auto d = table_four_design();
    CHECK(d.term_label(1) == "A");
    CHECK(d.term_label(3) == "AB");
    CHECK(d.term_label(7) == "ABC");
    const auto long_names = build_design({{"threads", "2", "4"}, {"workload", "W", "A"}});
    CHECK(long_names.term_label(3) == "threads*workload");
  }

  TEST_CASE("errors") {
    CHECK(code_of([] { build_design({}); }) == ErrorCode::NoFactors);
    CHECK(code_of([] { build_design({{"A", "x", "y"}, {"A", "p", "q"}}); }) ==
          ErrorCode::DuplicateFactor);
    CHECK(code_of([] { build_design(factors(17)); }) == ErrorCode::TooManyFactors);
    CHECK(code_of([] { build_design({{"A", "same", "same"}}); }) == ErrorCode::InvalidSpec);
    CHECK(build_design(factors(16)).run_count() == 65536);
  }
}

TEST_SUITE("effects") {
  TEST_CASE("constant response has zero effects") {
    ResponseTable t(table_four_design());
    t.add_response("flat", std::vector<double>(8, 4.2));
    const auto e = estimate_effects(t, "flat");
    REQUIRE(e.size() == 7);
    for (const auto& x : e) CHECK(x.effect == 0.0);
  }

  TEST_CASE("Table IV spot values") {
    const auto e = estimate_effects(table_four(), "R1");
    CHECK(effect_of(e, "C") == doctest::Approx(21.5815).epsilon(1e-12));
    CHECK(effect_of(e, "A") == doctest::Approx(0.1185).epsilon(1e-9));
    // Frozen from an independent contrast computation over the table.
    CHECK(effect_of(e, "B") == doctest::Approx(-3.4165).epsilon(1e-9));
    CHECK(effect_of(e, "AB") == doctest::Approx(3.601).epsilon(1e-9));
    CHECK(effect_of(e, "AC") == doctest::Approx(0.153).epsilon(1e-9));
    CHECK(effect_of(e, "BC") == doctest::Approx(-2.711).epsilon(1e-9));
    CHECK(effect_of(e, "ABC") == doctest::Approx(3.3095).epsilon(1e-9));
    const auto e2 = estimate_effects(table_four(), "R2");
    CHECK(effect_of(e2, "B") == doctest::Approx(84.82425).epsilon(1e-9));
    CHECK(effect_of(e2, "AB") == doctest::Approx(-79.08975).epsilon(1e-9));
  }

  TEST_CASE("effects equal twice the least-squares coefficients") {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> noise(0.0, 10.0);
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto d = build_design(factors(k));
      for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> y(d.run_count());
        for (auto& v : y) v = 50.0 + noise(rng);
        ResponseTable t(d);
        t.add_response("y", y);
        const auto effects = estimate_effects(t, "y");
        const auto beta = oracle::least_squares_coefficients(y, k);
        for (const auto& e : effects) {
          const double want = 2.0 * beta[e.mask];
          CHECK(std::abs(e.effect - want) <= 1e-9 * std::max(1.0, std::abs(want)));
        }
      }
    }
  }

  TEST_CASE("effects are linear and blind to an added constant") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-5, 5);
    const auto d = build_design(factors(4));
    std::vector<double> y(d.run_count());
    for (auto& v : y) v = u(rng);
    const double a = -2.5, b = 17.0;
    auto y2 = y;
    for (auto& v : y2) v = a * v + b;
    ResponseTable t(d);
    t.add_response("y", y);
    t.add_response("y2", y2);
    const auto e1 = estimate_effects(t, "y");
    const auto e2 = estimate_effects(t, "y2");
    for (std::size_t i = 0; i < e1.size(); ++i) {
      CHECK(e2[i].effect == doctest::Approx(a * e1[i].effect).epsilon(1e-12).scale(1.0));
    }
  }

  TEST_CASE("swapping a factor's labels negates exactly the terms containing it") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0, 100);
    const std::size_t k = 3;
    auto f = factors(k);
    const auto d = build_design(f);
    std::vector<double> y(d.run_count());
    for (auto& v : y) v = u(rng);
    for (std::size_t j = 0; j < k; ++j) {
      auto swapped = f;
      std::swap(swapped[j].low_label, swapped[j].high_label);
      const auto d2 = build_design(swapped);
      // The same physical condition now sits at run r ^ (1 << j).
      std::vector<double> y2(y.size());
      for (std::size_t r = 0; r < y.size(); ++r) y2[r ^ (std::size_t{1} << j)] = y[r];
      ResponseTable t1(d), t2(d2);
      t1.add_response("y", y);
      t2.add_response("y", y2);
      const auto e1 = estimate_effects(t1, "y");
      const auto e2 = estimate_effects(t2, "y");
      for (std::size_t i = 0; i < e1.size(); ++i) {
        const bool contains = (e1[i].mask >> j) & 1U;
        CHECK(e2[i].effect == doctest::Approx(contains ? -e1[i].effect : e1[i].effect));
      }
    }
  }

  TEST_CASE("errors") {
    const auto t = table_four();
    CHECK(code_of([&] { estimate_effects(t, "R3"); }) == ErrorCode::UnknownResponse);
    ResponseTable bad(table_four_design());
    CHECK(code_of([&] { bad.add_response("short", std::vector<double>(7, 1.0)); }) ==
          ErrorCode::LengthMismatch);
  }
}

TEST_SUITE("lenth") {
  TEST_CASE("equal magnitudes give 1.5 e") {
    CHECK(lenth_pse(std::vector{2.0, -2.0, 2.0, 2.0, -2.0}) == doctest::Approx(3.0));
  }

  TEST_CASE("R1 hand trace") {
    const std::vector e{0.1185, -3.4165, 21.5815, 3.601, 0.153, -2.711, 3.3095};
    // s0 = 1.5 × 3.3095 = 4.96425; 21.5815 ≥ 2.5·s0 is trimmed; the
    // remaining six have median (2.711 + 3.3095)/2 = 3.01025.
    CHECK(lenth_pse(e) == doctest::Approx(4.515375).epsilon(1e-12));
  }

  TEST_CASE("degenerate zeros") {
    CHECK(lenth_pse(std::vector{0.0, 0.0, 1e6}) == 0.0);
  }

  TEST_CASE("pse is scale equivariant") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> n(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> e(3 + trial % 13);
      for (auto& x : e) x = n(rng);
      const double a = (trial % 2 ? -1.0 : 1.0) * (0.1 + trial);
      auto scaled = e;
      for (auto& x : scaled) x *= a;
      CHECK(lenth_pse(scaled) == doctest::Approx(std::abs(a) * lenth_pse(e)).epsilon(1e-12));
    }
  }

  TEST_CASE("margin") {
    CHECK(lenth_margin(0.0, 7, 0.05) == 0.0);
    const double me = lenth_margin(4.515375, 7, 0.05);
    CHECK(me == doctest::Approx(stats::t_quantile(0.975, 7.0 / 3.0) * 4.515375).epsilon(1e-15));
    // t_{0.975, 7/3} = 3.764123072104065 from an independent inversion.
    CHECK(me == doctest::Approx(3.764123072104065 * 4.515375).epsilon(1e-9));
    CHECK(lenth_margin(2 * 4.515375, 7, 0.05) == doctest::Approx(2 * me).epsilon(1e-15));
  }

  TEST_CASE("errors") {
    CHECK(code_of([] { lenth_pse(std::vector{1.0, 2.0}); }) == ErrorCode::TooFewEffects);
    CHECK(code_of([] { lenth_margin(1.0, 2, 0.05); }) == ErrorCode::TooFewEffects);
    CHECK(code_of([] { lenth_margin(1.0, 7, 0.0); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { lenth_margin(1.0, 7, 1.0); }) == ErrorCode::OutOfRange);
  }
}

TEST_SUITE("pareto") {
  TEST_CASE("R1: only C crosses the line") {
    const auto set = pareto_analysis(table_four(), "R1", 0.05);
    REQUIRE(set.terms.size() == 7);
    CHECK(set.terms.front().term == "C");
    CHECK(set.significant == std::vector<std::string>{"C"});
    CHECK(set.pse == doctest::Approx(4.515375));
    CHECK(set.margin_of_error == doctest::Approx(16.9964272167).epsilon(1e-9));
    CHECK_FALSE(set.degenerate);
    for (std::size_t i = 1; i < set.terms.size(); ++i) {
      CHECK(std::abs(set.terms[i - 1].effect) >= std::abs(set.terms[i].effect));
    }
  }

  TEST_CASE("R2: nothing significant, B largest") {
    const auto set = pareto_analysis(table_four(), "R2", 0.05);
    CHECK(set.significant.empty());
    CHECK(set.terms.front().term == "B");
    CHECK(set.pse == doctest::Approx(46.273125));
    CHECK(set.margin_of_error == doctest::Approx(174.1777374309).epsilon(1e-9));
  }

  TEST_CASE("constant response is degenerate with nothing flagged") {
    ResponseTable t(table_four_design());
    t.add_response("flat", std::vector<double>(8, 1.0));
    const auto set = pareto_analysis(t, "flat");
    CHECK(set.significant.empty());
    CHECK(set.degenerate);
    CHECK_FALSE(set.warning.empty());
  }

  TEST_CASE("zero PSE flags every nonzero effect") {
    // Only C moves the response; the other six contrasts vanish.
    const auto d = table_four_design();
    std::vector<double> y;
    for (std::size_t r = 0; r < d.run_count(); ++r) y.push_back(d.code(r, 2) > 0 ? 10.0 : 2.0);
    ResponseTable t(d);
    t.add_response("y", y);
    const auto set = pareto_analysis(t, "y");
    CHECK(set.degenerate);
    CHECK(set.significant == std::vector<std::string>{"C"});
  }

  TEST_CASE("significant set invariant under positive response scaling") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> n(0, 1);
    const auto d = build_design(factors(4));
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<double> y(d.run_count());
      for (std::size_t r = 0; r < y.size(); ++r) y[r] = n(rng) + (d.code(r, 0) > 0 ? 4.0 : 0.0);
      auto scaled = y;
      for (auto& v : scaled) v *= 37.5;
      ResponseTable t(d);
      t.add_response("y", y);
      t.add_response("s", scaled);
      auto a = pareto_analysis(t, "y").significant;
      auto b = pareto_analysis(t, "s").significant;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }

  TEST_CASE("alpha out of range") {
    CHECK(code_of([] { pareto_analysis(table_four(), "R1", 1.5); }) == ErrorCode::OutOfRange);
  }
}

TEST_SUITE("planning") {
  std::vector<Assignment> instance_grid() {
    return {{"2", "W"}, {"4", "W"}, {"2", "A"}, {"4", "A"}, {"1", "W"}, {"1", "A"}};
  }
  const std::vector<std::string> kNpb{"BT", "CG", "FT", "IS", "LU", "MG", "SP"};

  TEST_CASE("six assignments, seven benchmarks, five replicates give 210 trials") {
    const auto plan = plan_trials(instance_grid(), kNpb, 5, 2012);
    CHECK(plan.trials.size() == 210);
    CHECK(plan.seed == 2012);
    for (std::size_t i = 0; i < plan.trials.size(); ++i) CHECK(plan.trials[i].position == i);
  }

  TEST_CASE("singleton") {
    const std::vector<Assignment> one{{"x"}};
    const std::vector<std::string> bench{"b"};
    const auto plan = plan_trials(one, bench, 1, 0);
    REQUIRE(plan.trials.size() == 1);
    CHECK(plan.trials[0] == TrialDescriptor{{"x"}, "b", 1, 0});
  }

  TEST_CASE("full Cartesian product exactly once; seed fixes the order") {
    const auto grid = instance_grid();
    const auto a = plan_trials(grid, kNpb, 5, 42);
    const auto again = plan_trials(grid, kNpb, 5, 42);
    const auto other = plan_trials(grid, kNpb, 5, 43);
    CHECK(a.trials == again.trials);

    using Key = std::tuple<Assignment, std::string, unsigned>;
    auto keys = [](const TrialPlan& p) {
      std::multiset<Key> s;
      for (const auto& t : p.trials) s.insert({t.assignment, t.benchmark, t.replicate});
      return s;
    };
    std::multiset<Key> cartesian;
    for (const auto& g : grid) {
      for (const auto& b : kNpb) {
        for (unsigned r = 1; r <= 5; ++r) cartesian.insert({g, b, r});
      }
    }
    CHECK(keys(a) == cartesian);
    CHECK(keys(other) == cartesian);
    CHECK(std::set<Key>(cartesian.begin(), cartesian.end()).size() == cartesian.size());
    CHECK_FALSE(a.trials == other.trials);
  }

  TEST_CASE("the generator is pinned: seed 2012 order is frozen") {
    // mt19937_64 output is fixed by the C++ standard, so this holds on every
    // conforming platform.
    const auto plan = plan_trials(instance_grid(), kNpb, 5, 2012);
    CHECK(plan.trials[0] == TrialDescriptor{{"2", "W"}, "CG", 2, 0});
    CHECK(plan.trials[1] == TrialDescriptor{{"2", "A"}, "BT", 3, 1});
    CHECK(plan.trials[2] == TrialDescriptor{{"4", "A"}, "MG", 5, 2});
  }

  TEST_CASE("errors") {
    const std::vector<Assignment> none;
    const std::vector<std::string> no_bench;
    const auto grid = instance_grid();
    CHECK(code_of([&] { plan_trials(none, kNpb, 1, 0); }) == ErrorCode::EmptyAssignments);
    CHECK(code_of([&] { plan_trials(grid, no_bench, 1, 0); }) == ErrorCode::EmptyBenchmarks);
    CHECK(code_of([&] { plan_trials(grid, kNpb, 0, 0); }) == ErrorCode::ZeroReplicates);
  }
}

TEST_SUITE("aggregation") {
  TrialRecord rec(Assignment a, std::string b, unsigned r, double v, std::string resp = "t") {
    return {std::move(a), std::move(b), r, std::move(resp), v};
  }

  TEST_CASE("identical replicates collapse to the value") {
    std::vector<TrialRecord> rs;
    for (const char* b : {"BT", "CG", "FT"}) {
      for (unsigned r = 1; r <= 5; ++r) rs.push_back(rec({"x"}, b, r, 2.5));
    }
    for (auto kind : {MeanKind::Arithmetic, MeanKind::Geometric, MeanKind::Harmonic,
                      MeanKind::Quadratic}) {
      CHECK(aggregate_trials(rs, kind).at({"x"}) == 2.5);
    }
  }

  TEST_CASE("geometric across benchmarks") {
    const std::vector rs{rec({"x"}, "a", 1, 2.0), rec({"x"}, "b", 1, 8.0)};
    CHECK(aggregate_trials(rs).at({"x"}) == doctest::Approx(4.0));
  }

  TEST_CASE("arithmetic across benchmarks") {
    const std::vector rs{rec({"x"}, "a", 1, 1.0), rec({"x"}, "b", 1, 2.0), rec({"x"}, "c", 1, 3.0)};
    CHECK(aggregate_trials(rs, MeanKind::Arithmetic).at({"x"}) == 2.0);
  }

  TEST_CASE("replicates collapse before benchmarks") {
    // a: geo(1, 4) = 2; b: 8 → geo(2, 8) = 4.
    const std::vector rs{rec({"x"}, "a", 1, 1.0), rec({"x"}, "a", 2, 4.0), rec({"x"}, "b", 1, 8.0)};
    CHECK(aggregate_trials(rs).at({"x"}) == doctest::Approx(4.0));
  }

  TEST_CASE("align to design") {
    const auto d = build_design({{"A", "lo", "hi"}});
    std::map<Assignment, double> agg{{{"hi"}, 2.0}, {{"lo"}, 1.0}, {{"base"}, 9.0}};
    CHECK(align_to_design(agg, d) == std::vector{1.0, 2.0});
    agg.erase({"hi"});
    CHECK(code_of([&] { align_to_design(agg, d); }) == ErrorCode::EmptyGroup);
  }

  TEST_CASE("errors") {
    const std::vector missing{rec({"x"}, "a", 1, 1.0), rec({"y"}, "b", 1, 1.0)};
    CHECK(code_of([&] { aggregate_trials(missing); }) == ErrorCode::EmptyGroup);
    const std::vector zero{rec({"x"}, "a", 1, 0.0)};
    CHECK(code_of([&] { aggregate_trials(zero); }) == ErrorCode::NonPositiveValue);
    const std::vector mixed{rec({"x"}, "a", 1, 1.0, "t"), rec({"x"}, "a", 1, 1.0, "f")};
    CHECK(code_of([&] { aggregate_trials(mixed); }) == ErrorCode::MixedResponses);
    CHECK(filter_response(mixed, "f").size() == 1);
  }
}
