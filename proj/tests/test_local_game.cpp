#include <doctest.h>

#include <set>

#include "hospfin/assumptions.hpp"
#include "hospfin/error.hpp"
#include "hospfin/generator.hpp"
#include "hospfin/local_game.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hospfin;

namespace {

StrategyProfile sp(std::vector<std::size_t> choice) { return StrategyProfile{std::move(choice)}; }

std::vector<Rational> ints(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

ScenarioInstance scaled(const ScenarioInstance& inst, std::int64_t factor) {
  auto data = inst.data();
  for (auto& g : data.group_sizes) g *= factor;
  return ScenarioInstance(std::move(data));
}

}  // namespace

TEST_CASE("payoff rule on the worked example") {
  const auto inst = fixture::example1();
  CHECK(payoff(inst, sp({1, 0})) == ints({400, 1000}));
  CHECK(payoff(inst, sp({0, 0})) == ints({250, 750}));
  CHECK(payoff(inst, sp({0, 1})) == ints({1000, 400}));
  CHECK(payoff(inst, sp({1, 1})) == ints({100, 300}));
}

TEST_CASE("payoff with one hospital and with three") {
  ScenarioData one;
  one.hospitals = {"q1"};
  one.wards = {"r1", "r2", "r3"};
  one.population = {Rational(1)};
  one.group_sizes = {5, 9, 2};
  one.excel_cost = {{1, 1, 1}};
  one.internal_cost = {{{1, 1, 1}}};
  one.out_cost = {{1, 1, 1}};
  one.budget = 1;
  const ScenarioInstance single(one);
  for (std::size_t r = 0; r < 3; ++r) CHECK(payoff(single, sp({r})) == std::vector<Rational>{single.group_size(r)});
  const auto tensor = build_payoff_tensor(single);
  CHECK(tensor.profile_count() == 3);

  ScenarioData three;
  three.hospitals = {"q1", "q2", "q3"};
  three.wards = {"r1", "r2"};
  three.population = {Rational(1, 2), Rational(1, 4), Rational(1, 4)};
  three.group_sizes = {800, 40};
  three.excel_cost.assign(3, {1, 1});
  three.internal_cost.assign(3, Matrix<Rational>(3, std::vector<Rational>{1, 1}));
  three.out_cost.assign(3, {1, 1});
  three.budget = 1;
  const ScenarioInstance inst(three);
  const auto all_r1 = sp({0, 0, 0});
  const auto pays = payoff(inst, all_r1);
  CHECK(pays == ints({400, 200, 200}));
  for (std::size_t q = 0; q < 3; ++q) CHECK(pays[q] == oracle::share(inst, all_r1, q));
  CHECK(pays[0] + pays[1] + pays[2] == 800);
}

TEST_CASE("payoff tensor matches per-entry recomputation") {
  const auto inst = generate_scenario(11, {2, 3}, GenerationProfile::unconstrained);
  const auto tensor = build_payoff_tensor(inst);
  REQUIRE(tensor.profile_count() == 9);
  for (const auto& profile : oracle::all_profiles(2, 3)) {
    const auto& row = tensor.payoffs(profile);
    for (std::size_t q = 0; q < 2; ++q) CHECK(row[q] == oracle::share(inst, profile, q));
    CHECK(tensor.profile_at(tensor.index_of(profile)) == profile);
  }
}

TEST_CASE("tensor size guard") {
  CHECK(profile_count_or_zero(6, 10) == 1'000'000);
  CHECK(profile_count_or_zero(7, 10) == 0);
  CHECK(profile_count_or_zero(64, 2) == 0);
  const auto big = generate_scenario(1, {7, 8}, GenerationProfile::unconstrained);
  CHECK_THROWS_WITH_AS(build_payoff_tensor(big), doctest::Contains("1000000"), InstanceTooLarge);
  CHECK_THROWS_AS(check_proposition1(big), InstanceTooLarge);
}

TEST_CASE("equilibria of the worked examples") {
  const auto first = enumerate_pure_nash(build_payoff_tensor(fixture::example1()));
  REQUIRE(first.equilibria.size() == 1);
  // q2 alone at r2 would rather share r1, so the diversified profile that
  // survives is q1 at r2 and q2 at r1.
  CHECK(first.equilibria[0] == sp({1, 0}));
  CHECK(first.uniform_equilibria.empty());

  const auto second = enumerate_pure_nash(build_payoff_tensor(fixture::example2()));
  REQUIRE(second.equilibria.size() == 1);
  CHECK(second.equilibria[0] == sp({0, 0}));
  CHECK(second.diversified_equilibria.empty());
}

TEST_CASE("two-group reception game") {
  const auto tensor = fixture::two_group_reception_game();
  for (std::size_t i = 0; i < 9; ++i) {
    const auto& [a, b] = fixture::kReferenceTwoGroupTable[i];
    CHECK(tensor.payoffs_at(i) == ints({a, b}));
  }
  const auto report = enumerate_pure_nash(tensor);
  REQUIRE(report.equilibria.size() == 2);
  CHECK(report.equilibria[0] == sp({0, 2}));  // I: SW, II: WC
  CHECK(report.equilibria[1] == sp({2, 0}));  // I: WC, II: SW

  // The pure equal-split diagonal (34, 27, 39) leaves the equilibria unchanged.
  std::vector<std::vector<Rational>> rule;
  for (std::size_t i = 0; i < 9; ++i) rule.push_back(tensor.payoffs_at(i));
  rule[0] = ints({34, 34});
  rule[4] = ints({27, 27});
  rule[8] = ints({39, 39});
  const PayoffTensor split_rule({"I", "II"}, fixture::kTwoGroupStrategies, std::move(rule));
  CHECK(enumerate_pure_nash(split_rule).equilibria == report.equilibria);
}

TEST_CASE("tensor constructor rejects malformed tables") {
  CHECK_THROWS_AS(PayoffTensor({"a"}, {"x", "y"}, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(PayoffTensor({"a"}, {"x"}, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(PayoffTensor({}, {"x"}, {}), std::invalid_argument);
}

TEST_CASE("proposition 1 verdicts on the worked examples") {
  const auto v1 = check_proposition1(fixture::example1());
  CHECK(v1.assumption1_holds);
  CHECK_FALSE(v1.has_uniform_ne);
  CHECK(v1.has_diversified_ne);
  CHECK(v1.prediction_holds());

  const auto v2 = check_proposition1(fixture::example2());
  CHECK_FALSE(v2.assumption1_holds);
  CHECK(v2.has_uniform_ne);
  CHECK(v2.prediction_holds());
}

TEST_CASE("equilibrium properties over generated games") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Dimensions dims{2 + seed % 2, 2 + seed % 3};
    const auto inst = generate_scenario(seed, dims, GenerationProfile::unconstrained);
    const auto tensor = build_payoff_tensor(inst);
    const auto report = enumerate_pure_nash(tensor);

    // Deviation closure, checked with the oracle; and nothing missed.
    std::set<StrategyProfile> listed(report.equilibria.begin(), report.equilibria.end());
    for (const auto& profile : oracle::all_profiles(dims.hospitals, dims.wards)) {
      CHECK(oracle::is_equilibrium(inst, profile) == (listed.count(profile) == 1));
    }
    CHECK(report.equilibria.size() == report.uniform_equilibria.size() + report.diversified_equilibria.size());
    for (const auto& p : report.uniform_equilibria) CHECK(p.is_uniform());
    for (const auto& p : report.diversified_equilibria) CHECK_FALSE(p.is_uniform());

    // Share conservation and the total bound.
    Rational market = 0;
    for (std::size_t r = 0; r < inst.ward_count(); ++r) market += inst.group_size(r);
    for (std::size_t i = 0; i < tensor.profile_count(); ++i) {
      const auto profile = tensor.profile_at(i);
      std::vector<Rational> by_ward(inst.ward_count(), Rational(0));
      std::vector<bool> chosen(inst.ward_count(), false);
      Rational total = 0;
      for (std::size_t q = 0; q < dims.hospitals; ++q) {
        by_ward[profile.choice[q]] += tensor.payoffs_at(i)[q];
        chosen[profile.choice[q]] = true;
        total += tensor.payoffs_at(i)[q];
      }
      bool every_ward_chosen = true;
      for (std::size_t r = 0; r < inst.ward_count(); ++r) {
        if (chosen[r]) CHECK(by_ward[r] == inst.group_size(r));
        every_ward_chosen = every_ward_chosen && chosen[r];
      }
      CHECK(total <= market);
      if (every_ward_chosen) CHECK(total == market);
    }

    // Scale invariance.
    CHECK(enumerate_pure_nash(build_payoff_tensor(scaled(inst, 3 + seed % 5))).equilibria == report.equilibria);
  }
}

TEST_CASE("proposition 1 holds on the proved two-by-two case") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = generate_scenario(seed, {2, 2}, GenerationProfile::assumption1);
    const auto verdict = check_proposition1(inst);
    CHECK(verdict.assumption1_holds);
    CHECK_FALSE(verdict.has_uniform_ne);
    CHECK(verdict.has_diversified_ne);
  }
}
