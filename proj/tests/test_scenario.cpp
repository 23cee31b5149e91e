#include <doctest.h>

#include "hospfin/assumptions.hpp"
#include "hospfin/error.hpp"
#include "hospfin/generator.hpp"
#include "hospfin/scenario.hpp"
#include "hospfin/scenario_json.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hospfin;

namespace {

std::vector<std::int64_t> counts_of(const std::vector<DemandCell>& cells) {
  std::vector<std::int64_t> out;
  for (const auto& c : cells) out.push_back(c.count);
  return out;
}

ScenarioData tiny_data() {
  ScenarioData data;
  data.hospitals = {"q1"};
  data.wards = {"r1"};
  data.population = {Rational(1)};
  data.group_sizes = {10};
  data.excel_cost = {{5}};
  data.internal_cost = {{{1}}};
  data.out_cost = {{3}};
  data.budget = 5;
  return data;
}

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(to_string(parse_rational("2/8")) == "1/4");
  CHECK(to_string(parse_rational("7")) == "7/1");
  CHECK(to_string(parse_rational("-3/6")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.25"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("demand cells split groups by population") {
  const std::vector<std::int64_t> sizes = {1000, 400};
  const std::vector<Rational> pop = {Rational(1, 4), Rational(3, 4)};
  const auto cells = build_demand_cells(sizes, pop);
  REQUIRE(cells.size() == 4);
  CHECK(cells[0] == DemandCell{0, 0, 250});
  CHECK(cells[1] == DemandCell{1, 0, 750});
  CHECK(cells[2] == DemandCell{0, 1, 100});
  CHECK(cells[3] == DemandCell{1, 1, 300});

  const std::vector<std::int64_t> empty = {0, 0};
  for (const auto& c : build_demand_cells(empty, pop)) CHECK(c.count == 0);
}

TEST_CASE("largest remainder matches the closest split oracle") {
  const std::vector<Rational> thirds(3, Rational(1, 3));
  const std::vector<std::int64_t> seven = {7};
  const auto expected = oracle::closest_split(7, thirds);
  CHECK(expected == std::vector<std::int64_t>{3, 2, 2});
  CHECK(counts_of(build_demand_cells(seven, thirds)) == expected);

  // A second case with distinct remainders: 10 over (1/7, 2/7, 4/7) -> quotas 1.43, 2.86, 5.71.
  const std::vector<Rational> sevenths = {Rational(1, 7), Rational(2, 7), Rational(4, 7)};
  const std::vector<std::int64_t> ten = {10};
  CHECK(counts_of(build_demand_cells(ten, sevenths)) == oracle::closest_split(10, sevenths));
}

TEST_CASE("demand conservation over generated instances") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = generate_scenario(seed, {1 + seed % 5, 1 + seed % 4}, GenerationProfile::unconstrained);
    for (std::size_t r = 0; r < inst.ward_count(); ++r) {
      std::int64_t total = 0;
      for (std::size_t d = 0; d < inst.district_count(); ++d) {
        const auto& cell = inst.cell(d, r);
        CHECK(cell.district == d);
        CHECK(cell.ward == r);
        total += cell.count;
      }
      CHECK(total == inst.group_size(r));
    }
  }
}

TEST_CASE("instance validation names the field") {
  auto expect_field = [](ScenarioData data, const std::string& field) {
    try {
      ScenarioInstance inst(std::move(data));
      FAIL("expected InvalidInstance for " << field);
    } catch (const InvalidInstance& e) {
      CHECK(e.field() == field);
    }
  };
  {
    auto d = tiny_data();
    d.population = {Rational(9, 10)};
    expect_field(d, "population");
  }
  {
    auto d = tiny_data();
    d.population = {Rational(0)};
    expect_field(d, "population");
  }
  {
    auto d = tiny_data();
    d.group_sizes = {-1};
    expect_field(d, "group_sizes");
  }
  {
    auto d = tiny_data();
    d.excel_cost = {{-1}};
    expect_field(d, "excel_cost");
  }
  {
    auto d = tiny_data();
    d.internal_cost = {{{1, 2}}};
    expect_field(d, "internal_cost");
  }
  {
    auto d = tiny_data();
    d.out_cost = {};
    expect_field(d, "out_cost");
  }
  {
    auto d = tiny_data();
    d.budget = -1;
    expect_field(d, "budget");
  }
  {
    auto d = tiny_data();
    d.wards = {};
    expect_field(d, "wards");
  }
  {
    auto d = tiny_data();
    d.hospitals = {"a", "a"};
    expect_field(d, "hospitals");
  }
  CHECK_THROWS_AS(build_demand_cells(std::vector<std::int64_t>{1}, std::vector<Rational>{Rational(1, 2)}),
                  InvalidInstance);
}

TEST_CASE("scenario JSON round trip is exact") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (auto profile : {GenerationProfile::unconstrained, GenerationProfile::assumption1,
                         GenerationProfile::assumption45}) {
      const auto inst = generate_scenario(seed, {2 + seed % 3, 2 + seed % 2}, profile);
      const auto text = scenario_to_json(inst).dump();
      CHECK(parse_scenario(text) == inst);
    }
  }
}

TEST_CASE("scenario loader rejects bad documents") {
  auto doc = scenario_to_json(fixture::example1());
  CHECK_NOTHROW(scenario_from_json(nlohmann::json::parse(doc.dump())));

  auto wrong_schema = doc;
  wrong_schema["schema"] = 2;
  CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse(wrong_schema.dump())), SchemaError);

  auto missing = doc;
  missing.erase("budget");
  CHECK_THROWS_WITH_AS(scenario_from_json(nlohmann::json::parse(missing.dump())), doctest::Contains("budget"),
                       SchemaError);

  auto float_pop = doc;
  float_pop["population"] = {0.25, 0.75};
  CHECK_THROWS_WITH_AS(scenario_from_json(nlohmann::json::parse(float_pop.dump())),
                       doctest::Contains("population"), SchemaError);

  auto bad_sum = doc;
  bad_sum["population"] = {"1/4", "13/20"};
  CHECK_THROWS_WITH_AS(scenario_from_json(nlohmann::json::parse(bad_sum.dump())), doctest::Contains("population"),
                       InvalidInstance);

  CHECK_THROWS_AS(parse_scenario("{not json"), SchemaError);
}

TEST_CASE("generator is deterministic and honours its profiles") {
  CHECK(generate_scenario(42, {3, 4}, GenerationProfile::unconstrained) ==
        generate_scenario(42, {3, 4}, GenerationProfile::unconstrained));
  CHECK_FALSE(generate_scenario(42, {3, 4}, GenerationProfile::unconstrained) ==
              generate_scenario(43, {3, 4}, GenerationProfile::unconstrained));
  CHECK_THROWS_AS(generate_scenario(1, {0, 2}, GenerationProfile::unconstrained), InvalidInstance);
  CHECK_THROWS_AS(parse_profile("nope"), std::invalid_argument);
  CHECK(parse_profile("assumption4&5-satisfying") == GenerationProfile::assumption45);

  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Dimensions dims{2 + seed % 3, 2 + seed % 4};
    CHECK(check_assumption1(generate_scenario(seed, dims, GenerationProfile::assumption1)).holds());
    const auto a45 = generate_scenario(seed, {1 + seed % 5, 1 + seed % 7}, GenerationProfile::assumption45);
    CHECK(check_assumption4(a45).holds());
    CHECK(check_assumption5(a45).holds());
  }
}

TEST_CASE("assumption1 generation gives up with a named failure") {
  // A single hospital makes assumption 1 unsatisfiable for two or more wards.
  CHECK_THROWS_WITH_AS(generate_scenario(0, {1, 2}, GenerationProfile::assumption1),
                       doctest::Contains("assumption1-satisfying"), GenerationFailure);
}
