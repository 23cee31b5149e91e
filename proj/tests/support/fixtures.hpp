#pragma once

#include <string>
#include <vector>

#include "hospfin/local_game.hpp"
#include "hospfin/scenario.hpp"

namespace hospfin::fixture {

/// Two hospitals, two wards, the group sizes and populations of the worked
/// local-financing examples. Central-plan fields are filled with small
/// placeholder costs.
inline ScenarioInstance two_by_two(std::int64_t p1, std::int64_t p2) {
  ScenarioData data;
  data.hospitals = {"q1", "q2"};
  data.wards = {"r1", "r2"};
  data.population = {Rational(1, 4), Rational(3, 4)};
  data.group_sizes = {p1, p2};
  data.excel_cost = {{10, 10}, {10, 10}};
  data.internal_cost = {{{1, 1}, {2, 2}}, {{2, 2}, {1, 1}}};
  data.out_cost = {{5, 5}, {5, 5}};
  data.budget = 20;
  return ScenarioInstance(std::move(data));
}

inline ScenarioInstance example1() { return two_by_two(1000, 400); }
inline ScenarioInstance example2() { return two_by_two(1000, 4); }

/// Two-hospital reception market: groups S (22%), W (46%), C (32%); each hospital
/// equips two groups and a group shared by both hospitals is split equally.
inline const std::vector<std::string> kTwoGroupStrategies = {"SW", "SC", "WC"};

/// Payoff table in percent. Off-diagonal cells follow the equal-split rule.
/// The diagonal cells are the reference ones (33, 34, 39): the split rule would
/// give 34, 27, 39 there, so only the off-diagonal cells are derived.
inline PayoffTensor two_group_reception_game() {
  const int share[3] = {22, 46, 32};  // S, W, C
  const int groups[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  const int reference_diagonal[3] = {33, 34, 39};

  std::vector<std::vector<Rational>> payoffs;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == b) {
        payoffs.push_back({reference_diagonal[a], reference_diagonal[a]});
        continue;
      }
      Rational pa = 0;
      Rational pb = 0;
      for (int g = 0; g < 3; ++g) {
        const bool in_a = groups[a][0] == g || groups[a][1] == g;
        const bool in_b = groups[b][0] == g || groups[b][1] == g;
        if (in_a && in_b) {
          pa += Rational(share[g]) / 2;
          pb += Rational(share[g]) / 2;
        } else if (in_a) {
          pa += share[g];
        } else if (in_b) {
          pb += share[g];
        }
      }
      payoffs.push_back({pa, pb});
    }
  }
  return PayoffTensor({"I", "II"}, kTwoGroupStrategies, std::move(payoffs));
}

/// The reference table, cell by cell, as (I, II) percentages in row-major order.
inline const std::vector<std::pair<int, int>> kReferenceTwoGroupTable = {
    {33, 33}, {57, 43}, {45, 55},  //
    {43, 57}, {34, 34}, {38, 62},  //
    {55, 45}, {62, 38}, {39, 39},
};

/// Five hospitals, seven wards, each district served only by its own hospital.
/// Adding (q, r) saves exactly |P_r| * a_q patient cost units against K = 100,
/// which is positive precisely on the 5-4-2-0-0 staircase.
inline ScenarioInstance worked_staircase() {
  ScenarioData data;
  data.hospitals = {"q1", "q2", "q3", "q4", "q5"};
  data.wards = {"r1", "r2", "r3", "r4", "r5", "r6", "r7"};
  data.population = {Rational(2, 5), Rational(3, 10), Rational(1, 5), Rational(3, 50), Rational(1, 25)};
  data.group_sizes = {1500, 1000, 450, 400, 300, 200, 100};
  data.excel_cost.assign(5, std::vector<Rational>(7, Rational(100)));
  data.internal_cost.assign(5, Matrix<Rational>(5, std::vector<Rational>(7)));
  for (std::size_t d = 0; d < 5; ++d) {
    for (std::size_t q = 0; q < 5; ++q) {
      for (std::size_t r = 0; r < 7; ++r) data.internal_cost[d][q][r] = d == q ? 0 : 2;
    }
  }
  data.out_cost.assign(5, std::vector<Rational>(7, Rational(1)));
  data.budget = 2000;
  return ScenarioInstance(std::move(data));
}

}  // namespace hospfin::fixture
