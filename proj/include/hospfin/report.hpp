#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hospfin/assumptions.hpp"
#include "hospfin/central_plan.hpp"
#include "hospfin/local_game.hpp"
#include "hospfin/scenario.hpp"

namespace hospfin {

using Json = nlohmann::ordered_json;

Json to_json(const AssumptionReport& report);
Json to_json(const ScenarioInstance& inst, const StrategyProfile& profile);
Json to_json(const Proposition1Verdict& verdict);
Json to_json(const StaircaseVerdict& verdict, const ScenarioInstance& inst);

Json local_report_json(const ScenarioInstance& inst, const PayoffTensor& tensor,
                       const EquilibriumReport& report, const Proposition1Verdict& verdict);

/// Payoff table entries are embedded up to this many profiles.
inline constexpr std::size_t kMaxReportedProfiles = 10000;

/// `method` is "greedy" or "exact"; `orders` and `staircase` are included when present.
Json plan_report_json(const ScenarioInstance& inst, const PlanSolution& sol, const std::string& method,
                      const std::optional<TotalOrders>& orders,
                      const std::optional<StaircaseVerdict>& staircase);

inline constexpr const char* kDiversifiedCriterion =
    "diversified excellences: at least one equilibrium where hospitals choose different wards "
    "and no equilibrium where all hospitals choose the same ward";
inline constexpr const char* kPolesCriterion =
    "poles of excellence: staircase verdict holds, some hospital has at least 2 excellent wards "
    "and some hospital has none";

/// Both financing regimes side by side.
struct CompareReport {
  EquilibriumReport local;
  Proposition1Verdict proposition1;
  PlanSolution central;
  std::optional<TotalOrders> orders;          // only when assumptions 4 and 5 hold
  std::optional<StaircaseVerdict> staircase;  // idem
  bool diversified = false;
  bool poles = false;
};

bool diversified_verdict(const EquilibriumReport& report);
bool poles_verdict(const ExcellenceSet& set, const std::optional<StaircaseVerdict>& staircase);

/// Runs the local game and the central greedy plan. Propagates InstanceTooLarge.
CompareReport compare_regimes(const ScenarioInstance& inst);

Json compare_report_json(const ScenarioInstance& inst, const CompareReport& report);

std::string assumptions_text(const std::vector<AssumptionReport>& reports);
std::string local_report_text(const ScenarioInstance& inst, const PayoffTensor& tensor,
                              const EquilibriumReport& report, const Proposition1Verdict& verdict);
std::string plan_report_text(const ScenarioInstance& inst, const PlanSolution& sol, const std::string& method,
                             const std::optional<TotalOrders>& orders,
                             const std::optional<StaircaseVerdict>& staircase, bool verbose);
std::string compare_report_text(const ScenarioInstance& inst, const CompareReport& report);

}  // namespace hospfin
