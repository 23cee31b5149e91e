#include "hospfin/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace hospfin {

namespace {

std::string short_string(const Rational& value) {
  return value.get_den() == 1 ? value.get_num().get_str() : to_string(value);
}

Json placement_json(const ScenarioInstance& inst, Placement p) {
  return Json{{"hospital", inst.hospital_name(p.hospital)}, {"ward", inst.ward_name(p.ward)}};
}

Json profile_list(const ScenarioInstance& inst, const std::vector<StrategyProfile>& profiles) {
  auto out = Json::array();
  for (const auto& p : profiles) out.push_back(to_json(inst, p));
  return out;
}

std::string profile_text(const ScenarioInstance& inst, const StrategyProfile& profile) {
  std::string s = "(";
  for (std::size_t q = 0; q < profile.choice.size(); ++q) {
    if (q) s += ", ";
    s += inst.hospital_name(q) + "->" + inst.ward_name(profile.choice[q]);
  }
  return s + ")";
}

std::string members_text(const ScenarioInstance& inst, const ExcellenceSet& set) {
  std::ostringstream os;
  for (std::size_t q = 0; q < inst.hospital_count(); ++q) {
    os << "  " << inst.hospital_name(q) << ":";
    bool any = false;
    for (std::size_t r = 0; r < inst.ward_count(); ++r) {
      if (set.contains({q, r})) {
        os << " " << inst.ward_name(r);
        any = true;
      }
    }
    if (!any) os << " (none)";
    os << "\n";
  }
  return os.str();
}

}  // namespace

Json to_json(const AssumptionReport& report) {
  Json j;
  j["assumption"] = report.assumption;
  j["title"] = report.title;
  j["holds"] = report.holds();
  auto violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back(Json{{"description", v.description},
                              {"indices", v.indices},
                              {"lhs", to_string(v.lhs)},
                              {"rhs", to_string(v.rhs)}});
  }
  j["violations"] = violations;
  if (!report.notes.empty()) j["notes"] = report.notes;
  return j;
}

Json to_json(const ScenarioInstance& inst, const StrategyProfile& profile) {
  Json j = Json::object();
  for (std::size_t q = 0; q < profile.choice.size(); ++q) j[inst.hospital_name(q)] = inst.ward_name(profile.choice[q]);
  return j;
}

Json to_json(const Proposition1Verdict& verdict) {
  return Json{{"assumption1_holds", verdict.assumption1_holds},
              {"has_uniform_ne", verdict.has_uniform_ne},
              {"has_diversified_ne", verdict.has_diversified_ne},
              {"predicted_implication_holds", verdict.prediction_holds()}};
}

Json to_json(const StaircaseVerdict& verdict, const ScenarioInstance& inst) {
  Json j{{"holds", verdict.holds}};
  if (verdict.witness) {
    j["witness"] = Json{{"member", placement_json(inst, verdict.witness->first)},
                        {"missing", placement_json(inst, verdict.witness->second)}};
  }
  return j;
}

Json local_report_json(const ScenarioInstance& inst, const PayoffTensor& tensor, const EquilibriumReport& report,
                       const Proposition1Verdict& verdict) {
  Json j;
  j["regime"] = "local";
  j["hospitals"] = inst.hospital_count();
  j["wards"] = inst.ward_count();
  j["profiles"] = tensor.profile_count();
  if (tensor.profile_count() <= kMaxReportedProfiles) {
    auto table = Json::array();
    for (std::size_t i = 0; i < tensor.profile_count(); ++i) {
      Json payoffs = Json::object();
      for (std::size_t q = 0; q < tensor.player_count(); ++q) {
        payoffs[inst.hospital_name(q)] = to_string(tensor.payoffs_at(i)[q]);
      }
      table.push_back(Json{{"profile", to_json(inst, tensor.profile_at(i))}, {"payoffs", payoffs}});
    }
    j["payoff_tensor"] = table;
  } else {
    j["payoff_tensor"] = nullptr;
  }
  j["equilibria"] = profile_list(inst, report.equilibria);
  j["uniform_equilibria"] = profile_list(inst, report.uniform_equilibria);
  j["diversified_equilibria"] = profile_list(inst, report.diversified_equilibria);
  j["proposition1"] = to_json(verdict);
  return j;
}

Json plan_report_json(const ScenarioInstance& inst, const PlanSolution& sol, const std::string& method,
                      const std::optional<TotalOrders>& orders, const std::optional<StaircaseVerdict>& staircase) {
  Json j;
  j["regime"] = "central";
  j["method"] = method;
  auto members = Json::array();
  for (const auto& p : sol.excellence.members()) members.push_back(placement_json(inst, p));
  j["excellence"] = members;
  auto assignment = Json::array();
  for (std::size_t c = 0; c < inst.cells().size(); ++c) {
    const auto& cell = inst.cells()[c];
    assignment.push_back(Json{{"district", inst.hospital_name(cell.district)},
                              {"ward", inst.ward_name(cell.ward)},
                              {"count", cell.count},
                              {"destination", sol.assignment[c] ? inst.hospital_name(*sol.assignment[c]) : "OUTSIDE"}});
  }
  j["assignment"] = assignment;
  j["cost"] = Json{{"z", to_string(sol.z_value)},
                   {"excel", to_string(sol.excel_cost_part)},
                   {"patient", to_string(sol.patient_cost_part)},
                   {"budget", to_string(inst.budget())}};
  if (method == "greedy") {
    auto trace = Json::array();
    for (std::size_t i = 0; i < sol.trace.size(); ++i) {
      trace.push_back(Json{{"step", i + 1},
                           {"chosen", placement_json(inst, sol.trace[i].chosen)},
                           {"z_before", to_string(sol.trace[i].z_before)},
                           {"z_after", to_string(sol.trace[i].z_after)}});
    }
    j["trace"] = trace;
  }
  if (orders) {
    auto wards = Json::array();
    for (auto r : orders->ward_order) wards.push_back(inst.ward_name(r));
    auto hospitals = Json::array();
    for (auto q : orders->hospital_order) hospitals.push_back(inst.hospital_name(q));
    j["orders"] = Json{{"ward_order", wards}, {"hospital_order", hospitals}};
    j["staircase_shape"] = staircase_shape(sol.excellence, *orders);
  }
  if (staircase) j["proposition2"] = to_json(*staircase, inst);
  return j;
}

bool diversified_verdict(const EquilibriumReport& report) {
  return !report.diversified_equilibria.empty() && report.uniform_equilibria.empty();
}

bool poles_verdict(const ExcellenceSet& set, const std::optional<StaircaseVerdict>& staircase) {
  if (!staircase || !staircase->holds) return false;
  bool concentrated = false;
  bool empty_hospital = false;
  for (std::size_t q = 0; q < set.hospital_count(); ++q) {
    const auto n = set.count_at(q);
    concentrated = concentrated || n >= 2;
    empty_hospital = empty_hospital || n == 0;
  }
  return concentrated && empty_hospital;
}

CompareReport compare_regimes(const ScenarioInstance& inst) {
  CompareReport report;
  report.local = enumerate_pure_nash(build_payoff_tensor(inst));
  report.proposition1 = check_proposition1(inst, report.local);
  report.central = greedy_solve(inst);
  if (check_assumption4(inst).holds() && check_assumption5(inst).holds()) {
    report.orders = total_orders(inst);
    report.staircase = check_proposition2(report.central, *report.orders);
  }
  report.diversified = diversified_verdict(report.local);
  report.poles = poles_verdict(report.central.excellence, report.staircase);
  return report;
}

Json compare_report_json(const ScenarioInstance& inst, const CompareReport& report) {
  Json j;
  j["regime"] = "compare";
  auto local = Json::array();
  for (const auto& eq : report.local.equilibria) {
    local.push_back(Json{{"profile", to_json(inst, eq)}, {"uniform", eq.is_uniform()}});
  }
  j["local"] = Json{{"equilibria", local},
                    {"uniform_count", report.local.uniform_equilibria.size()},
                    {"diversified_count", report.local.diversified_equilibria.size()},
                    {"proposition1", to_json(report.proposition1)}};
  auto excellent = Json::object();
  for (std::size_t q = 0; q < inst.hospital_count(); ++q) {
    auto wards = Json::array();
    for (std::size_t r = 0; r < inst.ward_count(); ++r) {
      if (report.central.excellence.contains({q, r})) wards.push_back(inst.ward_name(r));
    }
    excellent[inst.hospital_name(q)] = wards;
  }
  j["central"] = Json{{"excellence", excellent}, {"z", to_string(report.central.z_value)}};
  if (report.staircase) {
    j["central"]["proposition2"] = to_json(*report.staircase, inst);
  } else {
    j["central"]["proposition2"] = "not applicable: assumptions 4 and 5 do not both hold";
  }
  j["verdicts"] = Json{{"diversified_excellences", report.diversified},
                       {"poles_of_excellence", report.poles},
                       {"criteria", Json{{"diversified_excellences", kDiversifiedCriterion},
                                         {"poles_of_excellence", kPolesCriterion}}}};
  return j;
}

std::string assumptions_text(const std::vector<AssumptionReport>& reports) {
  std::ostringstream os;
  for (const auto& a : reports) {
    os << "Assumption " << a.assumption << " (" << a.title << "): " << (a.holds() ? "holds" : "FAILS") << "\n";
    for (const auto& v : a.violations) os << "  - " << v.description << "\n";
    for (const auto& n : a.notes) os << "  note: " << n << "\n";
  }
  return os.str();
}

std::string local_report_text(const ScenarioInstance& inst, const PayoffTensor& tensor,
                              const EquilibriumReport& report, const Proposition1Verdict& verdict) {
  std::ostringstream os;
  os << "Local financing game: " << inst.hospital_count() << " hospitals, " << inst.ward_count() << " wards, "
     << tensor.profile_count() << " profiles\n";
  if (inst.hospital_count() == 2) {
    std::vector<std::vector<std::string>> grid(inst.ward_count() + 1,
                                               std::vector<std::string>(inst.ward_count() + 1));
    for (std::size_t s = 0; s < inst.ward_count(); ++s) {
      grid[0][s + 1] = inst.hospital_name(1) + ": [" + inst.ward_name(s) + "]";
      grid[s + 1][0] = inst.hospital_name(0) + ": [" + inst.ward_name(s) + "]";
    }
    for (std::size_t a = 0; a < inst.ward_count(); ++a) {
      for (std::size_t b = 0; b < inst.ward_count(); ++b) {
        const auto& p = tensor.payoffs(StrategyProfile{{a, b}});
        grid[a + 1][b + 1] = short_string(p[0]) + ", " + short_string(p[1]);
      }
    }
    std::size_t width = 0;
    for (const auto& row : grid) {
      for (const auto& cell : row) width = std::max(width, cell.size());
    }
    for (const auto& row : grid) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? " | " : "") << std::left << std::setw(static_cast<int>(width)) << row[i];
      }
      os << "\n";
    }
  }
  os << "Pure Nash equilibria: " << report.equilibria.size() << "\n";
  for (const auto& eq : report.equilibria) {
    os << "  " << profile_text(inst, eq) << (eq.is_uniform() ? "  [uniform]" : "  [diversified]") << "\n";
  }
  os << "Assumption 1 holds: " << (verdict.assumption1_holds ? "yes" : "no") << "\n"
     << "Uniform equilibrium exists: " << (verdict.has_uniform_ne ? "yes" : "no") << "\n"
     << "Diversified equilibrium exists: " << (verdict.has_diversified_ne ? "yes" : "no") << "\n"
     << "Predicted implication holds: " << (verdict.prediction_holds() ? "yes" : "no") << "\n";
  return os.str();
}

std::string plan_report_text(const ScenarioInstance& inst, const PlanSolution& sol, const std::string& method,
                             const std::optional<TotalOrders>& orders,
                             const std::optional<StaircaseVerdict>& staircase, bool verbose) {
  std::ostringstream os;
  os << "Central financing plan (" << method << ")\n"
     << "Z = " << short_string(sol.z_value) << "  (excel " << short_string(sol.excel_cost_part) << ", patients "
     << short_string(sol.patient_cost_part) << ", budget " << short_string(inst.budget()) << ")\n"
     << "Excellent wards:\n"
     << members_text(inst, sol.excellence);
  if (verbose) {
    for (std::size_t i = 0; i < sol.trace.size(); ++i) {
      const auto& step = sol.trace[i];
      os << "  step " << i + 1 << ": " << inst.hospital_name(step.chosen.hospital) << "/"
         << inst.ward_name(step.chosen.ward) << "  Z " << short_string(step.z_before) << " -> "
         << short_string(step.z_after) << "\n";
    }
    for (std::size_t c = 0; c < inst.cells().size(); ++c) {
      const auto& cell = inst.cells()[c];
      os << "  cell " << inst.hospital_name(cell.district) << "/" << inst.ward_name(cell.ward) << " x" << cell.count
         << " -> " << (sol.assignment[c] ? inst.hospital_name(*sol.assignment[c]) : "OUTSIDE") << "\n";
    }
  }
  if (orders) {
    os << "Ward order:";
    for (auto r : orders->ward_order) os << " " << inst.ward_name(r);
    os << "\nHospital order:";
    for (auto q : orders->hospital_order) os << " " << inst.hospital_name(q);
    os << "\nStaircase shape:";
    for (auto n : staircase_shape(sol.excellence, *orders)) os << " " << n;
    os << "\n";
  }
  if (staircase) {
    os << "Staircase property: " << (staircase->holds ? "holds" : "VIOLATED");
    if (staircase->witness) {
      const auto& [member, missing] = *staircase->witness;
      os << " (" << inst.hospital_name(member.hospital) << "/" << inst.ward_name(member.ward) << " without "
         << inst.hospital_name(missing.hospital) << "/" << inst.ward_name(missing.ward) << ")";
    }
    os << "\n";
  }
  return os.str();
}

std::string compare_report_text(const ScenarioInstance& inst, const CompareReport& report) {
  std::ostringstream os;
  os << "Local financing: " << report.local.equilibria.size() << " pure equilibria\n";
  for (const auto& eq : report.local.equilibria) os << "  " << profile_text(inst, eq) << "\n";
  os << "Central financing (greedy), Z = " << short_string(report.central.z_value) << "\n"
     << members_text(inst, report.central.excellence);
  if (report.staircase) {
    os << "Staircase property: " << (report.staircase->holds ? "holds" : "VIOLATED") << "\n";
  } else {
    os << "Staircase property: not applicable (assumptions 4 and 5 do not both hold)\n";
  }
  os << "Verdict, local: " << (report.diversified ? "diversified excellences" : "not diversified") << "\n"
     << "Verdict, central: " << (report.poles ? "poles of excellence" : "no poles of excellence") << "\n"
     << "  (" << kDiversifiedCriterion << ")\n"
     << "  (" << kPolesCriterion << ")\n";
  return os.str();
}

}  // namespace hospfin
