#include "hospfin/assumptions.hpp"

#include <optional>

namespace hospfin {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

AssumptionReport check_assumption1(const ScenarioInstance& inst) {
  AssumptionReport report{1, "each group outnumbers the smallest other-type district subgroup", {}, {}};
  const std::size_t nr = inst.ward_count();
  const std::size_t nq = inst.hospital_count();
  if (nr == 1) report.notes.push_back("single ward type: holds vacuously");

  for (std::size_t k = 0; k < nr; ++k) {
    std::optional<Rational> best;
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < nq; ++j) {
        Rational value = Rational(static_cast<long>(inst.group_size(i))) * inst.population(j);
        if (!best || value < *best) {
          best = value;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (!best) continue;
    const Rational lhs(static_cast<long>(inst.group_size(k)));
    if (!(lhs > *best)) {
      report.violations.push_back(
          {"|P_" + idx(k) + "| = " + to_string(lhs) + " is not greater than |P_" + idx(best_i) +
               "| * a_" + idx(best_j) + " = " + to_string(*best),
           {k, best_i, best_j},
           lhs,
           *best});
    }
  }
  return report;
}

AssumptionReport check_assumption2(const ScenarioInstance& inst) {
  AssumptionReport report{2, "budget covers some ward and excelling pays off in aggregate", {}, {}};
  const std::size_t nq = inst.hospital_count();
  const std::size_t nr = inst.ward_count();

  Rational min_cost = inst.excel_cost(0, 0);
  std::size_t min_q = 0;
  std::size_t min_r = 0;
  Rational total_cost = 0;
  for (std::size_t q = 0; q < nq; ++q) {
    for (std::size_t r = 0; r < nr; ++r) {
      const auto& c = inst.excel_cost(q, r);
      total_cost += c;
      if (c < min_cost) {
        min_cost = c;
        min_q = q;
        min_r = r;
      }
    }
  }
  if (inst.budget() < min_cost) {
    report.violations.push_back({"(a) budget " + to_string(inst.budget()) + " is below the cheapest excel cost C[q" +
                                     idx(min_q) + "][r" + idx(min_r) + "] = " + to_string(min_cost),
                                 {min_q, min_r},
                                 inst.budget(),
                                 min_cost});
  }

  Rational benefit = 0;
  for (const auto& cell : inst.cells()) {
    const Rational count(static_cast<long>(cell.count));
    for (std::size_t q = 0; q < nq; ++q) {
      benefit += count * (inst.out_cost(cell.district, cell.ward) - inst.internal_cost(cell.district, q, cell.ward));
    }
  }
  if (!(benefit > total_cost)) {
    report.violations.push_back({"(b) aggregate patient saving " + to_string(benefit) +
                                     " is not greater than the total excel cost " + to_string(total_cost),
                                 {},
                                 benefit,
                                 total_cost});
  }
  return report;
}

AssumptionReport check_assumption3(const ScenarioInstance&) {
  return {3, "greedy solution accepted as the central plan", {}, {"modeling stance; not a property of the data"}};
}

AssumptionReport check_assumption4(const ScenarioInstance& inst) {
  AssumptionReport report{4, "internal cost depends only on district and hospital", {}, {}};
  for (std::size_t d = 0; d < inst.district_count(); ++d) {
    for (std::size_t q = 0; q < inst.hospital_count(); ++q) {
      const auto& base = inst.internal_cost(d, q, 0);
      for (std::size_t r = 1; r < inst.ward_count(); ++r) {
        const auto& c = inst.internal_cost(d, q, r);
        if (c != base) {
          report.violations.push_back({"c_in[d" + idx(d) + "][q" + idx(q) + "][r1] = " + to_string(base) + " differs from c_in[d" +
                                           idx(d) + "][q" + idx(q) + "][r" + idx(r) + "] = " + to_string(c),
                                       {d, q, 0, r},
                                       base,
                                       c});
          return report;
        }
      }
    }
  }
  return report;
}

AssumptionReport check_assumption5(const ScenarioInstance& inst) {
  AssumptionReport report{5, "uniform excel cost K", {}, {}};
  const auto& base = inst.excel_cost(0, 0);
  for (std::size_t q = 0; q < inst.hospital_count(); ++q) {
    for (std::size_t r = 0; r < inst.ward_count(); ++r) {
      const auto& c = inst.excel_cost(q, r);
      if (c != base) {
        report.violations.push_back({"C[q1][r1] = " + to_string(base) + " differs from C[q" + idx(q) + "][r" + idx(r) + "] = " + to_string(c),
                                     {0, 0, q, r},
                                     base,
                                     c});
        return report;
      }
    }
  }
  return report;
}

std::vector<AssumptionReport> check_all_assumptions(const ScenarioInstance& inst) {
  return {check_assumption1(inst), check_assumption2(inst), check_assumption3(inst), check_assumption4(inst),
          check_assumption5(inst)};
}

}  // namespace hospfin
