#pragma once

#include <optional>
#include <string>

#include "hospfin/central_plan.hpp"
#include "hospfin/scenario.hpp"

namespace hospfin {

/// Writes the facility-location model in CPLEX LP format at demand-cell
/// granularity. Only cells with a positive count get assignment variables.
///
///   y_<q>_<r>      excellence of ward r at hospital q
///   x_<c>_<q>      cell c hospitalized at hospital q (in the cell's ward type)
///   o_<c>          cell c hospitalized outside
///
/// Indices are 1-based, c is the position in ScenarioInstance::cells().
/// With `fixed`, every y is pinned in the Bounds section to 1 if the pair is
/// in the set and 0 otherwise, so the LP optimum equals evaluate_z(fixed).
std::string export_ilp(const ScenarioInstance& inst,
                       const std::optional<ExcellenceSet>& fixed = std::nullopt);

}  // namespace hospfin
