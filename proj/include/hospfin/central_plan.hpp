#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hospfin/rational.hpp"
#include "hospfin/scenario.hpp"

namespace hospfin {

/// A (hospital, ward) pair, i.e. one y variable.
struct Placement {
  std::size_t hospital = 0;
  std::size_t ward = 0;

  auto operator<=>(const Placement&) const = default;
};

/// Set of excellent wards over a fixed |Q| x |R| grid.
class ExcellenceSet {
 public:
  ExcellenceSet() = default;
  ExcellenceSet(std::size_t hospitals, std::size_t wards);
  static ExcellenceSet full(std::size_t hospitals, std::size_t wards);

  std::size_t hospital_count() const noexcept { return hospitals_; }
  std::size_t ward_count() const noexcept { return wards_; }

  bool contains(Placement p) const { return flags_.at(p.hospital * wards_ + p.ward) != 0; }
  /// Returns false when already present. Throws std::out_of_range off the grid.
  bool insert(Placement p);
  void erase(Placement p);
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Members sorted by (hospital, ward).
  std::vector<Placement> members() const;
  /// Number of excellent wards at hospital q.
  std::size_t count_at(std::size_t q) const;

  bool operator==(const ExcellenceSet&) const = default;

 private:
  std::size_t hospitals_ = 0;
  std::size_t wards_ = 0;
  std::vector<char> flags_;
  std::size_t size_ = 0;
};

/// Where a demand cell is hospitalized: a hospital (same ward type as the
/// cell) or outside the State when empty.
using Destination = std::optional<std::size_t>;

struct GreedyStep {
  Placement chosen;
  Rational z_before;
  Rational z_after;
};

struct PlanSolution {
  ExcellenceSet excellence;
  std::vector<Destination> assignment;  // indexed like ScenarioInstance::cells()
  Rational z_value;
  Rational excel_cost_part;
  Rational patient_cost_part;
  std::vector<GreedyStep> trace;
};

Rational excel_cost_of(const ExcellenceSet& set, const ScenarioInstance& inst);
bool admissible(const ExcellenceSet& set, const ScenarioInstance& inst);

/// Best assignment for a fixed excellence set. Each cell goes to its cheapest
/// destination among OUTSIDE and the excellent wards of its type; ties go to
/// OUTSIDE, then to the lowest hospital index. Throws BudgetViolation when the
/// set does not fit the budget.
PlanSolution evaluate_z(const ExcellenceSet& set, const ScenarioInstance& inst);

/// Greedy insertion from the empty set: each step adds the budget-feasible
/// pair giving the lowest Z (ties by hospital, then ward index) and stops as
/// soon as no pair strictly improves Z.
PlanSolution greedy_solve(const ScenarioInstance& inst);

inline constexpr std::size_t kMaxExactPairs = 24;

enum class Enumeration {
  pruned,    // depth-first, skipping supersets of over-budget sets
  unpruned,  // every subset of Q x R, filtered by admissible()
};

/// Minimizer of Z over all admissible sets; ties go to fewer members, then to
/// the lexicographically smaller member list. Throws InstanceTooLarge when
/// |Q| * |R| > kMaxExactPairs.
PlanSolution exact_solve(const ScenarioInstance& inst, Enumeration mode = Enumeration::pruned);

struct TotalOrders {
  std::vector<std::size_t> ward_order;
  std::vector<std::size_t> hospital_order;
};

/// Wards by group size, non-increasing, stable.
std::vector<std::size_t> ward_order(const ScenarioInstance& inst);

/// Convenience order of hospitals for one ward type: repeatedly append the
/// hospital whose addition to the already chosen ones yields the lowest patient
/// cost for that group, ties by hospital index. No assumptions required.
std::vector<std::size_t> hospital_order_for_ward(const ScenarioInstance& inst, std::size_t ward);

/// The ward-independent order. Requires assumptions 4 and 5 and throws
/// AssumptionViolation naming the failed one otherwise. Computed on the
/// first ward of ward_order().
std::vector<std::size_t> hospital_order(const ScenarioInstance& inst);

TotalOrders total_orders(const ScenarioInstance& inst);

struct StaircaseVerdict {
  bool holds = true;
  /// (member, missing predecessor) for the first violation found.
  std::optional<std::pair<Placement, Placement>> witness;
};

/// Checks that every member (q, r) comes with every (q', r') where q' is not
/// after q and r' is not after r in the given orders.
StaircaseVerdict check_proposition2(const PlanSolution& sol, const TotalOrders& orders);
StaircaseVerdict check_staircase(const ExcellenceSet& set, const TotalOrders& orders);

/// Excellent-ward count per hospital, listed in hospital order.
std::vector<std::size_t> staircase_shape(const ExcellenceSet& set, const TotalOrders& orders);

}  // namespace hospfin
