#include "hospfin/central_plan.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "hospfin/assumptions.hpp"
#include "hospfin/error.hpp"

namespace hospfin {

ExcellenceSet::ExcellenceSet(std::size_t hospitals, std::size_t wards)
    : hospitals_(hospitals), wards_(wards), flags_(hospitals * wards, 0) {}

ExcellenceSet ExcellenceSet::full(std::size_t hospitals, std::size_t wards) {
  ExcellenceSet set(hospitals, wards);
  std::fill(set.flags_.begin(), set.flags_.end(), 1);
  set.size_ = set.flags_.size();
  return set;
}

bool ExcellenceSet::insert(Placement p) {
  if (p.hospital >= hospitals_ || p.ward >= wards_) throw std::out_of_range("placement outside the grid");
  auto& flag = flags_[p.hospital * wards_ + p.ward];
  if (flag) return false;
  flag = 1;
  ++size_;
  return true;
}

void ExcellenceSet::erase(Placement p) {
  auto& flag = flags_.at(p.hospital * wards_ + p.ward);
  if (flag) {
    flag = 0;
    --size_;
  }
}

std::vector<Placement> ExcellenceSet::members() const {
  std::vector<Placement> out;
  out.reserve(size_);
  for (std::size_t q = 0; q < hospitals_; ++q) {
    for (std::size_t r = 0; r < wards_; ++r) {
      if (flags_[q * wards_ + r]) out.push_back({q, r});
    }
  }
  return out;
}

std::size_t ExcellenceSet::count_at(std::size_t q) const {
  std::size_t n = 0;
  for (std::size_t r = 0; r < wards_; ++r) n += flags_.at(q * wards_ + r) ? 1 : 0;
  return n;
}

namespace {

Rational count_of(const DemandCell& cell) { return Rational(static_cast<long>(cell.count)); }

void require_grid(const ExcellenceSet& set, const ScenarioInstance& inst) {
  if (set.hospital_count() != inst.hospital_count() || set.ward_count() != inst.ward_count()) {
    throw std::invalid_argument("excellence set dimensions differ from the instance");
  }
}

bool better_plan(const Rational& z, const std::vector<Placement>& members, const Rational& best_z,
                 const std::vector<Placement>& best_members) {
  if (z != best_z) return z < best_z;
  if (members.size() != best_members.size()) return members.size() < best_members.size();
  return members < best_members;
}

// Incremental patient-cost bookkeeping shared by greedy and the pruned
// enumeration: best[c] is the cheapest destination cost for cell c so far.
class CostState {
 public:
  explicit CostState(const ScenarioInstance& inst) : inst_(inst), best_(inst.cells().size()) {
    for (std::size_t c = 0; c < best_.size(); ++c) {
      const auto& cell = inst.cells()[c];
      best_[c] = inst.out_cost(cell.district, cell.ward);
      patient_ += count_of(cell) * best_[c];
    }
  }

  const Rational& patient_cost() const noexcept { return patient_; }

  /// Change in patient cost if (q, r) became excellent.
  Rational patient_delta(Placement p) const {
    Rational delta = 0;
    for (std::size_t d = 0; d < inst_.district_count(); ++d) {
      const std::size_t c = p.ward * inst_.district_count() + d;
      const auto& candidate = inst_.internal_cost(d, p.hospital, p.ward);
      if (candidate < best_[c]) delta += count_of(inst_.cells()[c]) * (candidate - best_[c]);
    }
    return delta;
  }

  /// Applies (q, r); the returned undo record restores the previous state.
  std::vector<std::pair<std::size_t, Rational>> apply(Placement p) {
    std::vector<std::pair<std::size_t, Rational>> undo;
    for (std::size_t d = 0; d < inst_.district_count(); ++d) {
      const std::size_t c = p.ward * inst_.district_count() + d;
      const auto& candidate = inst_.internal_cost(d, p.hospital, p.ward);
      if (candidate < best_[c]) {
        patient_ += count_of(inst_.cells()[c]) * (candidate - best_[c]);
        undo.emplace_back(c, best_[c]);
        best_[c] = candidate;
      }
    }
    return undo;
  }

  void revert(const std::vector<std::pair<std::size_t, Rational>>& undo) {
    for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
      patient_ += count_of(inst_.cells()[it->first]) * (it->second - best_[it->first]);
      best_[it->first] = it->second;
    }
  }

 private:
  const ScenarioInstance& inst_;
  std::vector<Rational> best_;
  Rational patient_ = 0;
};

}  // namespace

Rational excel_cost_of(const ExcellenceSet& set, const ScenarioInstance& inst) {
  require_grid(set, inst);
  Rational total = 0;
  for (const auto& p : set.members()) total += inst.excel_cost(p.hospital, p.ward);
  return total;
}

bool admissible(const ExcellenceSet& set, const ScenarioInstance& inst) {
  return excel_cost_of(set, inst) <= inst.budget();
}

PlanSolution evaluate_z(const ExcellenceSet& set, const ScenarioInstance& inst) {
  const Rational excel = excel_cost_of(set, inst);
  if (excel > inst.budget()) {
    throw BudgetViolation("excellence set costs " + to_string(excel) + ", budget is " + to_string(inst.budget()));
  }
  PlanSolution sol{set, {}, 0, excel, 0, {}};
  sol.assignment.reserve(inst.cells().size());
  for (const auto& cell : inst.cells()) {
    Destination dest;
    Rational cost = inst.out_cost(cell.district, cell.ward);
    for (std::size_t q = 0; q < inst.hospital_count(); ++q) {
      if (!set.contains({q, cell.ward})) continue;
      const auto& c = inst.internal_cost(cell.district, q, cell.ward);
      if (c < cost) {
        cost = c;
        dest = q;
      }
    }
    sol.assignment.push_back(dest);
    sol.patient_cost_part += count_of(cell) * cost;
  }
  sol.z_value = sol.excel_cost_part + sol.patient_cost_part;
  return sol;
}

PlanSolution greedy_solve(const ScenarioInstance& inst) {
  const std::size_t nq = inst.hospital_count();
  const std::size_t nr = inst.ward_count();
  ExcellenceSet set(nq, nr);
  CostState state(inst);
  Rational spent = 0;
  Rational z = state.patient_cost();
  std::vector<GreedyStep> trace;

  while (set.size() < nq * nr) {
    std::optional<Placement> pick;
    Rational pick_z;
    for (std::size_t q = 0; q < nq; ++q) {
      for (std::size_t r = 0; r < nr; ++r) {
        const Placement p{q, r};
        if (set.contains(p)) continue;
        const auto& cost = inst.excel_cost(q, r);
        if (spent + cost > inst.budget()) continue;
        Rational candidate = z + cost + state.patient_delta(p);
        if (!pick || candidate < pick_z) {
          pick = p;
          pick_z = std::move(candidate);
        }
      }
    }
    if (!pick || !(pick_z < z)) break;
    set.insert(*pick);
    state.apply(*pick);
    spent += inst.excel_cost(pick->hospital, pick->ward);
    trace.push_back({*pick, z, pick_z});
    z = pick_z;
  }

  PlanSolution sol = evaluate_z(set, inst);
  sol.trace = std::move(trace);
  return sol;
}

namespace {

struct Incumbent {
  Rational z;
  std::vector<Placement> members;
  bool set = false;

  void offer(const Rational& candidate_z, const std::vector<Placement>& candidate_members) {
    if (!set || better_plan(candidate_z, candidate_members, z, members)) {
      z = candidate_z;
      members = candidate_members;
      set = true;
    }
  }
};

class PrunedSearch {
 public:
  explicit PrunedSearch(const ScenarioInstance& inst) : inst_(inst), state_(inst) {}

  Incumbent run() {
    descend(0);
    return std::move(best_);
  }

 private:
  void descend(std::size_t index) {
    if (index == inst_.hospital_count() * inst_.ward_count()) {
      best_.offer(spent_ + state_.patient_cost(), members_);
      return;
    }
    const Placement p{index / inst_.ward_count(), index % inst_.ward_count()};
    const auto& cost = inst_.excel_cost(p.hospital, p.ward);
    if (spent_ + cost <= inst_.budget()) {
      spent_ += cost;
      members_.push_back(p);
      auto undo = state_.apply(p);
      descend(index + 1);
      state_.revert(undo);
      members_.pop_back();
      spent_ -= cost;
    }
    descend(index + 1);
  }

  const ScenarioInstance& inst_;
  CostState state_;
  Rational spent_ = 0;
  std::vector<Placement> members_;
  Incumbent best_;
};

}  // namespace

PlanSolution exact_solve(const ScenarioInstance& inst, Enumeration mode) {
  const std::size_t nq = inst.hospital_count();
  const std::size_t nr = inst.ward_count();
  const std::size_t pairs = nq * nr;
  if (pairs > kMaxExactPairs) {
    throw InstanceTooLarge("exact enumeration: |Q|*|R| = " + std::to_string(pairs) + " exceeds the cap of " +
                           std::to_string(kMaxExactPairs));
  }

  Incumbent best;
  if (mode == Enumeration::pruned) {
    best = PrunedSearch(inst).run();
  } else {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      ExcellenceSet set(nq, nr);
      for (std::size_t i = 0; i < pairs; ++i) {
        if (mask >> i & 1U) set.insert({i / nr, i % nr});
      }
      if (!admissible(set, inst)) continue;
      best.offer(evaluate_z(set, inst).z_value, set.members());
    }
  }

  ExcellenceSet set(nq, nr);
  for (const auto& p : best.members) set.insert(p);
  return evaluate_z(set, inst);
}

std::vector<std::size_t> ward_order(const ScenarioInstance& inst) {
  std::vector<std::size_t> order(inst.ward_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return inst.group_size(a) > inst.group_size(b); });
  return order;
}

std::vector<std::size_t> hospital_order_for_ward(const ScenarioInstance& inst, std::size_t ward) {
  if (ward >= inst.ward_count()) throw std::out_of_range("ward index out of range");
  const std::size_t nd = inst.district_count();
  std::vector<Rational> best(nd);
  for (std::size_t d = 0; d < nd; ++d) best[d] = inst.out_cost(d, ward);

  std::vector<std::size_t> order;
  std::vector<bool> used(inst.hospital_count(), false);
  while (order.size() < inst.hospital_count()) {
    std::optional<std::size_t> pick;
    Rational pick_cost;
    for (std::size_t q = 0; q < inst.hospital_count(); ++q) {
      if (used[q]) continue;
      Rational cost = 0;
      for (std::size_t d = 0; d < nd; ++d) {
        cost += count_of(inst.cell(d, ward)) * std::min(best[d], inst.internal_cost(d, q, ward));
      }
      if (!pick || cost < pick_cost) {
        pick = q;
        pick_cost = std::move(cost);
      }
    }
    used[*pick] = true;
    order.push_back(*pick);
    for (std::size_t d = 0; d < nd; ++d) best[d] = std::min(best[d], inst.internal_cost(d, *pick, ward));
  }
  return order;
}

std::vector<std::size_t> hospital_order(const ScenarioInstance& inst) {
  for (const auto& report : {check_assumption4(inst), check_assumption5(inst)}) {
    if (!report.holds()) {
      throw AssumptionViolation("hospital order needs assumption " + std::to_string(report.assumption) + ": " +
                                report.violations.front().description);
    }
  }
  return hospital_order_for_ward(inst, ward_order(inst).front());
}

TotalOrders total_orders(const ScenarioInstance& inst) { return {ward_order(inst), hospital_order(inst)}; }

StaircaseVerdict check_staircase(const ExcellenceSet& set, const TotalOrders& orders) {
  if (orders.hospital_order.size() != set.hospital_count() || orders.ward_order.size() != set.ward_count()) {
    throw std::invalid_argument("orders do not match the excellence set dimensions");
  }
  std::vector<std::size_t> hospital_rank(set.hospital_count());
  std::vector<std::size_t> ward_rank(set.ward_count());
  for (std::size_t i = 0; i < orders.hospital_order.size(); ++i) hospital_rank[orders.hospital_order[i]] = i;
  for (std::size_t i = 0; i < orders.ward_order.size(); ++i) ward_rank[orders.ward_order[i]] = i;

  for (const auto& member : set.members()) {
    for (std::size_t hi = 0; hi <= hospital_rank[member.hospital]; ++hi) {
      for (std::size_t wi = 0; wi <= ward_rank[member.ward]; ++wi) {
        const Placement needed{orders.hospital_order[hi], orders.ward_order[wi]};
        if (!set.contains(needed)) return {false, std::make_pair(member, needed)};
      }
    }
  }
  return {};
}

StaircaseVerdict check_proposition2(const PlanSolution& sol, const TotalOrders& orders) {
  return check_staircase(sol.excellence, orders);
}

std::vector<std::size_t> staircase_shape(const ExcellenceSet& set, const TotalOrders& orders) {
  std::vector<std::size_t> shape;
  for (auto q : orders.hospital_order) shape.push_back(set.count_at(q));
  return shape;
}

}  // namespace hospfin
