#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hospfin/rational.hpp"
#include "hospfin/scenario.hpp"

namespace hospfin {

/// One failing inequality or equality. `indices` are zero-based and their
/// meaning is fixed per assumption (documented on each checker).
struct Violation {
  std::string description;
  std::vector<std::size_t> indices;
  Rational lhs;
  Rational rhs;
};

struct AssumptionReport {
  int assumption = 0;
  std::string title;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool holds() const noexcept { return violations.empty(); }
};

/// For every ward k: |P_k| > min{|P_i| * a_j : i != k}. One violation per
/// failing k, indices {k, i, j} of the minimizer, lhs = |P_k|, rhs = the min.
/// A single ward type holds vacuously.
AssumptionReport check_assumption1(const ScenarioInstance& inst);

/// (a) B >= min C, indices {q, r} of the minimum, lhs = B, rhs = min C.
/// (b) sum over cells and hospitals of count * (c_out - c_in) > sum of C,
///     no indices, lhs = the patient sum, rhs = the sum of C.
AssumptionReport check_assumption2(const ScenarioInstance& inst);

/// Acceptance of the greedy solution. A modeling stance, not a data property,
/// so it always holds; the report carries a note saying so.
AssumptionReport check_assumption3(const ScenarioInstance& inst);

/// c_in independent of the ward type. First counterexample only,
/// indices {d, q, r0, r}, lhs = c_in[d][q][r0], rhs = c_in[d][q][r].
AssumptionReport check_assumption4(const ScenarioInstance& inst);

/// Uniform excel cost. First counterexample only, indices {q0, r0, q, r},
/// lhs = C[q0][r0], rhs = C[q][r].
AssumptionReport check_assumption5(const ScenarioInstance& inst);

/// All five, in order.
std::vector<AssumptionReport> check_all_assumptions(const ScenarioInstance& inst);

}  // namespace hospfin
