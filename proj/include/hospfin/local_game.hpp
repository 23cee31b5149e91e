#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hospfin/rational.hpp"
#include "hospfin/scenario.hpp"

namespace hospfin {

/// choice[q] is the strategy (ward index) played by hospital q.
struct StrategyProfile {
  std::vector<std::size_t> choice;

  bool is_uniform() const noexcept;
  auto operator<=>(const StrategyProfile&) const = default;
};

inline constexpr std::uint64_t kMaxProfiles = 1'000'000;

/// Complete payoff table of a finite game where every player shares the same
/// strategy set. Profiles are indexed in mixed radix with player 0 most
/// significant, so index order is lexicographic profile order.
class PayoffTensor {
 public:
  /// `payoffs[i]` holds one payoff per player for the profile with index i.
  /// Throws std::invalid_argument on shape mismatch or InstanceTooLarge past
  /// kMaxProfiles.
  PayoffTensor(std::vector<std::string> players, std::vector<std::string> strategies,
               std::vector<std::vector<Rational>> payoffs);

  std::size_t player_count() const noexcept { return players_.size(); }
  std::size_t strategy_count() const noexcept { return strategies_.size(); }
  std::size_t profile_count() const noexcept { return payoffs_.size(); }

  const std::string& player_name(std::size_t q) const { return players_[q]; }
  const std::string& strategy_name(std::size_t s) const { return strategies_[s]; }

  std::size_t index_of(const StrategyProfile& profile) const;
  StrategyProfile profile_at(std::size_t index) const;

  const std::vector<Rational>& payoffs(const StrategyProfile& profile) const {
    return payoffs_[index_of(profile)];
  }
  const std::vector<Rational>& payoffs_at(std::size_t index) const { return payoffs_[index]; }

 private:
  std::vector<std::string> players_;
  std::vector<std::string> strategies_;
  std::vector<std::vector<Rational>> payoffs_;
};

/// Number of profiles |R|^|Q|, or 0 when it exceeds kMaxProfiles.
std::uint64_t profile_count_or_zero(std::size_t players, std::size_t strategies);

/// Payoff per hospital: a hospital choosing r gets |P_r| * a_q divided by the
/// population share of all hospitals choosing r. A sole chooser gets |P_r|.
std::vector<Rational> payoff(const ScenarioInstance& inst, const StrategyProfile& profile);

/// Throws InstanceTooLarge when |R|^|Q| > kMaxProfiles.
PayoffTensor build_payoff_tensor(const ScenarioInstance& inst);

struct EquilibriumReport {
  std::vector<StrategyProfile> equilibria;
  std::vector<StrategyProfile> uniform_equilibria;
  std::vector<StrategyProfile> diversified_equilibria;
};

/// Weak pure Nash equilibria: no player gains strictly by a unilateral switch.
/// Listed in profile index order.
EquilibriumReport enumerate_pure_nash(const PayoffTensor& tensor);

struct Proposition1Verdict {
  bool assumption1_holds = false;
  bool has_uniform_ne = false;
  bool has_diversified_ne = false;

  /// assumption1 => (no uniform NE and some diversified NE).
  bool prediction_holds() const noexcept {
    return !assumption1_holds || (!has_uniform_ne && has_diversified_ne);
  }
};

Proposition1Verdict check_proposition1(const ScenarioInstance& inst);
Proposition1Verdict check_proposition1(const ScenarioInstance& inst, const EquilibriumReport& report);

}  // namespace hospfin
