#include "hospfin/local_game.hpp"

#include <stdexcept>

#include "hospfin/assumptions.hpp"
#include "hospfin/error.hpp"

namespace hospfin {

bool StrategyProfile::is_uniform() const noexcept {
  for (auto s : choice) {
    if (s != choice.front()) return false;
  }
  return true;
}

std::uint64_t profile_count_or_zero(std::size_t players, std::size_t strategies) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < players; ++i) {
    if (strategies != 0 && count > kMaxProfiles / strategies) return 0;
    count *= strategies;
  }
  return count > kMaxProfiles ? 0 : count;
}

PayoffTensor::PayoffTensor(std::vector<std::string> players, std::vector<std::string> strategies,
                           std::vector<std::vector<Rational>> payoffs)
    : players_(std::move(players)), strategies_(std::move(strategies)), payoffs_(std::move(payoffs)) {
  if (players_.empty() || strategies_.empty()) throw std::invalid_argument("game needs players and strategies");
  const auto expected = profile_count_or_zero(players_.size(), strategies_.size());
  if (expected == 0) {
    throw InstanceTooLarge("game has more than " + std::to_string(kMaxProfiles) + " strategy profiles");
  }
  if (payoffs_.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " payoff rows, got " +
                                std::to_string(payoffs_.size()));
  }
  for (const auto& row : payoffs_) {
    if (row.size() != players_.size()) throw std::invalid_argument("payoff row size differs from player count");
  }
}

std::size_t PayoffTensor::index_of(const StrategyProfile& profile) const {
  if (profile.choice.size() != player_count()) throw std::invalid_argument("profile size differs from player count");
  std::size_t index = 0;
  for (auto s : profile.choice) {
    if (s >= strategy_count()) throw std::out_of_range("strategy index out of range");
    index = index * strategy_count() + s;
  }
  return index;
}

StrategyProfile PayoffTensor::profile_at(std::size_t index) const {
  StrategyProfile profile{std::vector<std::size_t>(player_count())};
  for (std::size_t q = player_count(); q-- > 0;) {
    profile.choice[q] = index % strategy_count();
    index /= strategy_count();
  }
  return profile;
}

std::vector<Rational> payoff(const ScenarioInstance& inst, const StrategyProfile& profile) {
  const std::size_t nq = inst.hospital_count();
  if (profile.choice.size() != nq) throw std::invalid_argument("profile size differs from hospital count");

  std::vector<Rational> chooser_share(inst.ward_count(), Rational(0));
  for (std::size_t q = 0; q < nq; ++q) {
    if (profile.choice[q] >= inst.ward_count()) throw std::out_of_range("ward index out of range");
    chooser_share[profile.choice[q]] += inst.population(q);
  }
  std::vector<Rational> out(nq);
  for (std::size_t q = 0; q < nq; ++q) {
    const auto r = profile.choice[q];
    out[q] = Rational(static_cast<long>(inst.group_size(r))) * inst.population(q) / chooser_share[r];
  }
  return out;
}

PayoffTensor build_payoff_tensor(const ScenarioInstance& inst) {
  const auto count = profile_count_or_zero(inst.hospital_count(), inst.ward_count());
  if (count == 0) {
    throw InstanceTooLarge("local game: |R|^|Q| exceeds the enumeration bound of " + std::to_string(kMaxProfiles) +
                           " profiles");
  }
  std::vector<std::string> players(inst.data().hospitals);
  std::vector<std::string> strategies(inst.data().wards);

  std::vector<std::vector<Rational>> payoffs;
  payoffs.reserve(count);
  StrategyProfile profile{std::vector<std::size_t>(inst.hospital_count(), 0)};
  for (std::uint64_t i = 0; i < count; ++i) {
    payoffs.push_back(payoff(inst, profile));
    // Odometer increment, last player fastest.
    for (std::size_t q = profile.choice.size(); q-- > 0;) {
      if (++profile.choice[q] < inst.ward_count()) break;
      profile.choice[q] = 0;
    }
  }
  return PayoffTensor(std::move(players), std::move(strategies), std::move(payoffs));
}

EquilibriumReport enumerate_pure_nash(const PayoffTensor& tensor) {
  EquilibriumReport report;
  const std::size_t ns = tensor.strategy_count();
  const std::size_t np = tensor.player_count();

  // stride[q]: index distance between consecutive strategies of player q
  std::vector<std::size_t> stride(np, 1);
  for (std::size_t q = np - 1; q-- > 0;) stride[q] = stride[q + 1] * ns;

  for (std::size_t index = 0; index < tensor.profile_count(); ++index) {
    const auto& current = tensor.payoffs_at(index);
    bool stable = true;
    for (std::size_t q = 0; q < np && stable; ++q) {
      const std::size_t own = (index / stride[q]) % ns;
      const std::size_t base = index - own * stride[q];
      for (std::size_t s = 0; s < ns; ++s) {
        if (s == own) continue;
        if (tensor.payoffs_at(base + s * stride[q])[q] > current[q]) {
          stable = false;
          break;
        }
      }
    }
    if (!stable) continue;
    auto profile = tensor.profile_at(index);
    (profile.is_uniform() ? report.uniform_equilibria : report.diversified_equilibria).push_back(profile);
    report.equilibria.push_back(std::move(profile));
  }
  return report;
}

Proposition1Verdict check_proposition1(const ScenarioInstance& inst, const EquilibriumReport& report) {
  return {check_assumption1(inst).holds(), !report.uniform_equilibria.empty(),
          !report.diversified_equilibria.empty()};
}

Proposition1Verdict check_proposition1(const ScenarioInstance& inst) {
  return check_proposition1(inst, enumerate_pure_nash(build_payoff_tensor(inst)));
}

}  // namespace hospfin
