#include "hospfin/generator.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "hospfin/assumptions.hpp"
#include "hospfin/error.hpp"

namespace hospfin {

namespace {

using Rng = std::mt19937_64;

constexpr std::array<long, 5> kDenominators = {1, 2, 3, 5, 7};

long draw(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational draw_rational(Rng& rng, long lo, long hi) {
  const long den = kDenominators[static_cast<std::size_t>(draw(rng, 0, kDenominators.size() - 1))];
  Rational value(draw(rng, lo * den, hi * den), den);
  value.canonicalize();
  return value;
}

std::vector<std::string> labels(char prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, prefix) + std::to_string(i + 1));
  return out;
}

std::vector<long> draw_weights(Rng& rng, std::size_t n, long lo, long hi) {
  std::vector<long> w(n);
  for (auto& x : w) x = draw(rng, lo, hi);
  return w;
}

std::vector<Rational> normalize(const std::vector<long>& weights) {
  long total = 0;
  for (long w : weights) total += w;
  std::vector<Rational> out;
  for (long w : weights) {
    Rational a(w, total);
    a.canonicalize();
    out.push_back(a);
  }
  return out;
}

void fill_random_costs(Rng& rng, ScenarioData& data) {
  const std::size_t nq = data.hospitals.size();
  const std::size_t nr = data.wards.size();
  data.excel_cost.assign(nq, std::vector<Rational>(nr));
  for (auto& row : data.excel_cost) {
    for (auto& c : row) c = draw_rational(rng, 50, 1500);
  }
  data.internal_cost.assign(nq, Matrix<Rational>(nq, std::vector<Rational>(nr)));
  for (auto& block : data.internal_cost) {
    for (auto& row : block) {
      for (auto& c : row) c = draw_rational(rng, 1, 40);
    }
  }
  data.out_cost.assign(nq, std::vector<Rational>(nr));
  for (auto& row : data.out_cost) {
    for (auto& c : row) c = draw_rational(rng, 10, 60);
  }

  Rational min_cost = data.excel_cost[0][0];
  Rational total = 0;
  for (const auto& row : data.excel_cost) {
    for (const auto& c : row) {
      min_cost = std::min(min_cost, c);
      total += c;
    }
  }
  // Budget anywhere between the cheapest ward and 60% of everything.
  const long percent = draw(rng, 0, 100);
  const Rational span = std::max(Rational(0), Rational(total * Rational(3, 5) - min_cost));
  Rational fraction(percent, 100);
  fraction.canonicalize();
  data.budget = min_cost + span * fraction;
}

ScenarioData base_data(Dimensions dims) {
  ScenarioData data;
  data.hospitals = labels('q', dims.hospitals);
  data.wards = labels('r', dims.wards);
  return data;
}

ScenarioInstance generate_unconstrained(Rng& rng, Dimensions dims) {
  ScenarioData data = base_data(dims);
  data.population = normalize(draw_weights(rng, dims.hospitals, 1, 20));
  for (std::size_t r = 0; r < dims.wards; ++r) data.group_sizes.push_back(draw(rng, 0, 200));
  fill_random_costs(rng, data);
  return ScenarioInstance(std::move(data));
}

ScenarioInstance generate_assumption1(Rng& rng, Dimensions dims) {
  ScenarioData data = base_data(dims);
  // Balanced districts: weights within a factor of two.
  data.population = normalize(draw_weights(rng, dims.hospitals, 5, 10));
  data.group_sizes.assign(dims.wards, 0);
  fill_random_costs(rng, data);

  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    for (auto& size : data.group_sizes) size = draw(rng, 1, 1000);
    ScenarioInstance candidate(data);
    if (check_assumption1(candidate).holds()) return candidate;
  }
  throw GenerationFailure("profile assumption1-satisfying: no instance after " +
                          std::to_string(kMaxGenerationAttempts) + " attempts");
}

ScenarioInstance generate_assumption45(Rng& rng, Dimensions dims) {
  ScenarioData data = base_data(dims);
  const std::size_t nq = dims.hospitals;
  const std::size_t nr = dims.wards;

  const auto weights = draw_weights(rng, nq, 3, 12);
  long total_weight = 0;
  for (long w : weights) total_weight += w;
  data.population = normalize(weights);

  std::vector<std::array<long, 2>> site(nq);
  for (auto& s : site) s = {draw(rng, 0, 20), draw(rng, 0, 20)};
  const Rational base = draw_rational(rng, 1, 5);
  const Rational rate = draw_rational(rng, 1, 4);

  data.internal_cost.assign(nq, Matrix<Rational>(nq, std::vector<Rational>(nr)));
  for (std::size_t d = 0; d < nq; ++d) {
    for (std::size_t q = 0; q < nq; ++q) {
      const long distance = std::abs(site[d][0] - site[q][0]) + std::abs(site[d][1] - site[q][1]);
      const Rational c = base + rate * Rational(distance);
      for (std::size_t r = 0; r < nr; ++r) data.internal_cost[d][q][r] = c;
    }
  }
  data.out_cost.assign(nq, std::vector<Rational>(nr));
  for (std::size_t d = 0; d < nq; ++d) {
    const Rational c = base + rate * Rational(draw(rng, 8, 40));
    for (std::size_t r = 0; r < nr; ++r) data.out_cost[d][r] = c;
  }

  // Group sizes as multiples of the weight total keep every district share integral.
  std::vector<long> multiples(nr);
  for (auto& m : multiples) m = draw(rng, 1, 60);
  for (long m : multiples) data.group_sizes.push_back(m * total_weight);

  // Scale K against the best single-hospital saving of the largest group.
  Rational best_saving = 0;
  const long largest = *std::max_element(multiples.begin(), multiples.end());
  for (std::size_t q = 0; q < nq; ++q) {
    Rational saving = 0;
    for (std::size_t d = 0; d < nq; ++d) {
      const Rational gap = data.out_cost[d][0] - data.internal_cost[d][q][0];
      if (sgn(gap) > 0) saving += Rational(weights[d] * largest) * gap;
    }
    best_saving = std::max(best_saving, saving);
  }
  Rational k = best_saving * Rational(draw(rng, 3, 90), 100) + Rational(draw(rng, 1, 6), 7);
  k.canonicalize();
  data.excel_cost.assign(nq, std::vector<Rational>(nr, k));

  const long affordable = draw(rng, 1, static_cast<long>(nq * nr));
  data.budget = k * Rational(affordable);
  return ScenarioInstance(std::move(data));
}

}  // namespace

GenerationProfile parse_profile(std::string_view name) {
  if (name == "unconstrained") return GenerationProfile::unconstrained;
  if (name == "assumption1-satisfying" || name == "assumption1") return GenerationProfile::assumption1;
  if (name == "assumption4&5-satisfying" || name == "assumption45") return GenerationProfile::assumption45;
  throw std::invalid_argument("unknown profile '" + std::string(name) +
                              "' (expected unconstrained, assumption1-satisfying, assumption4&5-satisfying)");
}

std::string profile_name(GenerationProfile profile) {
  switch (profile) {
    case GenerationProfile::unconstrained: return "unconstrained";
    case GenerationProfile::assumption1: return "assumption1-satisfying";
    case GenerationProfile::assumption45: return "assumption4&5-satisfying";
  }
  return "unconstrained";
}

ScenarioInstance generate_scenario(std::uint64_t seed, Dimensions dims, GenerationProfile profile) {
  if (dims.hospitals < 1 || dims.wards < 1) {
    throw InvalidInstance("dims", "need at least one hospital and one ward");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(dims.hospitals), static_cast<std::uint32_t>(dims.wards),
                    static_cast<std::uint32_t>(profile)};
  Rng rng(seq);
  switch (profile) {
    case GenerationProfile::unconstrained: return generate_unconstrained(rng, dims);
    case GenerationProfile::assumption1: return generate_assumption1(rng, dims);
    case GenerationProfile::assumption45: return generate_assumption45(rng, dims);
  }
  throw std::invalid_argument("unknown profile");
}

}  // namespace hospfin
