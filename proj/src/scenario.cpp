#include "hospfin/scenario.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hospfin/error.hpp"

namespace hospfin {

namespace {

void require_non_negative(const Rational& value, const std::string& field) {
  if (sgn(value) < 0) throw InvalidInstance(field, "entries must be non-negative");
}

void validate_population(std::span<const Rational> population) {
  if (population.empty()) throw InvalidInstance("population", "must have at least one district");
  Rational total = 0;
  for (const auto& a : population) {
    if (sgn(a) <= 0) throw InvalidInstance("population", "fractions must be strictly positive");
    total += a;
  }
  if (total != 1) throw InvalidInstance("population", "fractions sum to " + to_string(total) + ", expected 1");
}

void validate_ids(const std::vector<std::string>& ids, const std::string& field) {
  if (ids.empty()) throw InvalidInstance(field, "must not be empty");
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (id.empty()) throw InvalidInstance(field, "identifiers must be non-empty");
    if (!seen.insert(id).second) throw InvalidInstance(field, "duplicate identifier '" + id + "'");
  }
}

}  // namespace

std::vector<DemandCell> build_demand_cells(std::span<const std::int64_t> group_sizes,
                                           std::span<const Rational> population) {
  validate_population(population);
  const std::size_t districts = population.size();

  std::vector<DemandCell> cells;
  cells.reserve(group_sizes.size() * districts);
  for (std::size_t r = 0; r < group_sizes.size(); ++r) {
    if (group_sizes[r] < 0) throw InvalidInstance("group_sizes", "entries must be non-negative");

    std::vector<std::int64_t> counts(districts);
    std::vector<Rational> remainders(districts);
    std::int64_t assigned = 0;
    for (std::size_t d = 0; d < districts; ++d) {
      const Rational quota = Rational(static_cast<long>(group_sizes[r])) * population[d];
      mpz_class floor_value;
      mpz_fdiv_q(floor_value.get_mpz_t(), quota.get_num_mpz_t(), quota.get_den_mpz_t());
      counts[d] = floor_value.get_si();
      remainders[d] = quota - Rational(floor_value);
      assigned += counts[d];
    }

    std::vector<std::size_t> by_remainder(districts);
    std::iota(by_remainder.begin(), by_remainder.end(), 0);
    std::stable_sort(by_remainder.begin(), by_remainder.end(),
                     [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
    for (std::int64_t k = 0; k < group_sizes[r] - assigned; ++k) {
      ++counts[by_remainder[static_cast<std::size_t>(k)]];
    }

    for (std::size_t d = 0; d < districts; ++d) cells.push_back({d, r, counts[d]});
  }
  return cells;
}

ScenarioInstance::ScenarioInstance(ScenarioData data) : data_(std::move(data)) {
  validate_ids(data_.hospitals, "hospitals");
  validate_ids(data_.wards, "wards");
  const std::size_t nq = data_.hospitals.size();
  const std::size_t nr = data_.wards.size();

  if (data_.population.size() != nq) {
    throw InvalidInstance("population", "expected " + std::to_string(nq) + " entries, got " +
                                            std::to_string(data_.population.size()));
  }
  validate_population(data_.population);

  if (data_.group_sizes.size() != nr) {
    throw InvalidInstance("group_sizes", "expected " + std::to_string(nr) + " entries");
  }
  for (auto size : data_.group_sizes) {
    if (size < 0) throw InvalidInstance("group_sizes", "entries must be non-negative");
  }

  if (data_.excel_cost.size() != nq) throw InvalidInstance("excel_cost", "expected one row per hospital");
  for (const auto& row : data_.excel_cost) {
    if (row.size() != nr) throw InvalidInstance("excel_cost", "expected one entry per ward");
    for (const auto& c : row) require_non_negative(c, "excel_cost");
  }

  if (data_.internal_cost.size() != nq) throw InvalidInstance("internal_cost", "expected one block per district");
  for (const auto& block : data_.internal_cost) {
    if (block.size() != nq) throw InvalidInstance("internal_cost", "expected one row per hospital");
    for (const auto& row : block) {
      if (row.size() != nr) throw InvalidInstance("internal_cost", "expected one entry per ward");
      for (const auto& c : row) require_non_negative(c, "internal_cost");
    }
  }

  if (data_.out_cost.size() != nq) throw InvalidInstance("out_cost", "expected one row per district");
  for (const auto& row : data_.out_cost) {
    if (row.size() != nr) throw InvalidInstance("out_cost", "expected one entry per ward");
    for (const auto& c : row) require_non_negative(c, "out_cost");
  }

  require_non_negative(data_.budget, "budget");

  cells_ = build_demand_cells(data_.group_sizes, data_.population);
}

}  // namespace hospfin
