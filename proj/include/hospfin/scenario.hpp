#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hospfin/rational.hpp"

namespace hospfin {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

template <typename T>
using Tensor3 = std::vector<Matrix<T>>;

/// Raw, unvalidated scenario fields. Districts and hospitals share one index
/// space: district d is served by hospital d.
struct ScenarioData {
  std::vector<std::string> hospitals;
  std::vector<std::string> wards;
  std::vector<Rational> population;          // a_d, one per district
  std::vector<std::int64_t> group_sizes;     // |P_r|, one per ward type
  Matrix<Rational> excel_cost;               // [hospital][ward]
  Tensor3<Rational> internal_cost;           // [district][hospital][ward]
  Matrix<Rational> out_cost;                 // [district][ward]
  Rational budget;

  bool operator==(const ScenarioData&) const = default;
};

/// A block of interchangeable new-market patients sharing district and ward type.
struct DemandCell {
  std::size_t district = 0;
  std::size_t ward = 0;
  std::int64_t count = 0;

  bool operator==(const DemandCell&) const = default;
};

/// Splits each group over districts by the population fractions, rounding with
/// the largest-remainder method (ties to the lower district index) so every
/// ward's counts sum exactly to its group size. Cells are ward-major:
/// cell index = ward * districts + district.
std::vector<DemandCell> build_demand_cells(std::span<const std::int64_t> group_sizes,
                                           std::span<const Rational> population);

/// Validated, immutable baseline scenario.
class ScenarioInstance {
 public:
  /// Throws InvalidInstance naming the offending field.
  explicit ScenarioInstance(ScenarioData data);

  std::size_t hospital_count() const noexcept { return data_.hospitals.size(); }
  std::size_t district_count() const noexcept { return data_.hospitals.size(); }
  std::size_t ward_count() const noexcept { return data_.wards.size(); }

  const std::string& hospital_name(std::size_t q) const { return data_.hospitals[q]; }
  const std::string& ward_name(std::size_t r) const { return data_.wards[r]; }

  const Rational& population(std::size_t d) const { return data_.population[d]; }
  std::int64_t group_size(std::size_t r) const { return data_.group_sizes[r]; }
  const Rational& excel_cost(std::size_t q, std::size_t r) const { return data_.excel_cost[q][r]; }
  const Rational& internal_cost(std::size_t d, std::size_t q, std::size_t r) const {
    return data_.internal_cost[d][q][r];
  }
  const Rational& out_cost(std::size_t d, std::size_t r) const { return data_.out_cost[d][r]; }
  const Rational& budget() const noexcept { return data_.budget; }

  const std::vector<DemandCell>& cells() const noexcept { return cells_; }
  const DemandCell& cell(std::size_t district, std::size_t ward) const {
    return cells_[ward * district_count() + district];
  }

  const ScenarioData& data() const noexcept { return data_; }

  bool operator==(const ScenarioInstance& other) const { return data_ == other.data_; }

 private:
  ScenarioData data_;
  std::vector<DemandCell> cells_;
};

}  // namespace hospfin
