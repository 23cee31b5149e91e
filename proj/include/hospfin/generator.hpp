#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "hospfin/scenario.hpp"

namespace hospfin {

enum class GenerationProfile {
  unconstrained,
  assumption1,   // "assumption1-satisfying"
  assumption45,  // "assumption4&5-satisfying"
};

/// Accepts the profile names used on the command line. Throws std::invalid_argument.
GenerationProfile parse_profile(std::string_view name);
std::string profile_name(GenerationProfile profile);

struct Dimensions {
  std::size_t hospitals = 1;
  std::size_t wards = 1;
};

/// Attempts allowed when rejection-sampling group sizes.
inline constexpr int kMaxGenerationAttempts = 10000;

/// Deterministic in (seed, dims, profile) for a given build.
///
/// - unconstrained: random populations, group sizes and rational costs.
/// - assumption1: balanced populations; group sizes rejection-sampled until
///   check_assumption1 holds. Throws GenerationFailure after
///   kMaxGenerationAttempts.
/// - assumption45: hospitals on an integer grid, c_in = base + rate * distance
///   (ward independent), c_out a per-district constant, C = K everywhere.
///   Group sizes are multiples of the population denominator so demand splits
///   exactly proportionally.
ScenarioInstance generate_scenario(std::uint64_t seed, Dimensions dims, GenerationProfile profile);

}  // namespace hospfin
