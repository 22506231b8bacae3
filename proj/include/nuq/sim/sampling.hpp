#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "nuq/model.hpp"
#include "nuq/sim/state.hpp"

namespace nuq::sim {

struct ShotCounts {
  std::map<std::string, std::int64_t> counts;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;

  std::int64_t count(const std::string& outcome) const;
  double frequency(const std::string& outcome) const;
  /// sqrt(p (1 - p) / shots) for the observed frequency.
  double std_error(const std::string& outcome) const;
  /// Shots that landed on a state with |00> on some pair.
  std::int64_t leak() const;

  nlohmann::json to_json() const;
  static ShotCounts from_json(const nlohmann::json& j);
};

/// Multinomial draw by sequential binomials; counts[i] for outcome i.
std::vector<std::int64_t> sample_indices(std::span<const double> probs, std::int64_t shots, std::mt19937_64& rng);

/// Flavor label such as "e,mu" for physical states; unphysical register
/// states get "!" followed by the raw digits.
std::string outcome_label(std::size_t index, const Encoding& enc);
/// Raw register digits, wire 0 first.
std::string raw_label(std::size_t index, std::span<const int> dims);

ShotCounts sample(std::span<const double> probs, std::int64_t shots, std::uint64_t seed, const Encoding& enc);
ShotCounts sample(const StateVector& s, std::int64_t shots, std::uint64_t seed, const Encoding& enc);
ShotCounts sample(const DensityMatrix& s, std::int64_t shots, std::uint64_t seed, const Encoding& enc);

}  // namespace nuq::sim
