#include "nuq/sim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nuq/errors.hpp"

namespace nuq::sim {

std::int64_t ShotCounts::count(const std::string& outcome) const {
  auto it = counts.find(outcome);
  return it == counts.end() ? 0 : it->second;
}

double ShotCounts::frequency(const std::string& outcome) const {
  return shots == 0 ? 0.0 : static_cast<double>(count(outcome)) / static_cast<double>(shots);
}

double ShotCounts::std_error(const std::string& outcome) const {
  if (shots == 0) return 0.0;
  const double p = frequency(outcome);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
}

std::int64_t ShotCounts::leak() const {
  std::int64_t n = 0;
  for (const auto& [k, v] : counts)
    if (!k.empty() && k[0] == '!') n += v;
  return n;
}

nlohmann::json ShotCounts::to_json() const {
  nlohmann::json j;
  j["shots"] = shots;
  j["seed"] = seed;
  j["leak"] = leak();
  j["counts"] = counts;
  return j;
}

ShotCounts ShotCounts::from_json(const nlohmann::json& j) {
  ShotCounts s;
  s.shots = j.at("shots").get<std::int64_t>();
  s.seed = j.value("seed", std::uint64_t{0});
  s.counts = j.at("counts").get<std::map<std::string, std::int64_t>>();
  std::int64_t total = 0;
  for (const auto& [k, v] : s.counts) total += v;
  if (total != s.shots) throw DomainError("shot counts do not sum to shots");
  return s;
}

std::vector<std::int64_t> sample_indices(std::span<const double> probs, std::int64_t shots, std::mt19937_64& rng) {
  if (shots <= 0) throw DomainError("sample: shots must be > 0");
  std::vector<std::int64_t> out(probs.size(), 0);
  double remaining_p = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (!(remaining_p > 0.0)) throw NumericError("sample: distribution has no mass");
  std::int64_t remaining = shots;
  for (std::size_t i = 0; i < probs.size() && remaining > 0; ++i) {
    const double p = std::max(0.0, probs[i]);
    if (i + 1 == probs.size() || p >= remaining_p) {
      out[i] = remaining;
      break;
    }
    const double q = std::clamp(p / remaining_p, 0.0, 1.0);
    std::binomial_distribution<std::int64_t> bin(remaining, q);
    out[i] = bin(rng);
    remaining -= out[i];
    remaining_p -= p;
  }
  return out;
}

std::string raw_label(std::size_t index, std::span<const int> dims) {
  std::string s;
  for (int d : digits_of(index, dims)) s += static_cast<char>('0' + d);
  return s;
}

std::string outcome_label(std::size_t index, const Encoding& enc) {
  std::vector<int> slots;
  if (enc.slots_of(index, slots)) return flavor_label(slots);
  return "!" + raw_label(index, enc.register_dims());
}

ShotCounts sample(std::span<const double> probs, std::int64_t shots, std::uint64_t seed, const Encoding& enc) {
  if (probs.size() != enc.dim()) throw DomainError("sample: distribution does not match the encoding");
  std::mt19937_64 rng(seed);
  const auto idx = sample_indices(probs, shots, rng);
  ShotCounts out;
  out.shots = shots;
  out.seed = seed;
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (idx[i] > 0) out.counts[outcome_label(i, enc)] += idx[i];
  return out;
}

ShotCounts sample(const StateVector& s, std::int64_t shots, std::uint64_t seed, const Encoding& enc) {
  return sample(probabilities(s), shots, seed, enc);
}

ShotCounts sample(const DensityMatrix& s, std::int64_t shots, std::uint64_t seed, const Encoding& enc) {
  return sample(probabilities(s), shots, seed, enc);
}

}  // namespace nuq::sim
