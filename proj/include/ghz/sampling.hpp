// Seeded computational-basis sampling.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ghz/statevector.hpp"

namespace ghz {

/// Derives an independent 64-bit seed for a named sub-stream of a master seed
/// (splitmix64 over the seed and an FNV-1a hash of the name).
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream);

/// Uniform double in [0, 1) built from the top 53 bits of one mt19937_64 draw.
/// Platform-independent, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng);

struct ShotRecord {
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  int n_qubits = 0;
  /// Keyed by bitstring with qubit 0 as the rightmost character.
  std::map<std::string, std::uint64_t> counts;

  /// Fraction of shots in which `qubit` read 1.
  double fraction_one(int qubit) const;
  /// <sigma_z> of one qubit estimated from the counts.
  double mean_z(int qubit) const;

  friend bool operator==(const ShotRecord&, const ShotRecord&) = default;
};

/// {"seed": int, "shots": int, "counts": {"bitstring": int}}
nlohmann::json to_json(const ShotRecord& record);
ShotRecord shot_record_from_json(const nlohmann::json& j);

std::string bitstring(std::uint64_t index, int n_qubits);

/// Rotates qubit k by per_qubit_basis[k] (an empty list means no rotation),
/// then samples `shots` bitstrings from |amps|^2. Deterministic given the seed.
ShotRecord sample_measurement(const StateVector& state,
                              const std::vector<Mat2>& per_qubit_basis,
                              std::uint64_t shots, std::uint64_t seed);

}  // namespace ghz
