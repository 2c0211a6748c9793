// N-party sharing of continuous secrets: each party's angle is written into a
// real product state, entangled by S, and one qubit is handed to each party.
// No single party learns anything; all parties together undo S and measure.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ghz/density_matrix.hpp"
#include "ghz/statevector.hpp"

namespace ghz {

class SecretQueue {
 public:
  /// Throws std::invalid_argument for fewer than two secrets or non-finite
  /// values. Values are wrapped into (-pi, pi].
  explicit SecretQueue(std::vector<double> thetas);

  int size() const { return static_cast<int>(thetas_.size()); }
  const std::vector<double>& thetas() const { return thetas_; }

 private:
  std::vector<double> thetas_;
};

StateVector encode(const SecretQueue& secrets);

/// The party's one-qubit reduced state.
DensityMatrix local_info(const StateVector& state, int party);

/// Applies S, which is its own inverse.
StateVector decode_state(const StateVector& state);

/// Two-quadrature estimator constant: stderr_bound = kEstimatorConstant / sqrt(shots).
inline constexpr double kEstimatorConstant = 3.0;
inline constexpr std::uint64_t kMinShots = 100;

struct RecoveryEstimate {
  std::vector<double> theta_hats;
  std::uint64_t shots_per_party = 0;
  std::uint64_t seed = 0;
  double stderr_bound = 0.0;
};

/// theta_j = atan2(<sigma_x>_j, <sigma_z>_j), with shots/2 samples measured in
/// z and shots/2 in x (all parties measure the same copy in the same basis).
/// Requires an even shot count of at least kMinShots.
RecoveryEstimate estimate_secrets(const StateVector& decoded, std::uint64_t shots,
                                  std::uint64_t seed);

/// (1/2)|0x'0x'><0x'0x'| + (1/2)|1x'1x'><1x'1x'| for parties (i, j); i is the
/// low bit of the 4x4 index.
DensityMatrix expected_pair_state(double theta_i, double theta_j);

struct CollusionReport {
  std::pair<int, int> parties;
  /// Two (theta_i, theta_j) assignments, canonical in (-pi, pi], sorted.
  std::vector<std::pair<double, double>> candidates;
  DensityMatrix rho_ij;
};

/// Reconstructs the two product eigenvectors of rho_ij and the two consistent
/// angle assignments. Requires N >= 3. Throws std::runtime_error when the
/// spectrum is not (1/2, 1/2, 0, 0) or the 1/2-eigenspace holds no product
/// states.
CollusionReport collude(const StateVector& state, int i, int j);

/// Distance between two angles on the circle, in [0, pi].
double angle_distance(double a, double b);

struct Transcript {
  int n = 0;
  std::vector<double> secrets;
  std::string state_checksum;
  std::vector<double> local_distances;
  double decode_fidelity = 0.0;
  std::vector<double> estimates;
  std::vector<double> abs_errors;
  double stderr_bound = 0.0;
  std::optional<CollusionReport> collusion;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  /// Names of violated checks; empty when the run is sound.
  std::vector<std::string> violations;
};

inline constexpr double kLocalIgnoranceTolerance = 1e-10;
inline constexpr double kRecoveryTolerance = 0.05;

Transcript run_protocol(const SecretQueue& secrets, std::uint64_t shots, std::uint64_t seed);

nlohmann::json to_json(const Transcript& t);

/// FNV-1a over the amplitudes quantized to 1e-9.
std::string state_checksum(const StateVector& state);

}  // namespace ghz
