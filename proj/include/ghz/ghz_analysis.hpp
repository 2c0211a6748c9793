// Projection of arbitrary separable states onto the GHZ basis generated by S:
// per-qubit optimal in-plane angles, basis coefficients, the largest GHZ
// components, and the Bloch-sphere sweep of the maximal GHZ probability.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ghz/bloch.hpp"
#include "ghz/statevector.hpp"

namespace ghz {

struct ProjectionResult {
  double eta = 0.0;
  double p_max = 1.0;
  /// Bloch vector on the +-y axis: every eta gives p = 1/2.
  bool degenerate = false;
};

/// |<phi+(eta)|psi(theta, phi)>|^2 = (1 + cos(theta) cos(eta) + sin(theta) cos(phi) sin(eta)) / 2.
double projection_probability(double theta, double phi, double eta);

/// (1 + sqrt(1 - sin^2(theta) sin^2(phi))) / 2.
double max_projection_probability(double theta, double phi);

/// eta = atan2(sin(theta) cos(phi), cos(theta)): the direction of the Bloch
/// vector's projection onto the z-x plane.
ProjectionResult optimal_projection(double theta, double phi);

struct GhzExpansion {
  int n_qubits = 0;
  std::vector<double> etas;
  /// Indexed by sign mask: bit k set means qubit k takes '-'.
  std::vector<cplx> coefficients;

  cplx coefficient(const std::string& signs) const;
  double total_weight() const;
};

inline constexpr int kMaxExpansionQubits = 12;

std::string sign_string(std::uint64_t mask, int n_qubits);
std::uint64_t sign_mask(const std::string& signs);

/// c_s = prod_k <phi^{s_k}(eta_k)|psi_k>. Requires N <= kMaxExpansionQubits.
GhzExpansion ghz_expand(const QubitAngles& angles, const std::vector<double>& etas);

/// sum_s c_s ghz_state(etas, s).
StateVector reconstruct(const GhzExpansion& expansion);

/// The k largest |c_s|^2 in non-increasing order, by best-first enumeration
/// over per-qubit factor magnitudes. Never materializes all 2^N terms.
std::vector<std::pair<std::string, double>> top_k_coefficients(
    const QubitAngles& angles, const std::vector<double>& etas, std::uint64_t k);

/// Optimal eta per qubit.
std::vector<double> optimal_etas(const QubitAngles& angles);

struct NptWitness {
  double product = 1.0;
  bool conclusive = true;
};

/// Product of per-qubit maximal projection probabilities; conclusive when it
/// exceeds 1/2.
NptWitness npt_witness(const QubitAngles& angles);

/// ((1 + sqrt(1 - sin^2(theta) sin^2(phi))) / 2)^N.
double sweep_probability(int n_qubits, double theta, double phi);

struct SweepPoint {
  double theta = 0.0;
  double phi = 0.0;
  double p = 0.0;
};

struct BlochSweep {
  int n_qubits = 0;
  int grid_theta = 0;
  int grid_phi = 0;
  /// Theta-major: points[i * grid_phi + j].
  std::vector<SweepPoint> points;

  double theta_at(int i) const;
  double phi_at(int j) const;
};

/// Theta on grid_theta points spanning [0, pi] inclusive, phi on grid_phi
/// points 2*pi*j/grid_phi. Grid points are evaluated in parallel.
BlochSweep bloch_sweep(int n_qubits, int grid_theta, int grid_phi);

/// Header "theta,phi,P", 12 significant digits.
std::string to_csv(const BlochSweep& sweep);
/// {"n": int, "grid": [[theta, phi, P], ...]}
nlohmann::json to_json(const BlochSweep& sweep);

}  // namespace ghz
