// The collective pair gates S_ij, the full entangling unitary S = prod_{i<j} S_ij,
// its J_y^2 exponential form, the rotated Pauli frame, and the GHZ basis.
#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ghz/bloch.hpp"
#include "ghz/statevector.hpp"
#include "ghz/types.hpp"

namespace ghz {

/// S_ij = (I + sigma_y^(i) + sigma_y^(j) - sigma_y^(i) sigma_y^(j)) / 2.
/// Hermitian and unitary; eigenvalue -1 only on |y-> (x) |y->.
struct PairGate {
  int i = 0;
  int j = 1;
  Mat4 matrix;
};

PairGate s_pair(int i, int j);

/// Applies every S_ij, i < j, in lexicographic order.
StateVector apply_S(const StateVector& state);

/// Applies the S_ij in the given pair order. Every unordered pair must appear
/// exactly once.
StateVector apply_S(const StateVector& state, std::span<const std::pair<int, int>> order);

/// Same unitary as apply_S, computed in the collective sigma_y eigenbasis as
///   e^{-i pi N(N-1)/8} exp(i (N-1) pi/4 sum_j sigma_y^(j))
///                      exp(-i pi/4 sum_{j<k} sigma_y^(j) sigma_y^(k)).
/// Both exponentials are diagonal once every qubit is rotated into the y basis,
/// with phases depending only on the number of y- outcomes.
StateVector apply_S_exponential(const StateVector& state);

/// sigma_z' = sigma_z cos(theta) + sigma_x sin(theta),
/// sigma_x' = -sigma_z sin(theta) + sigma_x cos(theta).
struct RotatedPaulis {
  Mat2 z_prime;
  Mat2 x_prime;
};

RotatedPaulis rotated_paulis(double theta);

/// Eigenstates of sigma_x'(theta): |0>_x' (eigenvalue +1) and
/// |1>_x' = sigma_y |0>_x' (eigenvalue -1).
std::pair<Spinor, Spinor> xprime_basis(double theta);

/// One member of the GHZ basis: a sign per qubit and the projection angles.
struct GhzBasisElement {
  std::string signs;          // '+' or '-' per qubit; character k is qubit k
  std::vector<double> etas;   // radians, canonical in (-pi, pi]

  GhzBasisElement(std::string signs, std::vector<double> etas);
  static GhzBasisElement all_plus(std::vector<double> etas);
};

/// {"signs": "+-+...", "etas": [radians]}
nlohmann::json to_json(const GhzBasisElement& e);
GhzBasisElement ghz_basis_element_from_json(const nlohmann::json& j);

/// S applied to prod_k |phi^{s_k}(eta_k)>. The 2^N states for fixed etas form
/// an orthonormal basis.
StateVector ghz_state(const GhzBasisElement& element);
StateVector ghz_state(std::span<const double> etas, const std::string& signs);

/// (1/sqrt2)(prod_k |0>_x'(theta_k) + i prod_k |1>_x'(theta_k)). Equal to
/// apply_S(product_state(real thetas)) up to global phase.
StateVector maximally_entangled_state(std::span<const double> thetas);

/// Largest elementwise deviation over the N fixed-point equations
///   sigma_z'^(i)(eta_i) prod_{j != i} sigma_y^(j) |psi> = |psi>
/// and all pairwise consequences sigma_x'^(i) sigma_x'^(i') |psi> = |psi>.
double stabilizer_deviation(const StateVector& state, std::span<const double> etas);

inline constexpr double kStabilizerTolerance = 1e-8;

bool verify_stabilizer(const StateVector& state, std::span<const double> etas);

/// U_N = (I + i prod_k sigma_y^(k)) / sqrt2. Cross-check oracle only.
StateVector u_n_oracle(const StateVector& state);

}  // namespace ghz
