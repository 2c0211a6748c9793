// Bloch-sphere parameterization of single-qubit pure states.
#pragma once

#include <utility>
#include <vector>

#include "ghz/types.hpp"

namespace ghz {

/// One qubit at polar angle theta and azimuth phi (radians):
/// cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>.
struct Bloch {
  double theta = 0.0;
  double phi = 0.0;

  friend bool operator==(const Bloch&, const Bloch&) = default;
};

using QubitAngles = std::vector<Bloch>;

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// Wraps an angle into [0, 2pi).
double wrap_angle_positive(double a);

/// Canonical form theta in [0, pi], phi in [0, 2pi). Describes the same state up
/// to global phase. Idempotent.
Bloch canonicalize(Bloch b);

/// Canonical form of a real-plane state (phi = 0 or pi folded into a signed
/// theta in (-pi, pi], phi set to 0). Idempotent.
Bloch canonicalize_real(Bloch b);

/// Real-plane angles (phi = 0) for each theta.
QubitAngles real_angles(const std::vector<double>& thetas);

Spinor spinor(Bloch b);

/// The in-plane orthonormal pair at angle eta:
/// |phi+> = cos(eta/2)|0> + sin(eta/2)|1>, |phi-> = -sin(eta/2)|0> + cos(eta/2)|1>.
std::pair<Spinor, Spinor> orthogonal_pair(double eta);

/// Throws std::invalid_argument if any angle is NaN or infinite.
void require_finite(const QubitAngles& angles);

}  // namespace ghz
