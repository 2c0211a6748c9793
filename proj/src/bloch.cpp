#include "ghz/bloch.hpp"

#include <cmath>
#include <stdexcept>

namespace ghz {

double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double wrap_angle_positive(double a) {
  double r = std::fmod(a, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  if (r >= 2.0 * kPi) r = 0.0;
  return r;
}

Bloch canonicalize(Bloch b) {
  double theta = wrap_angle(b.theta);
  double phi = b.phi;
  if (theta < 0.0) {
    theta = -theta;
    phi += kPi;
  }
  return {theta, wrap_angle_positive(phi)};
}

Bloch canonicalize_real(Bloch b) {
  const Bloch c = canonicalize(b);
  // Only phi in {0, pi} describes a real-plane state; a pi azimuth flips the
  // sign of the polar angle.
  const bool flipped = std::abs(c.phi - kPi) < std::abs(c.phi) &&
                       std::abs(c.phi - kPi) < std::abs(c.phi - 2.0 * kPi);
  return {wrap_angle(flipped ? -c.theta : c.theta), 0.0};
}

QubitAngles real_angles(const std::vector<double>& thetas) {
  QubitAngles out;
  out.reserve(thetas.size());
  for (double t : thetas) out.push_back({t, 0.0});
  return out;
}

Spinor spinor(Bloch b) {
  return {std::cos(b.theta / 2.0), std::sin(b.theta / 2.0) * std::polar(1.0, b.phi)};
}

std::pair<Spinor, Spinor> orthogonal_pair(double eta) {
  const double c = std::cos(eta / 2.0);
  const double s = std::sin(eta / 2.0);
  return {Spinor{c, s}, Spinor{-s, c}};
}

void require_finite(const QubitAngles& angles) {
  for (const auto& b : angles)
    if (!std::isfinite(b.theta) || !std::isfinite(b.phi))
      throw std::invalid_argument("angles must be finite");
}

}  // namespace ghz
