#include "ghz/secret_sharing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ghz/collective_gates.hpp"
#include "ghz/sampling.hpp"

namespace ghz {

SecretQueue::SecretQueue(std::vector<double> thetas) : thetas_(std::move(thetas)) {
  if (thetas_.size() < 2) throw std::invalid_argument("a secret queue needs at least two parties");
  for (double& t : thetas_) {
    if (!std::isfinite(t)) throw std::invalid_argument("secrets must be finite");
    t = wrap_angle(t);
  }
}

StateVector encode(const SecretQueue& secrets) { return apply_S(product_state(real_angles(secrets.thetas()))); }

DensityMatrix local_info(const StateVector& state, int party) { return partial_trace(state, {party}); }

StateVector decode_state(const StateVector& state) { return apply_S(state); }

RecoveryEstimate estimate_secrets(const StateVector& decoded, std::uint64_t shots, std::uint64_t seed) {
  if (shots < kMinShots) throw std::invalid_argument("at least " + std::to_string(kMinShots) + " shots required");
  if (shots % 2 != 0) throw std::invalid_argument("shot count must be even (half z, half x)");
  const int n = decoded.n_qubits();
  const std::uint64_t half = shots / 2;
  const ShotRecord z = sample_measurement(decoded, {}, half, derive_seed(seed, "z"));
  const ShotRecord x =
      sample_measurement(decoded, std::vector<Mat2>(static_cast<std::size_t>(n), hadamard()), half,
                         derive_seed(seed, "x"));
  RecoveryEstimate est;
  est.shots_per_party = shots;
  est.seed = seed;
  est.stderr_bound = kEstimatorConstant / std::sqrt(static_cast<double>(shots));
  for (int k = 0; k < n; ++k) est.theta_hats.push_back(wrap_angle(std::atan2(x.mean_z(k), z.mean_z(k))));
  return est;
}

DensityMatrix expected_pair_state(double theta_i, double theta_j) {
  const auto [zi, oi] = xprime_basis(theta_i);
  const auto [zj, oj] = xprime_basis(theta_j);
  auto pair = [](const Spinor& low, const Spinor& high) {
    return std::vector<cplx>{low[0] * high[0], low[1] * high[0], low[0] * high[1], low[1] * high[1]};
  };
  const std::vector<cplx> zz = pair(zi, zj);
  const std::vector<cplx> oo = pair(oi, oj);
  return DensityMatrix::pure(zz) * 0.5 + DensityMatrix::pure(oo) * 0.5;
}

namespace {

using Block = std::array<cplx, 4>;  // M(b_j, b_i) = v[b_i + 2 b_j], row-major

cplx det(const Block& m) { return m[0] * m[3] - m[1] * m[2]; }

// Normalized vector a*v1 + b*v2.
std::vector<cplx> combine(cplx a, const std::vector<cplx>& v1, cplx b, const std::vector<cplx>& v2) {
  std::vector<cplx> w(4);
  double nrm = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    w[k] = a * v1[k] + b * v2[k];
    nrm += std::norm(w[k]);
  }
  nrm = std::sqrt(nrm);
  for (auto& v : w) v /= nrm;
  return w;
}

// The two product states inside span{v1, v2}: roots of det(a M1 + b M2) = 0.
std::pair<std::vector<cplx>, std::vector<cplx>> product_vectors(const std::vector<cplx>& v1,
                                                                 const std::vector<cplx>& v2) {
  const Block m1{v1[0], v1[1], v1[2], v1[3]};
  const Block m2{v2[0], v2[1], v2[2], v2[3]};
  const cplx a = det(m1);
  const cplx c = det(m2);
  const cplx b = m1[0] * m2[3] + m2[0] * m1[3] - m1[1] * m2[2] - m2[1] * m1[2];
  constexpr double tiny = 1e-12;
  if (std::max(std::abs(a), std::abs(c)) < tiny) return {v1, v2};
  const cplx disc = std::sqrt(b * b - 4.0 * a * c);
  if (std::abs(a) >= std::abs(c)) {
    // a x^2 + b x + c = 0 with x = alpha / beta
    const cplx x1 = (-b + disc) / (2.0 * a);
    const cplx x2 = (-b - disc) / (2.0 * a);
    return {combine(x1, v1, 1.0, v2), combine(x2, v1, 1.0, v2)};
  }
  // c y^2 + b y + a = 0 with y = beta / alpha
  const cplx y1 = (-b + disc) / (2.0 * c);
  const cplx y2 = (-b - disc) / (2.0 * c);
  return {combine(1.0, v1, y1, v2), combine(1.0, v1, y2, v2)};
}

// Real-plane angle alpha of a spinor proportional to (cos(alpha/2), sin(alpha/2)).
double real_plane_angle(Spinor s) {
  const std::size_t big = std::abs(s[0]) >= std::abs(s[1]) ? 0 : 1;
  const cplx phase = std::abs(s[big]) > 0.0 ? std::conj(s[big]) / std::abs(s[big]) : cplx{1.0};
  s[0] *= phase;
  s[1] *= phase;
  if (std::abs(s[0].imag()) > 1e-6 || std::abs(s[1].imag()) > 1e-6)
    throw std::runtime_error("collusion: factor is not a real-plane state");
  return 2.0 * std::atan2(s[1].real(), s[0].real());
}

// Splits a Schmidt-rank-1 vector into (qubit i, qubit j) factors.
std::pair<Spinor, Spinor> factor(const std::vector<cplx>& w) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < 4; ++k)
    if (std::abs(w[k]) > std::abs(w[best])) best = k;
  const std::size_t bi = best & 1u;
  const std::size_t bj = best >> 1;
  const Spinor low{w[0 + 2 * bj], w[1 + 2 * bj]};
  const Spinor high{w[bi + 0], w[bi + 2]};
  return {low, high};
}

}  // namespace

CollusionReport collude(const StateVector& state, int i, int j) {
  if (i == j) throw std::invalid_argument("collusion needs two distinct parties");
  if (state.n_qubits() < 3)
    throw std::invalid_argument("collusion needs at least three parties (two colluders and one outsider)");
  DensityMatrix rho = partial_trace(state, {i, j});
  const auto eig = rho.eigen_decomposition();
  constexpr double tol = 1e-8;
  if (std::abs(eig.values[0]) > tol || std::abs(eig.values[1]) > tol ||
      std::abs(eig.values[2] - 0.5) > tol || std::abs(eig.values[3] - 0.5) > tol)
    throw std::runtime_error("collusion: reduced state spectrum is not (1/2, 1/2, 0, 0); input is not an encoded state");

  const auto [w1, w2] = product_vectors(eig.vectors[2], eig.vectors[3]);
  std::vector<std::pair<double, double>> candidates;
  for (const auto* w : {&w1, &w2}) {
    const auto [si, sj] = factor(*w);
    // Labeling this eigenvector |0>_x'|0>_x' gives theta = alpha - pi/2.
    candidates.emplace_back(wrap_angle(real_plane_angle(si) - kPi / 2.0),
                            wrap_angle(real_plane_angle(sj) - kPi / 2.0));
  }
  std::sort(candidates.begin(), candidates.end());
  return CollusionReport{{i, j}, std::move(candidates), std::move(rho)};
}

double angle_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

std::string state_checksum(const StateVector& state) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](long long v) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  };
  for (const cplx& a : state.amplitudes()) {
    mix(std::llround(a.real() * 1e9));
    mix(std::llround(a.imag() * 1e9));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Transcript run_protocol(const SecretQueue& secrets, std::uint64_t shots, std::uint64_t seed) {
  Transcript t;
  t.n = secrets.size();
  t.secrets = secrets.thetas();
  t.seed = seed;
  t.shots = shots;

  const StateVector encoded = encode(secrets);
  t.state_checksum = state_checksum(encoded);
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  for (int k = 0; k < t.n; ++k) t.local_distances.push_back(local_info(encoded, k).distance(mixed));
  if (*std::max_element(t.local_distances.begin(), t.local_distances.end()) >= kLocalIgnoranceTolerance)
    t.violations.push_back("local_ignorance");

  const StateVector decoded = decode_state(encoded);
  t.decode_fidelity = fidelity(decoded, product_state(real_angles(t.secrets)));
  if (t.decode_fidelity < 1.0 - 1e-10) t.violations.push_back("decode_fidelity");

  const RecoveryEstimate est = estimate_secrets(decoded, shots, derive_seed(seed, "shots"));
  t.estimates = est.theta_hats;
  t.stderr_bound = est.stderr_bound;
  for (int k = 0; k < t.n; ++k)
    t.abs_errors.push_back(angle_distance(t.estimates[static_cast<std::size_t>(k)], t.secrets[static_cast<std::size_t>(k)]));
  if (*std::max_element(t.abs_errors.begin(), t.abs_errors.end()) > kRecoveryTolerance)
    t.violations.push_back("recovery");

  if (t.n >= 3) {
    CollusionReport report = collude(encoded, 0, 1);
    if (report.rho_ij.distance(expected_pair_state(t.secrets[0], t.secrets[1])) >= 1e-10)
      t.violations.push_back("collusion_closed_form");
    const bool has_truth = std::any_of(report.candidates.begin(), report.candidates.end(), [&](const auto& c) {
      return angle_distance(c.first, t.secrets[0]) < 1e-6 && angle_distance(c.second, t.secrets[1]) < 1e-6;
    });
    if (!has_truth) t.violations.push_back("collusion_candidates");
    t.collusion = std::move(report);
  }
  return t;
}

nlohmann::json to_json(const Transcript& t) {
  nlohmann::json collusion = nullptr;
  if (t.collusion) {
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& [a, b] : t.collusion->candidates) cands.push_back({a, b});
    collusion = {{"parties", {t.collusion->parties.first, t.collusion->parties.second}}, {"candidates", cands}};
  }
  return {{"n", t.n},
          {"secrets", t.secrets},
          {"state_checksum", t.state_checksum},
          {"local_distances", t.local_distances},
          {"decode_fidelity", t.decode_fidelity},
          {"estimates", t.estimates},
          {"abs_errors", t.abs_errors},
          {"stderr_bound", t.stderr_bound},
          {"collusion", collusion},
          {"seed", t.seed},
          {"shots", t.shots},
          {"violations", t.violations}};
}

}  // namespace ghz
