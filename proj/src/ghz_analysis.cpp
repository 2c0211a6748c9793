#include "ghz/ghz_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "ghz/collective_gates.hpp"

namespace ghz {

double projection_probability(double theta, double phi, double eta) {
  return (1.0 + std::cos(theta) * std::cos(eta) + std::sin(theta) * std::cos(phi) * std::sin(eta)) / 2.0;
}

double max_projection_probability(double theta, double phi) {
  const double s = std::sin(theta) * std::sin(phi);
  return (1.0 + std::sqrt(std::max(0.0, 1.0 - s * s))) / 2.0;
}

ProjectionResult optimal_projection(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi))
    throw std::invalid_argument("optimal_projection: angles must be finite");
  const double x = std::sin(theta) * std::cos(phi);
  const double z = std::cos(theta);
  if (std::hypot(x, z) < 1e-12) return {0.0, 0.5, true};
  return {wrap_angle(std::atan2(x, z)), max_projection_probability(theta, phi), false};
}

std::string sign_string(std::uint64_t mask, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '+');
  for (int k = 0; k < n_qubits; ++k)
    if ((mask >> k) & 1u) s[static_cast<std::size_t>(k)] = '-';
  return s;
}

std::uint64_t sign_mask(const std::string& signs) {
  if (signs.size() > 64) throw std::invalid_argument("sign string too long for a mask");
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] == '-')
      m |= std::uint64_t{1} << k;
    else if (signs[k] != '+')
      throw std::invalid_argument("sign string may only contain '+' and '-'");
  }
  return m;
}

cplx GhzExpansion::coefficient(const std::string& signs) const {
  if (static_cast<int>(signs.size()) != n_qubits) throw std::invalid_argument("sign string length mismatch");
  return coefficients.at(sign_mask(signs));
}

double GhzExpansion::total_weight() const {
  double w = 0.0;
  for (const cplx& c : coefficients) w += std::norm(c);
  return w;
}

namespace {

void check_expansion_inputs(const QubitAngles& angles, const std::vector<double>& etas) {
  if (angles.empty()) throw std::invalid_argument("need at least one qubit");
  if (angles.size() != etas.size()) throw std::invalid_argument("one eta per qubit required");
  require_finite(angles);
  for (double e : etas)
    if (!std::isfinite(e)) throw std::invalid_argument("etas must be finite");
}

// <phi+(eta)|psi>, <phi-(eta)|psi> for one qubit.
std::pair<cplx, cplx> overlaps(const Bloch& b, double eta) {
  const auto [plus, minus] = orthogonal_pair(eta);
  const Spinor psi = spinor(b);
  return {dot(plus, psi), dot(minus, psi)};
}

}  // namespace

GhzExpansion ghz_expand(const QubitAngles& angles, const std::vector<double>& etas) {
  check_expansion_inputs(angles, etas);
  const int n = static_cast<int>(angles.size());
  if (n > kMaxExpansionQubits)
    throw std::invalid_argument("full expansion is limited to " + std::to_string(kMaxExpansionQubits) +
                                " qubits; use top_k_coefficients");
  GhzExpansion e;
  e.n_qubits = n;
  e.etas.reserve(etas.size());
  for (double eta : etas) e.etas.push_back(wrap_angle(eta));
  e.coefficients.assign(std::size_t{1} << n, cplx{0.0, 0.0});
  e.coefficients[0] = 1.0;
  std::size_t len = 1;
  for (int k = 0; k < n; ++k) {
    const auto [op, om] = overlaps(angles[static_cast<std::size_t>(k)], etas[static_cast<std::size_t>(k)]);
    for (std::size_t m = 0; m < len; ++m) {
      e.coefficients[m + len] = e.coefficients[m] * om;
      e.coefficients[m] *= op;
    }
    len *= 2;
  }
  return e;
}

StateVector reconstruct(const GhzExpansion& expansion) {
  const int n = expansion.n_qubits;
  std::vector<cplx> amps(std::size_t{1} << n, cplx{0.0, 0.0});
  for (std::uint64_t m = 0; m < expansion.coefficients.size(); ++m) {
    const cplx c = expansion.coefficients[m];
    if (c == cplx{0.0, 0.0}) continue;
    const StateVector g = ghz_state(expansion.etas, sign_string(m, n));
    for (std::size_t x = 0; x < amps.size(); ++x) amps[x] += c * g[x];
  }
  return StateVector(n, std::move(amps));
}

std::vector<std::pair<std::string, double>> top_k_coefficients(const QubitAngles& angles,
                                                               const std::vector<double>& etas,
                                                               std::uint64_t k) {
  check_expansion_inputs(angles, etas);
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  const std::size_t n = angles.size();
  if (n < 64) k = std::min<std::uint64_t>(k, std::uint64_t{1} << n);

  // Each qubit contributes its larger factor by default; a "flip" swaps in the
  // smaller one and multiplies the weight by ratio = small / large <= 1.
  std::string best(n, '+');
  double top = 1.0;
  std::vector<double> ratio(n);
  for (std::size_t q = 0; q < n; ++q) {
    const auto [op, om] = overlaps(angles[q], etas[q]);
    const double pp = std::norm(op);
    const double pm = std::norm(om);
    if (pm > pp) best[q] = '-';
    const double hi = std::max(pp, pm);
    top *= hi;
    ratio[q] = hi > 0.0 ? std::min(pp, pm) / hi : 0.0;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ratio[a] > ratio[b]; });

  auto flip = [](char c) { return c == '+' ? '-' : '+'; };

  // Best-first enumeration of flip subsets. A node is a subset whose largest
  // sorted position is `last`; `base` is its weight without that last flip.
  // Children (extend with last+1, or move last to last+1) never exceed their
  // parent, so pops come out in non-increasing order and each subset is reached
  // exactly once.
  struct Node {
    double value;
    double base;
    std::size_t last;
    std::string signs;
  };
  auto worse = [](const Node& a, const Node& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.signs > b.signs;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> heap(worse);

  std::vector<std::pair<std::string, double>> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(k, 1u << 20)));
  out.emplace_back(best, top);
  if (n > 0 && out.size() < k) {
    std::string s = best;
    s[order[0]] = flip(s[order[0]]);
    heap.push({top * ratio[order[0]], top, 0, std::move(s)});
  }
  while (out.size() < k && !heap.empty()) {
    Node node = heap.top();
    heap.pop();
    const std::size_t next = node.last + 1;
    if (next < n) {
      const std::size_t qn = order[next];
      std::string extended = node.signs;
      extended[qn] = flip(extended[qn]);
      heap.push({node.value * ratio[qn], node.value, next, std::move(extended)});

      std::string moved = node.signs;
      moved[order[node.last]] = flip(moved[order[node.last]]);
      moved[qn] = flip(moved[qn]);
      heap.push({node.base * ratio[qn], node.base, next, std::move(moved)});
    }
    out.emplace_back(std::move(node.signs), node.value);
  }
  return out;
}

std::vector<double> optimal_etas(const QubitAngles& angles) {
  std::vector<double> etas;
  etas.reserve(angles.size());
  for (const Bloch& b : angles) etas.push_back(optimal_projection(b.theta, b.phi).eta);
  return etas;
}

NptWitness npt_witness(const QubitAngles& angles) {
  require_finite(angles);
  double product = 1.0;
  for (const Bloch& b : angles) product *= optimal_projection(b.theta, b.phi).p_max;
  return {product, product > 0.5};
}

double sweep_probability(int n_qubits, double theta, double phi) {
  return std::pow(max_projection_probability(theta, phi), n_qubits);
}

double BlochSweep::theta_at(int i) const { return kPi * i / (grid_theta - 1); }

double BlochSweep::phi_at(int j) const { return 2.0 * kPi * j / grid_phi; }

BlochSweep bloch_sweep(int n_qubits, int grid_theta, int grid_phi) {
  if (n_qubits < 1) throw std::invalid_argument("sweep needs at least one qubit");
  if (grid_theta < 2 || grid_phi < 2) throw std::invalid_argument("sweep grids need at least 2 points");
  BlochSweep sweep{n_qubits, grid_theta, grid_phi, {}};
  sweep.points.resize(static_cast<std::size_t>(grid_theta) * static_cast<std::size_t>(grid_phi));
  const long long total = static_cast<long long>(sweep.points.size());
#pragma omp parallel for schedule(static)
  for (long long idx = 0; idx < total; ++idx) {
    const int i = static_cast<int>(idx / grid_phi);
    const int j = static_cast<int>(idx % grid_phi);
    const double theta = sweep.theta_at(i);
    const double phi = sweep.phi_at(j);
    sweep.points[static_cast<std::size_t>(idx)] = {theta, phi, sweep_probability(n_qubits, theta, phi)};
  }
  return sweep;
}

std::string to_csv(const BlochSweep& sweep) {
  std::string out = "theta,phi,P\n";
  char buf[96];
  for (const SweepPoint& p : sweep.points) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", p.theta, p.phi, p.p);
    out += buf;
  }
  return out;
}

nlohmann::json to_json(const BlochSweep& sweep) {
  nlohmann::json grid = nlohmann::json::array();
  for (const SweepPoint& p : sweep.points) grid.push_back({p.theta, p.phi, p.p});
  return {{"n", sweep.n_qubits}, {"grid", std::move(grid)}};
}

}  // namespace ghz
