#include "ghz/collective_gates.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ghz/kernels.hpp"

namespace ghz {

namespace {

void require_pairable(const StateVector& state) {
  if (state.n_qubits() < 2) throw std::invalid_argument("S needs at least two qubits");
}

// Columns |y+>, |y->.
Mat2 y_basis() {
  const double h = 1.0 / std::sqrt(2.0);
  return Mat2{{h, h, h * kI, -h * kI}};
}

}  // namespace

PairGate s_pair(int i, int j) {
  if (i == j) throw std::invalid_argument("s_pair needs two distinct qubits");
  if (i < 0 || j < 0) throw std::out_of_range("negative qubit index");
  const Mat2 y = pauli_y();
  const Mat2 id = identity2();
  const Mat4 yi = kron(id, y);  // qubit i is the low bit
  const Mat4 yj = kron(y, id);
  const Mat4 m = cplx{0.5} * (identity4() + yi + yj - yi * yj);
  return PairGate{i, j, m};
}

StateVector apply_S(const StateVector& state) {
  require_pairable(state);
  const int n = state.n_qubits();
  StateVector out = state;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      kernels::apply_two(out.mutable_amplitudes(), i, j, s_pair(i, j).matrix);
  return out;
}

StateVector apply_S(const StateVector& state, std::span<const std::pair<int, int>> order) {
  require_pairable(state);
  const int n = state.n_qubits();
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : order) {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("invalid pair in S order");
    seen.insert({std::min(i, j), std::max(i, j)});
  }
  if (seen.size() != order.size() || seen.size() != static_cast<std::size_t>(n * (n - 1) / 2))
    throw std::invalid_argument("S order must list every pair exactly once");

  StateVector out = state;
  for (auto [i, j] : order) kernels::apply_two(out.mutable_amplitudes(), i, j, s_pair(i, j).matrix);
  return out;
}

StateVector apply_S_exponential(const StateVector& state) {
  require_pairable(state);
  const int n = state.n_qubits();

  // With m qubits in |y->, sum_j sigma_y = n - 2m and
  // sum_{j<k} sigma_y sigma_y = ((n - 2m)^2 - n) / 2. The total phase in units
  // of pi/8 is an integer:
  //   -n(n-1) + 2(n-1)(n-2m) - ((n-2m)^2 - n).
  std::vector<cplx> phases(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    const long long sy = n - 2 * m;
    const long long units = -static_cast<long long>(n) * (n - 1) + 2LL * (n - 1) * sy - (sy * sy - n);
    const long long k = ((units % 16) + 16) % 16;
    phases[static_cast<std::size_t>(m)] = std::polar(1.0, kPi * static_cast<double>(k) / 8.0);
  }

  const Mat2 to_y = adjoint(y_basis());
  const Mat2 from_y = y_basis();
  StateVector out = state;
  auto amps = out.mutable_amplitudes();
  for (int k = 0; k < n; ++k) kernels::apply_single(amps, k, to_y);
  kernels::apply_weight_phases(amps, phases);
  for (int k = 0; k < n; ++k) kernels::apply_single(amps, k, from_y);
  return out;
}

RotatedPaulis rotated_paulis(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {cplx{c} * pauli_z() + cplx{s} * pauli_x(), cplx{-s} * pauli_z() + cplx{c} * pauli_x()};
}

std::pair<Spinor, Spinor> xprime_basis(double theta) {
  const double half = (theta + kPi / 2.0) / 2.0;
  const Spinor zero{std::cos(half), std::sin(half)};
  return {zero, pauli_y() * zero};
}

GhzBasisElement::GhzBasisElement(std::string s, std::vector<double> e)
    : signs(std::move(s)), etas(std::move(e)) {
  if (signs.size() != etas.size()) throw std::invalid_argument("sign string length must match etas");
  for (char c : signs)
    if (c != '+' && c != '-') throw std::invalid_argument("sign string may only contain '+' and '-'");
  for (double& eta : etas) {
    if (!std::isfinite(eta)) throw std::invalid_argument("etas must be finite");
    eta = wrap_angle(eta);
  }
}

GhzBasisElement GhzBasisElement::all_plus(std::vector<double> etas) {
  std::string s(etas.size(), '+');
  return GhzBasisElement(std::move(s), std::move(etas));
}

nlohmann::json to_json(const GhzBasisElement& e) { return {{"signs", e.signs}, {"etas", e.etas}}; }

GhzBasisElement ghz_basis_element_from_json(const nlohmann::json& j) {
  return GhzBasisElement(j.at("signs").get<std::string>(), j.at("etas").get<std::vector<double>>());
}

StateVector ghz_state(const GhzBasisElement& element) {
  const std::size_t n = element.etas.size();
  if (n < 2) throw std::invalid_argument("GHZ states need at least two qubits");
  std::vector<Spinor> spinors;
  spinors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [plus, minus] = orthogonal_pair(element.etas[k]);
    spinors.push_back(element.signs[k] == '+' ? plus : minus);
  }
  return apply_S(product_of(spinors));
}

StateVector ghz_state(std::span<const double> etas, const std::string& signs) {
  return ghz_state(GhzBasisElement(signs, std::vector<double>(etas.begin(), etas.end())));
}

StateVector maximally_entangled_state(std::span<const double> thetas) {
  if (thetas.size() < 2) throw std::invalid_argument("GHZ states need at least two qubits");
  std::vector<Spinor> zeros;
  std::vector<Spinor> ones;
  for (double t : thetas) {
    const auto [z, o] = xprime_basis(t);
    zeros.push_back(z);
    ones.push_back(o);
  }
  const StateVector a = product_of(zeros);
  const StateVector b = product_of(ones);
  std::vector<cplx> amps(a.dim());
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t x = 0; x < amps.size(); ++x) amps[x] = h * (a[x] + kI * b[x]);
  return StateVector(a.n_qubits(), std::move(amps));
}

double stabilizer_deviation(const StateVector& state, std::span<const double> etas) {
  const int n = state.n_qubits();
  if (static_cast<int>(etas.size()) != n) throw std::invalid_argument("one eta per qubit required");
  const Mat2 y = pauli_y();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    StateVector s = state;
    auto amps = s.mutable_amplitudes();
    for (int j = 0; j < n; ++j)
      kernels::apply_single(amps, j, j == i ? rotated_paulis(etas[static_cast<std::size_t>(i)]).z_prime : y);
    worst = std::max(worst, max_abs_diff(s, state));
  }
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      StateVector s = state;
      auto amps = s.mutable_amplitudes();
      kernels::apply_single(amps, i, rotated_paulis(etas[static_cast<std::size_t>(i)]).x_prime);
      kernels::apply_single(amps, k, rotated_paulis(etas[static_cast<std::size_t>(k)]).x_prime);
      worst = std::max(worst, max_abs_diff(s, state));
    }
  return worst;
}

bool verify_stabilizer(const StateVector& state, std::span<const double> etas) {
  if (state.n_qubits() < 2 || static_cast<int>(etas.size()) != state.n_qubits()) return false;
  return stabilizer_deviation(state, etas) <= kStabilizerTolerance;
}

StateVector u_n_oracle(const StateVector& state) {
  require_pairable(state);
  StateVector out = state;
  kernels::apply_identity_plus_y_string(out.mutable_amplitudes(), out.n_qubits(), kI,
                                        1.0 / std::sqrt(2.0));
  return out;
}

}  // namespace ghz
