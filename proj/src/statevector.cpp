#include "ghz/statevector.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "ghz/kernels.hpp"

namespace ghz {

int qubit_cap() {
  const char* env = std::getenv("GHZ_MAX_QUBITS");
  if (env == nullptr) return kMaxQubits;
  int v = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec != std::errc{} || ptr != end || v < 1) return kMaxQubits;
  return std::min(v, kMaxQubits);
}

namespace {

void check_qubit_count(int n) {
  const int cap = qubit_cap();
  if (n < 1 || n > cap)
    throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [1, " +
                                std::to_string(cap) + "]");
}

void check_index(const StateVector& s, int k) {
  if (k < 0 || k >= s.n_qubits())
    throw std::out_of_range("qubit index " + std::to_string(k) + " out of range for " +
                            std::to_string(s.n_qubits()) + " qubits");
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<cplx> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
  check_qubit_count(n_qubits);
  if (amps_.size() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("amplitude count must be 2^n_qubits");
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw std::out_of_range("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const { return kernels::norm_squared(amps_); }

StateVector product_of(std::span<const Spinor> spinors) {
  const int n = static_cast<int>(spinors.size());
  check_qubit_count(n);
  std::vector<cplx> amps(std::size_t{1} << n);
  amps[0] = 1.0;
  // Grow the tensor product one qubit at a time; qubit k becomes bit k.
  std::size_t len = 1;
  for (int k = 0; k < n; ++k) {
    const Spinor& s = spinors[static_cast<std::size_t>(k)];
    for (std::size_t x = 0; x < len; ++x) {
      amps[x + len] = amps[x] * s[1];
      amps[x] *= s[0];
    }
    len *= 2;
  }
  return StateVector(n, std::move(amps));
}

StateVector product_state(const QubitAngles& angles) {
  check_qubit_count(static_cast<int>(angles.size()));
  require_finite(angles);
  std::vector<Spinor> spinors;
  spinors.reserve(angles.size());
  for (const Bloch& b : angles) spinors.push_back(spinor(b));
  return product_of(spinors);
}

StateVector apply_single(const StateVector& state, int k, const Mat2& u) {
  check_index(state, k);
  StateVector out = state;
  kernels::apply_single(out.mutable_amplitudes(), k, u);
  return out;
}

StateVector apply_two(const StateVector& state, int i, int j, const Mat4& u) {
  check_index(state, i);
  check_index(state, j);
  if (i == j) throw std::invalid_argument("apply_two needs two distinct qubits");
  StateVector out = state;
  kernels::apply_two(out.mutable_amplitudes(), i, j, u);
  return out;
}

cplx inner(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("inner: qubit count mismatch");
  return kernels::inner(a.amplitudes(), b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner(a, b)); }

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("max_abs_diff: qubit count mismatch");
  double d = 0.0;
  for (std::size_t x = 0; x < a.dim(); ++x) d = std::max(d, std::abs(a[x] - b[x]));
  return d;
}

DensityMatrix partial_trace(const StateVector& state, std::span<const int> keep) {
  if (keep.empty() || keep.size() > 2)
    throw std::invalid_argument("partial_trace keeps one or two qubits");
  for (int k : keep) check_index(state, k);
  if (keep.size() == 2 && keep[0] == keep[1])
    throw std::invalid_argument("partial_trace: repeated qubit index");

  const int dim = keep.size() == 1 ? 2 : 4;
  std::uint64_t kept_mask = 0;
  for (int k : keep) kept_mask |= std::uint64_t{1} << k;

  auto spread = [&](int r) {
    std::uint64_t x = 0;
    for (std::size_t t = 0; t < keep.size(); ++t)
      if ((r >> t) & 1) x |= std::uint64_t{1} << keep[t];
    return x;
  };

  std::vector<cplx> rho(static_cast<std::size_t>(dim * dim), cplx{0.0, 0.0});
  const auto amps = state.amplitudes();
  for (std::uint64_t env = 0; env < state.dim(); ++env) {
    if (env & kept_mask) continue;
    for (int r = 0; r < dim; ++r) {
      const cplx ar = amps[env | spread(r)];
      for (int c = 0; c < dim; ++c)
        rho[static_cast<std::size_t>(r * dim + c)] += ar * std::conj(amps[env | spread(c)]);
    }
  }
  return DensityMatrix(dim, std::move(rho));
}

DensityMatrix partial_trace(const StateVector& state, std::initializer_list<int> keep) {
  const std::vector<int> k(keep);
  return partial_trace(state, std::span<const int>(k));
}

}  // namespace ghz
