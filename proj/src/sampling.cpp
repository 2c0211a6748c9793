#include "ghz/sampling.hpp"

#include <algorithm>
#include <stdexcept>

#include "ghz/kernels.hpp"

namespace ghz {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view stream) {
  return splitmix64(splitmix64(master) ^ fnv1a(stream));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string bitstring(std::uint64_t index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int k = 0; k < n_qubits; ++k)
    if ((index >> k) & 1u) s[static_cast<std::size_t>(n_qubits - 1 - k)] = '1';
  return s;
}

double ShotRecord::fraction_one(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits) throw std::out_of_range("qubit index out of range");
  std::uint64_t ones = 0;
  const auto pos = static_cast<std::size_t>(n_qubits - 1 - qubit);
  for (const auto& [bits, count] : counts)
    if (bits[pos] == '1') ones += count;
  return static_cast<double>(ones) / static_cast<double>(shots);
}

double ShotRecord::mean_z(int qubit) const { return 1.0 - 2.0 * fraction_one(qubit); }

nlohmann::json to_json(const ShotRecord& record) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [bits, count] : record.counts) counts[bits] = count;
  return {{"seed", record.seed}, {"shots", record.shots}, {"counts", counts}};
}

ShotRecord shot_record_from_json(const nlohmann::json& j) {
  ShotRecord r;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.shots = j.at("shots").get<std::uint64_t>();
  for (const auto& [bits, count] : j.at("counts").items()) {
    r.counts[bits] = count.get<std::uint64_t>();
    r.n_qubits = static_cast<int>(bits.size());
  }
  return r;
}

ShotRecord sample_measurement(const StateVector& state, const std::vector<Mat2>& per_qubit_basis,
                              std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be at least 1");
  if (!per_qubit_basis.empty() && static_cast<int>(per_qubit_basis.size()) != state.n_qubits())
    throw std::invalid_argument("one basis rotation per qubit required");

  StateVector rotated = state;
  for (std::size_t k = 0; k < per_qubit_basis.size(); ++k)
    kernels::apply_single(rotated.mutable_amplitudes(), static_cast<int>(k), per_qubit_basis[k]);

  const auto amps = rotated.amplitudes();
  std::vector<double> cdf(amps.size());
  double acc = 0.0;
  for (std::size_t x = 0; x < amps.size(); ++x) {
    acc += std::norm(amps[x]);
    cdf[x] = acc;
  }

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> hist(amps.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uniform01(rng) * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    // Skip zero-probability states that share a cdf value with their predecessor.
    while (it != cdf.begin() && std::norm(amps[static_cast<std::size_t>(it - cdf.begin())]) == 0.0) --it;
    ++hist[static_cast<std::size_t>(it - cdf.begin())];
  }

  ShotRecord record;
  record.seed = seed;
  record.shots = shots;
  record.n_qubits = state.n_qubits();
  for (std::size_t x = 0; x < hist.size(); ++x)
    if (hist[x] > 0) record.counts[bitstring(x, state.n_qubits())] = hist[x];
  return record;
}

}  // namespace ghz
