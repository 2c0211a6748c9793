// Acceptance report: one PASS/FAIL line per criterion. argv[1] is the path to
// the command-line binary used by the determinism check.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ghz/collective_gates.hpp"
#include "ghz/ghz_analysis.hpp"
#include "ghz/sampling.hpp"
#include "ghz/secret_sharing.hpp"
#include "helpers.hpp"

using namespace ghz;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Dense matrix of a linear map given by its action on basis states.
testing::Dense matrix_of(int n, const std::function<StateVector(const StateVector&)>& f) {
  const std::size_t d = std::size_t{1} << n;
  testing::Dense m(d);
  for (std::size_t c = 0; c < d; ++c) {
    const StateVector col = f(StateVector::basis(n, c));
    for (std::size_t r = 0; r < d; ++r) m(r, c) = col[r];
  }
  return m;
}

StateVector with_single(const StateVector& s, int q, const Mat2& u) {
  StateVector out = s;
  apply_single(out, q, u);
  return out;
}

double worst_proposition_deficit(int n, int samples, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const std::vector<double> thetas = testing::random_thetas(n, rng);
    const StateVector evolved = apply_S(product_state(real_angles(thetas)));
    worst = std::max(worst, 1.0 - fidelity(maximally_entangled_state(thetas), evolved));
  }
  return worst;
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1);
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) worst = std::max(worst, worst_proposition_deficit(n, 50, rng));
  const double secs = seconds_since(t0);
  return {worst <= 1e-10 && secs < 10.0,
          fmt("N=2..10 x 50 states: worst 1-F = %.3g (tol 1e-10), %.2f s (limit 10 s)", worst, secs)};
}

Outcome criterion2() {
  std::mt19937_64 rng(2);
  const double odd = worst_proposition_deficit(3, 50, rng);
  const double even = worst_proposition_deficit(4, 50, rng);
  return {odd <= 1e-10 && even <= 1e-10,
          fmt("N=3 worst 1-F = %.3g, N=4 worst 1-F = %.3g (tol 1e-10), same code path", odd, even)};
}

Outcome criterion3() {
  using testing::Dense;
  double involution = 0.0;
  double exponential = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const std::size_t d = std::size_t{1} << n;
    for (std::size_t c = 0; c < d; ++c) {
      const StateVector e = StateVector::basis(n, c);
      const StateVector once = apply_S(e);
      involution = std::max(involution, max_abs_diff(apply_S(once), e));
      exponential = std::max(exponential, max_abs_diff(apply_S_exponential(e), once));
    }
  }

  const int n = 4;
  std::mt19937_64 rng(3);
  const std::vector<double> thetas = testing::random_thetas(n, rng);
  double conj = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const PairGate g = s_pair(i, j);
      const Dense sij = matrix_of(n, [&](const StateVector& s) {
        StateVector o = s;
        apply_two(o, g.i, g.j, g.matrix);
        return o;
      });
      const Dense sd = testing::dagger(sij);
      auto single = [&](int q, const Mat2& u) {
        return matrix_of(n, [&](const StateVector& s) { return with_single(s, q, u); });
      };
      const Dense zi = single(i, rotated_paulis(thetas[static_cast<std::size_t>(i)]).z_prime);
      conj = std::max(conj, testing::max_diff(sij * zi * sd, zi * single(j, pauli_y())));
      for (int q = 0; q < n; ++q) {
        const Dense yq = single(q, pauli_y());
        conj = std::max(conj, testing::max_diff(sij * yq * sd, yq));
        if (q != i && q != j) {
          const Dense zq = single(q, rotated_paulis(thetas[static_cast<std::size_t>(q)]).z_prime);
          conj = std::max(conj, testing::max_diff(sij * zq * sd, zq));
        }
      }
    }
  return {involution <= 1e-12 && conj <= 1e-12 && exponential <= 1e-9,
          fmt("|S^2-I| = %.3g (tol 1e-12), 16x16 conjugations %.3g (tol 1e-12), |S-exp form| = %.3g (tol 1e-9), N<=10",
              involution, conj, exponential)};
}

Outcome criterion4() {
  std::mt19937_64 rng(4);
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  double worst = 0.0;
  long states = 0;
  for (int n = 2; n <= 8; ++n)
    for (int rep = 0; rep < 3; ++rep) {
      const std::vector<double> etas = testing::random_thetas(n, rng);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const StateVector g = ghz_state(etas, sign_string(m, n));
        ++states;
        for (int k = 0; k < n; ++k) worst = std::max(worst, partial_trace(g, {k}).distance(mixed));
      }
    }
  return {worst <= 1e-10,
          fmt("%.0f GHZ-basis states, N=2..8: worst |rho_k - I/2| = %.3g (tol 1e-10)", static_cast<double>(states), worst)};
}

Outcome criterion5() {
  std::mt19937_64 rng(5);
  double form = 0.0;
  double spectrum = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 6;
    const SecretQueue q(testing::random_thetas(n, rng));
    const StateVector enc = encode(q);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const DensityMatrix rho = partial_trace(enc, {i, j});
        form = std::max(form, rho.distance(expected_pair_state(q.thetas()[static_cast<std::size_t>(i)],
                                                                q.thetas()[static_cast<std::size_t>(j)])));
        const auto ev = rho.eigenvalues();
        spectrum = std::max({spectrum, std::abs(ev[0]), std::abs(ev[1]), std::abs(ev[2] - 0.5), std::abs(ev[3] - 0.5)});
      }
  }
  return {form <= 1e-10 && spectrum <= 1e-10,
          fmt("200 queues, all pairs: closed form %.3g, spectrum (1/2,1/2,0,0) %.3g (tol 1e-10)", form, spectrum)};
}

Outcome criterion6() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double theta = std::acos(1.0 - 2.0 * u(rng));
    const double phi = 2.0 * kPi * u(rng);
    worst = std::max(worst, std::abs(optimal_projection(theta, phi).p_max - testing::grid_search_pmax(theta, phi, 100000)));
  }
  const bool half = optimal_projection(kPi / 2, kPi / 2).p_max == 0.5;
  bool ones = true;
  for (int k = 0; k <= 1000; ++k) ones = ones && optimal_projection(-kPi + 2 * kPi * k / 1000.0, 0.0).p_max == 1.0;
  char buf[256];
  std::snprintf(buf, sizeof buf, "1000 points vs 1e5-point grid: worst %.3g (tol 1e-6); p(pi/2,pi/2)=1/2 %s; p(theta,0)=1 %s",
                worst, half ? "yes" : "no", ones ? "yes" : "no");
  return {worst <= 1e-6 && half && ones, buf};
}

Outcome criterion7() {
  // |sin(theta) sin(phi)| below which the N = 30 GHZ probability exceeds 1/2.
  constexpr double kBandHalfWidth = 0.2987866431;
  const auto t0 = std::chrono::steady_clock::now();
  const BlochSweep sweep = bloch_sweep(30, 181, 360);
  const double secs = seconds_since(t0);

  const bool top = sweep_probability(30, kPi / 2, 0.0) == 1.0;
  const bool bottom = sweep_probability(30, kPi / 2, kPi / 2) == std::ldexp(1.0, -30);
  const bool grid_top = sweep.points[static_cast<std::size_t>(90 * 360 + 0)].p == 1.0;
  const bool grid_bottom = sweep.points[static_cast<std::size_t>(90 * 360 + 90)].p == std::ldexp(1.0, -30);

  auto band = [&](int i, int j) {
    return std::abs(std::sin(sweep.theta_at(i)) * std::sin(sweep.phi_at(j))) < kBandHalfWidth;
  };
  int far_mismatches = 0;
  int mismatches = 0;
  for (int i = 0; i < 181; ++i)
    for (int j = 0; j < 360; ++j) {
      const bool above = sweep.points[static_cast<std::size_t>(i * 360 + j)].p > 0.5;
      if (above == band(i, j)) continue;
      ++mismatches;
      bool near = false;
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj)
          if (band(std::clamp(i + di, 0, 180), (j + dj + 360) % 360) == above) near = true;
      if (!near) ++far_mismatches;
    }
  const bool pass = top && bottom && grid_top && grid_bottom && far_mismatches == 0 && secs < 5.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "N=30 181x360: P(pi/2,0)=1 %s, P(pi/2,pi/2)=2^-30 %s, band |sin t sin p|<%.7f mismatches %d "
                "(beyond 1 cell: %d), %.3f s (limit 5 s)",
                top && grid_top ? "yes" : "no", bottom && grid_bottom ? "yes" : "no", kBandHalfWidth, mismatches,
                far_mismatches, secs);
  return {pass, buf};
}

Outcome criterion8() {
  std::mt19937_64 rng(8);
  double weight = 0.0;
  double deficit = 0.0;
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const QubitAngles angles = testing::random_sphere(n, rng);
      const std::vector<double> etas = trial % 2 ? testing::random_thetas(n, rng) : optimal_etas(angles);
      const GhzExpansion e = ghz_expand(angles, etas);
      weight = std::max(weight, std::abs(e.total_weight() - 1.0));
      if (n >= 2) deficit = std::max(deficit, 1.0 - fidelity(reconstruct(e), apply_S(product_state(angles))));
    }
  return {weight <= 1e-10 && deficit <= 1e-10,
          fmt("N<=6: |sum |c_s|^2 - 1| = %.3g, reconstruction 1-F = %.3g (tol 1e-10)", weight, deficit)};
}

Outcome criterion9() {
  const auto t0 = std::chrono::steady_clock::now();
  double deficit = 0.0;
  double worst_rate = 1.0;
  int collusion_misses = 0;
  for (int n = 2; n <= 8; ++n) {
    int good = 0;
    for (int run = 0; run < 50; ++run) {
      std::mt19937_64 rng(derive_seed(9, std::to_string(n) + ":" + std::to_string(run)));
      const SecretQueue q(testing::random_thetas(n, rng));
      const StateVector enc = encode(q);
      const StateVector dec = decode_state(enc);
      deficit = std::max(deficit, 1.0 - fidelity(dec, product_state(real_angles(q.thetas()))));
      const RecoveryEstimate est = estimate_secrets(dec, 100000, rng());
      bool all = true;
      for (int k = 0; k < n; ++k)
        all = all && angle_distance(est.theta_hats[static_cast<std::size_t>(k)], q.thetas()[static_cast<std::size_t>(k)]) <= 0.05;
      if (all) ++good;
      if (n >= 3) {
        const int i = run % n;
        const int j = (i + 1 + run % (n - 1)) % n;
        const CollusionReport r = collude(enc, i, j);
        const double ti = q.thetas()[static_cast<std::size_t>(i)];
        const double tj = q.thetas()[static_cast<std::size_t>(j)];
        const bool found = std::any_of(r.candidates.begin(), r.candidates.end(), [&](const auto& c) {
          return angle_distance(c.first, ti) < 1e-6 && angle_distance(c.second, tj) < 1e-6;
        });
        if (!found) ++collusion_misses;
      }
    }
    worst_rate = std::min(worst_rate, good / 50.0);
  }
  const double secs = seconds_since(t0);
  return {deficit <= 1e-10 && worst_rate >= 0.95 && collusion_misses == 0 && secs < 30.0,
          fmt("N=2..8: decode 1-F = %.3g (tol 1e-10), worst recovery rate %.2f (need 0.95), ", deficit, worst_rate) +
              fmt("collusion misses %.0f, %.2f s (limit 30 s)", collusion_misses, secs)};
}

Outcome criterion10(const std::string& cli) {
  if (cli.empty()) return {false, "no command-line binary path given"};
  const auto dir = std::filesystem::temp_directory_path() / "ghzsim_acceptance";
  std::filesystem::create_directories(dir);
  const std::vector<std::string> commands{
      "--command verify --n 6 --trials 5 --seed 3",
      "--command ghz --n 5 --seed 3",
      "--command expand --n 8 --seed 3 --top-k 16",
      "--command expand --n 5 --seed 3 --format csv",
      "--command sweep --n 30 --grid-theta 181 --grid-phi 360 --format csv",
      "--command protocol --n 5 --seed 3 --shots 100000"};
  int identical = 0;
  for (std::size_t k = 0; k < commands.size(); ++k) {
    std::string contents[2];
    for (int rep = 0; rep < 2; ++rep) {
      const auto path = dir / ("run" + std::to_string(k) + "_" + std::to_string(rep));
      const std::string line = "\"" + cli + "\" " + commands[k] + " --out \"" + path.string() + "\" > /dev/null 2>&1";
      if (std::system(line.c_str()) != 0) return {false, "command failed: " + commands[k]};
      std::ifstream f(path, std::ios::binary);
      contents[rep].assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    if (!contents[0].empty() && contents[0] == contents[1]) ++identical;
  }
  return {identical == static_cast<int>(commands.size()),
          fmt("%.0f of %.0f commands byte-identical across repeated runs", identical,
              static_cast<double>(commands.size()))};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::function<Outcome()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, [&] { return criterion10(cli); }};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2zu: %s  %s\n", k + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
