#include "ghz/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghz/collective_gates.hpp"
#include "ghz/ghz_analysis.hpp"
#include "ghz/sampling.hpp"
#include "ghz/secret_sharing.hpp"
#include "ghz/statevector.hpp"

namespace ghz::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_radians(std::string_view tok) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("angle '" + std::string(tok) + "' is not a plain number of radians");
  if (!std::isfinite(v)) throw std::invalid_argument("angles must be finite");
  return v;
}

void write_output(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + cfg.out + "' for writing");
  f << payload;
  f.close();
  if (!f) throw IoError("failed writing '" + cfg.out + "'");
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void require_n(const RunConfig& cfg, int lo, int hi) {
  if (cfg.n < lo || cfg.n > hi)
    throw UsageError("--n must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "] for " +
                     cfg.command);
}

void require_real(const QubitAngles& angles) {
  for (const Bloch& b : angles)
    if (b.phi != 0.0) throw UsageError(std::string("this command takes real-plane angles (phi = 0)"));
}

std::vector<double> thetas_of(const QubitAngles& angles) {
  std::vector<double> t;
  for (const Bloch& b : angles) t.push_back(b.theta);
  return t;
}

double worst_marginal_distance(const StateVector& s) {
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  double worst = 0.0;
  for (int k = 0; k < s.n_qubits(); ++k) worst = std::max(worst, partial_trace(s, {k}).distance(mixed));
  return worst;
}

// --- verify ----------------------------------------------------------------

struct Check {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  bool pass() const { return worst <= tolerance; }
};

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_n(cfg, 2, 10);
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
  if (cfg.distribution && *cfg.distribution != "uniform-real-plane")
    throw UsageError("verify draws real-plane states only");

  std::vector<QubitAngles> trials;
  if (cfg.angles) {
    require_real(*cfg.angles);
    trials.push_back(*cfg.angles);
  } else {
    const std::uint64_t base = derive_seed(cfg.seed, "angles");
    for (int t = 0; t < cfg.trials; ++t)
      trials.push_back(random_angles(cfg.n, "uniform-real-plane", derive_seed(base, std::to_string(t))));
  }

  Check proposition{"proposition_fidelity_deficit", 0.0, 1e-10};
  Check involution{"involution_max_diff", 0.0, 1e-12};
  Check stabilizer{"stabilizer_max_diff", 0.0, kStabilizerTolerance};
  Check exponential{"exponential_max_diff", 0.0, 1e-9};
  Check mixing{"marginal_max_distance", 0.0, 1e-10};
  for (const QubitAngles& angles : trials) {
    const std::vector<double> thetas = thetas_of(angles);
    const StateVector psi = product_state(angles);
    const StateVector evolved = apply_S(psi);
    proposition.worst = std::max(proposition.worst, 1.0 - fidelity(maximally_entangled_state(thetas), evolved));
    involution.worst = std::max(involution.worst, max_abs_diff(apply_S(evolved), psi));
    stabilizer.worst = std::max(stabilizer.worst, stabilizer_deviation(evolved, thetas));
    exponential.worst = std::max(exponential.worst, max_abs_diff(apply_S_exponential(psi), evolved));
    mixing.worst = std::max(mixing.worst, worst_marginal_distance(evolved));
  }

  nlohmann::json checks = nlohmann::json::object();
  bool all = true;
  for (const Check* c : {&proposition, &involution, &stabilizer, &exponential, &mixing}) {
    checks[c->name] = {{"worst", c->worst}, {"tolerance", c->tolerance}, {"pass", c->pass()}};
    if (!c->pass()) {
      all = false;
      err << "check failed: " << c->name << " (worst " << c->worst << ", tolerance " << c->tolerance << ")\n";
    }
  }
  const nlohmann::json report = {{"command", "verify"},
                                 {"n", cfg.n},
                                 {"trials", static_cast<int>(trials.size())},
                                 {"seed", cfg.seed},
                                 {"checks", checks},
                                 {"pass", all}};
  write_output(cfg, dump(report), out);
  return all ? kOk : kCheckFailed;
}

// --- ghz -------------------------------------------------------------------

int cmd_ghz(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_n(cfg, 2, qubit_cap());
  const QubitAngles angles = resolve_angles(cfg, "uniform-real-plane");
  require_real(angles);
  const std::vector<double> thetas = thetas_of(angles);
  const GhzBasisElement element = GhzBasisElement::all_plus(thetas);
  const StateVector state = ghz_state(element);
  const double deficit = 1.0 - fidelity(state, maximally_entangled_state(thetas));
  const double stab = stabilizer_deviation(state, element.etas);
  const double marg = worst_marginal_distance(state);

  nlohmann::json amps = nlohmann::json::array();
  for (const cplx& a : state.amplitudes()) amps.push_back({a.real(), a.imag()});
  const bool ok = deficit <= 1e-10 && stab <= kStabilizerTolerance && marg <= 1e-10;
  const nlohmann::json report = {{"command", "ghz"},
                                 {"n", cfg.n},
                                 {"element", to_json(element)},
                                 {"fidelity_deficit", deficit},
                                 {"stabilizer_max_diff", stab},
                                 {"marginal_max_distance", marg},
                                 {"amplitudes", amps},
                                 {"pass", ok}};
  write_output(cfg, dump(report), out);
  if (!ok) err << "check failed: generated state is not the expected GHZ state\n";
  return ok ? kOk : kCheckFailed;
}

// --- expand ----------------------------------------------------------------

int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const QubitAngles angles = resolve_angles(cfg, "uniform-sphere");
  if (cfg.top_k < 1) throw UsageError("--top-k must be at least 1");
  const std::vector<double> etas = optimal_etas(angles);
  const auto top = top_k_coefficients(angles, etas, cfg.top_k);

  if (cfg.format == "csv") {
    std::string csv = "signs,weight\n";
    char buf[64];
    for (const auto& [s, w] : top) {
      std::snprintf(buf, sizeof buf, ",%.12g\n", w);
      csv += s + buf;
    }
    write_output(cfg, csv, out);
    return kOk;
  }

  nlohmann::json proj = nlohmann::json::array();
  nlohmann::json ang = nlohmann::json::array();
  for (const Bloch& b : angles) {
    const ProjectionResult r = optimal_projection(b.theta, b.phi);
    proj.push_back({{"eta", r.eta}, {"p_max", r.p_max}, {"degenerate", r.degenerate}});
    ang.push_back({b.theta, b.phi});
  }
  const NptWitness w = npt_witness(angles);
  nlohmann::json topj = nlohmann::json::array();
  for (const auto& [s, weight] : top) topj.push_back({{"signs", s}, {"weight", weight}});
  nlohmann::json report = {{"command", "expand"},
                           {"n", static_cast<int>(angles.size())},
                           {"angles", ang},
                           {"projections", proj},
                           {"npt", {{"product", w.product}, {"conclusive", w.conclusive}}},
                           {"top_k", topj}};
  if (static_cast<int>(angles.size()) <= kMaxExpansionQubits) {
    const GhzExpansion e = ghz_expand(angles, etas);
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::uint64_t m = 0; m < e.coefficients.size(); ++m)
      coeffs.push_back({{"signs", sign_string(m, e.n_qubits)},
                        {"re", e.coefficients[m].real()},
                        {"im", e.coefficients[m].imag()}});
    report["expansion"] = coeffs;
    report["total_weight"] = e.total_weight();
  }
  write_output(cfg, dump(report), out);
  return kOk;
}

// --- sweep -----------------------------------------------------------------

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1 for sweep");
  if (cfg.grid_theta < 2 || cfg.grid_phi < 2) throw UsageError("sweep grids must be at least 2x2");
  const BlochSweep sweep = bloch_sweep(cfg.n, cfg.grid_theta, cfg.grid_phi);
  write_output(cfg, cfg.format == "csv" ? to_csv(sweep) : dump(to_json(sweep)), out);

  auto [lo, hi] = std::minmax_element(sweep.points.begin(), sweep.points.end(),
                                      [](const SweepPoint& a, const SweepPoint& b) { return a.p < b.p; });
  std::ostream& summary = cfg.out.empty() ? err : out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "min P = %.12g at (%.12g, %.12g); max P = %.12g at (%.12g, %.12g)\n", lo->p,
                lo->theta, lo->phi, hi->p, hi->theta, hi->phi);
  summary << buf;
  return kOk;
}

// --- protocol --------------------------------------------------------------

int cmd_protocol(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_n(cfg, 2, qubit_cap());
  if (cfg.shots < kMinShots) throw UsageError("--shots must be at least " + std::to_string(kMinShots));
  if (cfg.shots % 2 != 0) throw UsageError("--shots must be even");
  const QubitAngles angles = resolve_angles(cfg, "uniform-real-plane");
  require_real(angles);
  const Transcript t = run_protocol(SecretQueue(thetas_of(angles)), cfg.shots, cfg.seed);
  write_output(cfg, dump(to_json(t)), out);
  for (const std::string& v : t.violations) err << "check failed: " << v << "\n";
  return t.violations.empty() ? kOk : kCheckFailed;
}

}  // namespace

QubitAngles parse_angles(const std::string& text) {
  QubitAngles angles;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      angles.push_back({parse_radians(item), 0.0});
    } else {
      angles.push_back({parse_radians(std::string_view(item).substr(0, colon)),
                        parse_radians(std::string_view(item).substr(colon + 1))});
    }
  }
  if (angles.empty()) throw std::invalid_argument("--angles is empty");
  return angles;
}

QubitAngles random_angles(int n, const std::string& distribution, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  QubitAngles angles;
  for (int k = 0; k < n; ++k) {
    if (distribution == "uniform-sphere") {
      const double u = uniform01(rng);
      const double v = uniform01(rng);
      angles.push_back({std::acos(1.0 - 2.0 * u), 2.0 * kPi * v});
    } else if (distribution == "uniform-real-plane") {
      angles.push_back({wrap_angle(2.0 * kPi * uniform01(rng) - kPi), 0.0});
    } else {
      throw std::invalid_argument("unknown distribution '" + distribution + "'");
    }
  }
  return angles;
}

QubitAngles resolve_angles(const RunConfig& cfg, const std::string& default_distribution) {
  if (cfg.angles && cfg.distribution)
    throw std::invalid_argument("give either --angles or --distribution, not both");
  if (cfg.angles) {
    if (cfg.n != 0 && static_cast<int>(cfg.angles->size()) != cfg.n)
      throw std::invalid_argument("--angles has " + std::to_string(cfg.angles->size()) + " entries but --n is " +
                                  std::to_string(cfg.n));
    return *cfg.angles;
  }
  if (cfg.n < 1) throw std::invalid_argument("--n is required when angles are drawn at random");
  return random_angles(cfg.n, cfg.distribution.value_or(default_distribution), derive_seed(cfg.seed, "angles"));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collective J_y^2 GHZ generation, analysis and secret sharing"};
  RunConfig cfg;
  std::string angles_text;
  std::string distribution;

  app.add_option("--command", cfg.command, "verify | ghz | expand | sweep | protocol")
      ->required()
      ->check(CLI::IsMember({"verify", "ghz", "expand", "sweep", "protocol"}));
  app.add_option("--n", cfg.n, "qubit count");
  app.add_option("--angles", angles_text, "explicit angles \"t1:p1,t2:p2,...\" in radians");
  app.add_option("--distribution", distribution, "random angle distribution")
      ->check(CLI::IsMember({"uniform-sphere", "uniform-real-plane"}));
  app.add_option("--seed", cfg.seed, "master seed");
  app.add_option("--trials", cfg.trials, "random states for verify");
  app.add_option("--shots", cfg.shots, "measurement shots per party");
  app.add_option("--grid-theta", cfg.grid_theta, "theta grid points");
  app.add_option("--grid-phi", cfg.grid_phi, "phi grid points");
  app.add_option("--top-k", cfg.top_k, "largest GHZ components to report");
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (!angles_text.empty()) {
      cfg.angles = parse_angles(angles_text);
      if (cfg.n == 0) cfg.n = static_cast<int>(cfg.angles->size());
      if (static_cast<int>(cfg.angles->size()) != cfg.n)
        throw UsageError("--angles has " + std::to_string(cfg.angles->size()) + " entries but --n is " +
                         std::to_string(cfg.n));
    }
    if (!distribution.empty()) cfg.distribution = distribution;
    if (cfg.angles && cfg.distribution) throw UsageError("give either --angles or --distribution, not both");

    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "ghz") return cmd_ghz(cfg, out, err);
    if (cfg.command == "expand") return cmd_expand(cfg, out, err);
    if (cfg.command == "sweep") return cmd_sweep(cfg, out, err);
    return cmd_protocol(cfg, out, err);
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace ghz::cli
