// Command-line front end. Exit codes: 0 success, 1 check failure, 2 usage
// error, 3 I/O error.
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ghz/bloch.hpp"

namespace ghz::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIoError = 3 };

struct RunConfig {
  std::string command;
  int n = 0;
  std::optional<QubitAngles> angles;
  std::optional<std::string> distribution;  // "uniform-sphere" | "uniform-real-plane"
  std::uint64_t seed = 0;
  int trials = 50;
  std::uint64_t shots = 100000;
  int grid_theta = 181;
  int grid_phi = 360;
  std::uint64_t top_k = 8;
  std::string out;
  std::string format = "json";
};

/// Parses "t1:p1,t2:p2,..." (radians; a bare "t" means phi = 0).
/// Throws std::invalid_argument on anything else, including unit suffixes.
QubitAngles parse_angles(const std::string& text);

/// Angles for the config: explicit, or drawn from the "angles" sub-stream of
/// the seed. Throws std::invalid_argument when both or neither apply.
QubitAngles resolve_angles(const RunConfig& config, const std::string& default_distribution);

QubitAngles random_angles(int n, const std::string& distribution, std::uint64_t seed);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghz::cli
