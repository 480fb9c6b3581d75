#pragma once

// Command execution and CSV outputs.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nsbf/config.hpp"
#include "nsbf/oracle.hpp"

namespace nsbf {

/// Potential, seed, formal powers and NSBF model built from a configuration.
struct Pipeline {
  Potential potential;
  SeedSolution seed;
  FormalPowers powers;
  NsbfModel model;
  std::optional<BarrierSpec> barrier;  // set for the square barrier (oracle available)
};

Pipeline build_pipeline(const RunConfig& cfg);

/// Runs cfg.command, writes `<command>.csv` into cfg.out and returns its path.
std::string run(const RunConfig& cfg, std::ostream& log);

/// parse_config + run with exit codes: 0 success, 1 invalid input, 2 numerical fault.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsbf
