#pragma once

// Run configuration: flat key=value file plus --key value flags (flags win).

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "nsbf/green.hpp"
#include "nsbf/potential.hpp"
#include "nsbf/spps.hpp"

namespace nsbf {

enum class Command { Scatter, Green, Spectrum, NsbfCheck, Integrand };

std::string_view command_name(Command c);

struct RunConfig {
  Command command = Command::Green;
  std::string potential = "square";  // square | table
  double C = 1.0;
  double d = 1.0;
  std::string table;  // CSV path for potential=table
  Index grid_M = 1001;
  int K = 30;
  int N = 12;
  double omega_max = 1e4;
  double omega_step = 0.01;
  std::vector<Complex> lambda = {Complex(-4.0)};
  std::vector<double> x = {0.97};
  std::vector<double> y = {0.069};
  std::string variant = "head2";  // jost | plain | head1 | head2 | all
  std::string out = ".";
  SeedChoice seed = SeedChoice::Complex;
  double wronskian_tol = 1e-6;
  double sweep_min = 0.1;
  double sweep_max = 1000.0;
  double sweep_step = 0.1;
  double kappa_max = 0.0;  // <= 0: automatic
  double bound_tol = 1e-12;

  std::vector<GreenVariant> variants() const;
};

/// Names of every accepted key, in the order of RunConfig.
const std::vector<std::string>& config_keys();

/// Parses `<command> [--config file] [--key value ...]`; argv[0] is the program name.
/// Throws DomainError on unknown keys (listing the valid ones), malformed values
/// (naming the key) and invalid combinations such as a grid M with (M-1) % 5 != 0.
RunConfig parse_config(const std::vector<std::string>& args);

/// "-4", "2.5", "1-2i", "-2+3.4641016151377544i", "i", "(re,im)".
Complex parse_complex(const std::string& text);

/// Canonical "key=value" listing of the resolved configuration (17 significant digits).
std::string canonical_config(const RunConfig& cfg);

/// 64-bit FNV-1a of canonical_config, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

}  // namespace nsbf
