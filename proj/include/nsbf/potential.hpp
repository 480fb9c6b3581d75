#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nsbf/quadrature.hpp"

namespace nsbf {

enum class PotentialKind { SquareBarrier, Sampled };

/// Tabulated potential as read from a two-column `x,q` file.
struct PotentialTable {
  std::vector<double> x;
  std::vector<double> q;
};

struct PotentialSpec {
  PotentialKind kind = PotentialKind::SquareBarrier;
  double amplitude = 1.0;  // C of the square barrier
  PotentialTable table;    // used by Sampled
};

/// Real potential supported in [0,d], sampled on the master grid, together with
/// Q(x) = int_0^x q and I_q = Q(d).
struct Potential {
  PotentialKind kind;
  double amplitude;  // meaningful for SquareBarrier only
  RealGridFunction samples;
  RealGridFunction cumulative;
  double total;

  const Grid& grid() const { return samples.grid; }
  double length() const { return samples.grid.length(); }
};

Potential make_potential(const PotentialSpec& spec, const Grid& grid);

inline Potential square_barrier(double amplitude, const Grid& grid) {
  return make_potential({PotentialKind::SquareBarrier, amplitude, {}}, grid);
}

double q_at(const Potential& p, Index node);
double Q_at(const Potential& p, Index node);

/// Parses the sampled-potential CSV (header `x,q`, strictly increasing x).
PotentialTable parse_potential_csv(std::istream& in);
PotentialTable read_potential_csv(const std::string& path);

}  // namespace nsbf
