#pragma once

// Nonvanishing particular solution f of -f'' + q f = 0 and the associated
// systems of formal powers phi_k, psi_k.

#include "nsbf/potential.hpp"
#include "nsbf/wide.hpp"

namespace nsbf {

enum class SeedChoice {
  Complex,  // f = f0 + i f1, h = i; never vanishes for real q
  Real,     // f = f0, h = 0; caller asserts f0 has no zeros on [0,d]
};

struct SeedSolution {
  SeedChoice choice;
  ComplexGridFunction f;
  ComplexGridFunction fprime;
  Complex h;  // f'(0)
  // f0(0)=1, f0'(0)=0 and f1(0)=0, f1'(0)=1
  RealGridFunction f0, f0prime, f1, f1prime;

  const Grid& grid() const { return f.grid; }
};

/// f0 and f1 by Picard iteration of g_{k+1}(x) = int_0^x int_0^t q g_k, summed until
/// the added term is below 1e-15 in max norm (at most 100 terms).
SeedSolution build_seed(const Potential& p, SeedChoice choice = SeedChoice::Complex);

/// Recursive integrals X^(n), X~^(n) and the formal powers built from them.
///
/// Besides the tables themselves the scaled values X^(n)/x^n, phi_k/x^k, psi_k/x^k
/// are kept; column 0 (x = 0) of a scaled table holds the limit value. The recursion
/// runs in quad precision and the NSBF coefficients are assembled from the quad
/// copies of the scaled phi and psi tables.
struct FormalPowers {
  int K;
  Grid grid;
  // (K+1) x M, row n = index, column = node
  Eigen::MatrixXcd X, Xt, phi, psi;
  Eigen::MatrixXcd X_scaled, Xt_scaled, phi_scaled, psi_scaled;
  WideTable phi_scaled_wide, psi_scaled_wide;
};

FormalPowers build_formal_powers(const SeedSolution& seed, int K);

}  // namespace nsbf
