#pragma once

// Closed-form reference for the square barrier q = C on [0,d]. Everything depends
// on alpha = sqrt(w^2 - C) only through cos(alpha z) and sin(alpha z)/alpha, which
// are even in alpha, so the branch of the square root never matters. Evaluated in
// long double.

#include <complex>
#include <vector>

namespace nsbf {

struct BarrierSpec {
  double C;
  double d;
};

struct OracleSolutions {
  std::complex<double> c, s, dc, ds;  // c(0)=1, c'(0)=h, s(0)=0, s'(0)=w
  std::complex<double> y1, dy1, y2, dy2;
};

OracleSolutions oracle_solutions(const BarrierSpec& spec, double x, std::complex<double> omega,
                                 std::complex<double> h = 0.0);

std::complex<double> oracle_a(const BarrierSpec& spec, std::complex<double> omega);
std::complex<double> oracle_b(const BarrierSpec& spec, double omega);

/// Green function of H - lambda, lambda off [0, inf) and off the eigenvalues.
std::complex<double> oracle_green(const BarrierSpec& spec, double x, double y,
                                  std::complex<double> lambda);

/// kappa_j > 0 with a(i kappa_j) = 0, ascending.
std::vector<double> oracle_bound_states(const BarrierSpec& spec);

}  // namespace nsbf
