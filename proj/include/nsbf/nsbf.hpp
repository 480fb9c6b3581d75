#pragma once

// Neumann series of Bessel functions for the solutions c(x,w), s(x,w) with
// c(0)=1, c'(0)=h, s(0)=0, s'(0)=w, and for their x-derivatives.

#include <vector>

#include "nsbf/spps.hpp"

namespace nsbf {

/// l(k, n): coefficient of x^k in the Legendre polynomial P_n.
struct LegendreCoeffs {
  int n_max;
  Eigen::MatrixXd l;
  std::vector<WideReal> wide;  // quad-precision l(k, n) at k * (n_max + 1) + n

  double operator()(int k, int n) const { return l(k, n); }
  WideReal wide_at(int k, int n) const { return wide[static_cast<size_t>(k * (n_max + 1) + n)]; }
};

LegendreCoeffs legendre_coeffs(int n_max);

inline constexpr int kMaxTruncationOrder = 16;

struct NsbfOptions {
  /// Build fails when wronskian_defect over probe_omegas exceeds this; <= 0 disables the gate.
  double wronskian_tolerance = 1e-6;
  std::vector<double> probe_omegas = {0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0, 1000.0};
};

struct NsbfModel {
  int N;
  Grid grid;
  Eigen::MatrixXcd beta;   // (2N+2) x M
  Eigen::MatrixXcd gamma;  // (2N+2) x M
  Eigen::MatrixXcd beta_by_node;  // M x (2N+2), beta transposed for node-blocked evaluation
  Complex h;
  RealGridFunction Q;
  SeedSolution seed;
  double wronskian_defect;  // over the build probes, NaN when the gate is disabled
};

NsbfModel build_nsbf(const FormalPowers& fp, const SeedSolution& seed, const Potential& p, int N,
                     const NsbfOptions& options = {});

/// Truncated values c_N, s_N and derivative approximations at a grid node.
struct Solutions {
  Complex c, s, dc, ds;
};

/// Omega is double (real frequency) or Complex.
template <typename Omega>
Solutions eval_solutions(const NsbfModel& m, Index node, Omega omega);

/// c_N and s_N at every node for a real frequency; cos(w x_i) and sin(w x_i) are
/// stored too when the (grid-sized) outputs are given.
void eval_on_grid(const NsbfModel& m, double omega, Eigen::Ref<Eigen::VectorXcd> c,
                  Eigen::Ref<Eigen::VectorXcd> s, Eigen::VectorXd* cos_wx = nullptr,
                  Eigen::VectorXd* sin_wx = nullptr);

/// max over nodes and the given nonzero frequencies of |(c s' - c' s)/w - 1|.
double wronskian_defect(const NsbfModel& m, const std::vector<double>& omegas);

}  // namespace nsbf
