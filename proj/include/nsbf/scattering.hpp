#pragma once

// Jost solutions, transmission and reflection coefficients, generalized
// eigenfunctions u1, u2 and the discrete spectrum.

#include <vector>

#include "nsbf/nsbf.hpp"

namespace nsbf {

/// Coefficients of the Jost solutions in the (c, s) basis at one frequency:
/// y1 = A c + B s and y2 = c - mu s.
struct JostBasis {
  Complex omega;
  Complex A, B;
  Complex mu;  // i + h/omega
  Solutions at_d;
};

JostBasis jost_basis(const NsbfModel& m, Complex omega);

struct JostPair {
  Complex omega;
  Index node;
  Complex y1, dy1, y2, dy2;
};

JostPair jost_pair(const NsbfModel& m, const JostBasis& basis, Index node);
JostPair jost_pair(const NsbfModel& m, Index node, Complex omega);

/// a(w) = -(y1'(0) + i w y1(0)) / (2 i w); a == -1 when q == 0.
Complex transmission_a(const NsbfModel& m, const JostBasis& basis);
Complex transmission_a(const NsbfModel& m, Complex omega);

/// b(w) = W[y1(., -w), y2(., w)] / (2 i w) at x = 0, real w != 0.
Complex reflection_b(const NsbfModel& m, double omega);

/// a(w) ~ pole / w + constant as w -> 0.
struct NearZero {
  Complex pole;      // f0'(d) / (2i), zero in the Neumann case
  Complex constant;
  bool neumann;      // zero is a Neumann eigenvalue on [0,d]
  double f0_d;       // f0(d)
};

/// `neumann_tolerance` bounds |f0'(d)| relative to max(1, |f0(d)|).
NearZero a_near_zero(const SeedSolution& seed, double neumann_tolerance = 1e-8);

struct ScatteringData {
  std::vector<double> omega;
  std::vector<Complex> a, b;
  std::vector<double> unitarity_defect;  // | |a|^2 - 1 - |b|^2 |, NaN at w = 0
  NearZero near_zero;
};

/// a, b and unitarity defect on an ascending grid of w >= 0. At w = 0 a and b are NaN.
ScatteringData scattering_sweep(const NsbfModel& m, const std::vector<double>& omegas);

struct UPair {
  Complex u1, u2;
};

/// u_k = y_k / (sqrt(2 pi) a(w)) for w > 0; the w = 0 limits otherwise.
UPair u_pair(const NsbfModel& m, const NearZero& nz, Index node, double omega);

/// 1 / (sqrt(2 pi) a(w)) for real w > 0; NumericalFault when a vanishes.
Complex u_normalization(const NsbfModel& m, const JostBasis& basis);

/// u1, u2 at a node from a precomputed basis and normalization (w > 0).
UPair u_pair(const NsbfModel& m, const JostBasis& basis, Complex norm, Index node);

/// u1, u2 at every node.
void u_pair_on_grid(const NsbfModel& m, const NearZero& nz, double omega, Eigen::Ref<Eigen::VectorXcd> u1,
                    Eigen::Ref<Eigen::VectorXcd> u2);

struct BoundState {
  double kappa;
  double lambda;  // -kappa^2
  RealGridFunction v;
  double left_amplitude;   // v(x) = left_amplitude e^{kappa x}, x < 0
  double right_amplitude;  // v(x) = right_amplitude e^{-kappa (x-d)}, x > d
  double norm_defect;      // | ||v||^2 - 1 | with closed-form tails
};

struct BoundStateOptions {
  double kappa_max = 0.0;  // <= 0: sqrt(max(0, -min q)) + 1
  double tolerance = 1e-12;
  int scan_points = 4000;
};

/// Roots of W(kappa) = y1'(0, i kappa) - kappa y1(0, i kappa) on (0, kappa_max].
std::vector<BoundState> find_bound_states(const NsbfModel& m, const Potential& p,
                                          const BoundStateOptions& options = {});

}  // namespace nsbf
