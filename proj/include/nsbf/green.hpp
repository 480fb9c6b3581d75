#pragma once

// Green function of H - lambda from the Jost solutions and from the spectral
// representation, plain or with one or two asymptotic terms of the integrand
// subtracted and added back in closed form.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsbf/scattering.hpp"

namespace nsbf {

enum class GreenVariant { Jost, Plain, Head1, Head2 };

std::string_view variant_name(GreenVariant v);
GreenVariant parse_variant(std::string_view name);

/// Square root with Im >= 0.
Complex sqrt_upper(Complex lambda);

struct GreenRequest {
  double x = 0.0;
  double y = 0.0;
  Complex lambda = -4.0;
  GreenVariant variant = GreenVariant::Head2;
  double omega_max = 1e4;
  double omega_step = 0.01;
};

struct GreenResult {
  Complex value;
  Complex discrete;  // sum over bound states
  Complex head;      // closed-form integral of the subtracted terms
  Complex integral;  // truncated spectral integral
  double tail;       // |integrand| at omega_max
  double x, y;       // nodes actually used
};

/// y1(max, k) y2(min, k) / (2 i k a(k)), k = sqrt_upper(lambda). Symmetric in x, y
/// bit-for-bit. Bound states, when given, are named in the pole error.
Complex green_jost(const NsbfModel& m, double x, double y, Complex lambda,
                   std::span<const BoundState> bound_states = {});

/// Integrands of the plain, head1 and head2 spectral representations at one frequency.
Eigen::Array3cd spectral_integrands(const NsbfModel& m, const NearZero& nz, Index x_node, Index y_node,
                                    Complex lambda, double omega);

/// Closed-form integrals over [0, inf) of the head1 and head2 subtractions.
Complex head1_integral(double delta, Complex lambda);
Complex head2_integral(double delta, double delta_Q, Complex lambda);

/// Green function by the requested variant; Jost requests are delegated to green_jost.
GreenResult green_spectral(const NsbfModel& m, const NearZero& nz, std::span<const BoundState> bound_states,
                           const GreenRequest& req);

/// Plain, head1 and head2 values at each truncation limit (ascending), sharing the
/// integrand evaluations.
std::vector<Eigen::Array3cd> green_spectral_sweep(const NsbfModel& m, const NearZero& nz,
                                                  std::span<const BoundState> bound_states, double x, double y,
                                                  Complex lambda, const std::vector<double>& omega_max,
                                                  double omega_step);

/// Spectral Green function G(x_i, y) at every node x_i for one variant.
Eigen::VectorXcd green_spectral_profile(const NsbfModel& m, const NearZero& nz,
                                        std::span<const BoundState> bound_states, double y, Complex lambda,
                                        GreenVariant variant, double omega_max, double omega_step);

/// |I1|, |I2|, |I3| per frequency (all > 0).
std::vector<Eigen::Array3d> integrand_diag(const NsbfModel& m, const NearZero& nz, double x, double y,
                                           Complex lambda, const std::vector<double>& omegas);

}  // namespace nsbf
