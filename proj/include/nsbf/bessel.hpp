#pragma once

#include <complex>
#include <span>

namespace nsbf {

/// Spherical Bessel functions j_0(z), ..., j_{n_max}(z) into out[0..n_max].
///
/// Scalar is double or std::complex<double>. Power series for |z| < 0.5, Miller's
/// downward recurrence normalized against j_0 = sin z / z (or j_1 near zeros of
/// sin z) for |z| <= n_max + 1, and upward recurrence from j_0, j_1 beyond that,
/// where all requested orders are below the turning point.
template <typename Scalar>
void spherical_bessel_j_sequence(int n_max, Scalar z, std::span<Scalar> out);

/// Real argument with sin z and cos z supplied by the caller.
void spherical_bessel_j_sequence(int n_max, double z, double sin_z, double cos_z, std::span<double> out);

std::complex<double> spherical_bessel_j(int n, std::complex<double> z);
double spherical_bessel_j(int n, double z);

}  // namespace nsbf
