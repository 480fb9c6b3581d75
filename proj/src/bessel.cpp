#include "nsbf/bessel.hpp"

#include <cmath>
#include <vector>

#include "nsbf/errors.hpp"

namespace nsbf {

namespace {

template <typename Scalar>
void series(int n_max, Scalar z, std::span<Scalar> out) {
  const Scalar mz2 = -z * z / 2.0;
  Scalar lead = 1.0;  // z^n / (2n+1)!!
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) lead *= z / static_cast<double>(2 * n + 1);
    Scalar sum = 1.0, term = 1.0;
    for (int m = 1; m < 60; ++m) {
      term *= mz2 / static_cast<double>(m * (2 * n + 2 * m + 1));
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    out[n] = lead * sum;
  }
}

template <typename Scalar>
void upward(int n_max, Scalar z, Scalar s, Scalar c, std::span<Scalar> out) {
  const Scalar zinv = 1.0 / z;
  out[0] = s * zinv;
  if (n_max == 0) return;
  out[1] = (out[0] - c) * zinv;
  for (int n = 1; n < n_max; ++n) out[n + 1] = static_cast<double>(2 * n + 1) * zinv * out[n] - out[n - 1];
}

template <typename Scalar>
void miller(int n_max, Scalar z, Scalar s, Scalar c, std::span<Scalar> out) {
  const double az = std::abs(z);
  const int start = std::max(n_max, static_cast<int>(std::ceil(az))) + 32;
  const Scalar zinv = 1.0 / z;
  Scalar above = 0.0, current = 1e-30;
  Scalar j0 = 0.0, j1 = 0.0;
  for (int n = start; n >= 1; --n) {
    // current = j_n, above = j_{n+1}
    const Scalar below = static_cast<double>(2 * n + 1) * zinv * current - above;
    above = current;
    current = below;
    if (n - 1 <= n_max) out[n - 1] = current;
    if (std::abs(current) > 1e250) {
      const double r = 1e-250;
      current *= r;
      above *= r;
      for (int k = n - 1; k <= n_max; ++k) out[k] *= r;
    }
    if (n == 1) {
      j0 = current;
      j1 = above;
    }
  }
  const Scalar exact0 = s * zinv;
  const Scalar exact1 = (exact0 - c) * zinv;
  const Scalar scale = std::abs(exact0) >= std::abs(exact1) ? exact0 / j0 : exact1 / j1;
  for (int n = 0; n <= n_max; ++n) out[n] *= scale;
}

template <typename Scalar>
void check_request(int n_max, std::span<Scalar> out) {
  if (n_max < 0) throw DomainError("spherical Bessel order must be nonnegative");
  if (out.size() < static_cast<std::size_t>(n_max + 1)) throw DomainError("output span too short");
}

}  // namespace

template <typename Scalar>
void spherical_bessel_j_sequence(int n_max, Scalar z, std::span<Scalar> out) {
  check_request(n_max, out);
  const double az = std::abs(z);
  if (az < 0.5)
    series(n_max, z, out);
  else if (az > n_max + 1.0)
    upward(n_max, z, std::sin(z), std::cos(z), out);
  else
    miller(n_max, z, std::sin(z), std::cos(z), out);
}

void spherical_bessel_j_sequence(int n_max, double z, double sin_z, double cos_z, std::span<double> out) {
  check_request(n_max, out);
  const double az = std::abs(z);
  if (az < 0.5)
    series(n_max, z, out);
  else if (az > n_max + 1.0)
    upward(n_max, z, sin_z, cos_z, out);
  else
    miller(n_max, z, sin_z, cos_z, out);
}

template void spherical_bessel_j_sequence<double>(int, double, std::span<double>);
template void spherical_bessel_j_sequence<std::complex<double>>(int, std::complex<double>,
                                                                std::span<std::complex<double>>);

std::complex<double> spherical_bessel_j(int n, std::complex<double> z) {
  std::vector<std::complex<double>> out(n + 1);
  spherical_bessel_j_sequence<std::complex<double>>(n, z, out);
  return out[n];
}

double spherical_bessel_j(int n, double z) {
  std::vector<double> out(n + 1);
  spherical_bessel_j_sequence<double>(n, z, out);
  return out[n];
}

}  // namespace nsbf
