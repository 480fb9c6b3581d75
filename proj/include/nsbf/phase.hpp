#pragma once

#include <cmath>
#include <complex>
#include <utility>

namespace nsbf {

// cos(w x), sin(w x) and exp(i w x) with the real part of the phase w x carried as
// an unevaluated sum p + e (e from fma), so large phases lose no more than one
// rounding of cos/sin themselves.

inline std::pair<double, double> cos_sin_product(double w, double x) {
  const double p = w * x;
  const double e = std::fma(w, x, -p);
  const double cp = std::cos(p), sp = std::sin(p);
  return {cp - e * sp, sp + e * cp};
}

inline std::pair<std::complex<double>, std::complex<double>> cos_sin_product(std::complex<double> w,
                                                                           double x) {
  const auto [cr, sr] = cos_sin_product(w.real(), x);
  const double q = w.imag() * x;
  const double ch = std::cosh(q), sh = std::sinh(q);
  return {{cr * ch, -sr * sh}, {sr * ch, cr * sh}};
}

inline std::complex<double> exp_i_product(std::complex<double> w, double x) {
  const auto [cr, sr] = cos_sin_product(w.real(), x);
  const double decay = std::exp(-w.imag() * x);
  return {decay * cr, decay * sr};
}

}  // namespace nsbf
