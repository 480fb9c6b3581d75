#pragma once

// Quad-precision (113-bit) real and complex arithmetic for the formal powers and
// the Legendre-weighted coefficient sums, whose terms cancel by many orders of
// magnitude. Only the four arithmetic operations are needed, so no libquadmath.

#include <complex>
#include <vector>

#include <Eigen/Core>

namespace nsbf {

using WideReal = __float128;

struct WideComplex {
  WideReal re = 0;
  WideReal im = 0;

  WideComplex() = default;
  WideComplex(WideReal r, WideReal i = 0) : re(r), im(i) {}
  explicit WideComplex(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  WideComplex& operator+=(const WideComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  WideComplex& operator-=(const WideComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
};

inline WideComplex operator+(WideComplex a, const WideComplex& b) { return a += b; }
inline WideComplex operator-(WideComplex a, const WideComplex& b) { return a -= b; }
inline WideComplex operator*(const WideComplex& a, const WideComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline WideComplex operator*(WideReal s, const WideComplex& a) { return {s * a.re, s * a.im}; }
inline WideComplex operator/(const WideComplex& a, const WideComplex& b) {
  const WideReal den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

/// Row-major rows x cols table of WideComplex.
struct WideTable {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::vector<WideComplex> data;

  WideTable() = default;
  WideTable(Eigen::Index r, Eigen::Index c) : rows(r), cols(c), data(static_cast<size_t>(r * c)) {}

  WideComplex& operator()(Eigen::Index r, Eigen::Index c) { return data[static_cast<size_t>(r * cols + c)]; }
  const WideComplex& operator()(Eigen::Index r, Eigen::Index c) const {
    return data[static_cast<size_t>(r * cols + c)];
  }
  const WideComplex* row(Eigen::Index r) const { return data.data() + r * cols; }
  WideComplex* row(Eigen::Index r) { return data.data() + r * cols; }
};

}  // namespace nsbf
