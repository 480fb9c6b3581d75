#include "nsbf/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "nsbf/errors.hpp"

namespace nsbf {

namespace {

using Wide = long double;
using WComplex = std::complex<Wide>;

const WComplex kI(0, 1);

WComplex widen(std::complex<double> z) { return {z.real(), z.imag()}; }
std::complex<double> narrow(WComplex z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// cos(alpha z) as a function of alpha^2
WComplex cos_alpha(WComplex alpha2, Wide z) { return std::cos(std::sqrt(alpha2) * z); }

// sin(alpha z) / alpha as a function of alpha^2
WComplex sin_alpha(WComplex alpha2, Wide z) {
  const WComplex t = alpha2 * z * z;
  if (std::abs(t) < 1e-6L) return z * (Wide(1) - t / Wide(6) + t * t / Wide(120) - t * t * t / Wide(5040));
  const WComplex alpha = std::sqrt(alpha2);
  return std::sin(alpha * z) / alpha;
}

void check(const BarrierSpec& spec) {
  if (!(spec.d > 0.0)) throw DomainError("barrier length d must be positive");
}

WComplex a_wide(const BarrierSpec& spec, WComplex w) {
  const WComplex alpha2 = w * w - Wide(spec.C);
  const Wide d = spec.d;
  return -std::exp(kI * w * d) * (cos_alpha(alpha2, d) + (w * w + alpha2) / (Wide(2) * kI * w) * sin_alpha(alpha2, d));
}

}  // namespace

OracleSolutions oracle_solutions(const BarrierSpec& spec, double x, std::complex<double> omega,
                                 std::complex<double> h) {
  check(spec);
  const WComplex w = widen(omega), hw = widen(h);
  const WComplex alpha2 = w * w - Wide(spec.C);
  const Wide X = x, r = Wide(spec.d) - Wide(x);
  const WComplex cx = cos_alpha(alpha2, X), sx = sin_alpha(alpha2, X);
  const WComplex cr = cos_alpha(alpha2, r), sr = sin_alpha(alpha2, r);
  const WComplex e = std::exp(kI * w * Wide(spec.d));
  OracleSolutions o;
  o.c = narrow(cx + hw * sx);
  o.dc = narrow(-alpha2 * sx + hw * cx);
  o.s = narrow(w * sx);
  o.ds = narrow(w * cx);
  o.y1 = narrow(e * (cr - kI * w * sr));
  o.dy1 = narrow(e * (alpha2 * sr + kI * w * cr));
  o.y2 = narrow(cx - kI * w * sx);
  o.dy2 = narrow(-alpha2 * sx - kI * w * cx);
  return o;
}

std::complex<double> oracle_a(const BarrierSpec& spec, std::complex<double> omega) {
  check(spec);
  if (omega == 0.0) throw DomainError("a(w) is undefined at w = 0");
  return narrow(a_wide(spec, widen(omega)));
}

std::complex<double> oracle_b(const BarrierSpec& spec, double omega) {
  check(spec);
  if (omega == 0.0) throw DomainError("b(w) is undefined at w = 0");
  // b = W[y1(., -w), y2(., w)] / (2 i w) at x = 0, where y2(0) = 1, y2'(0) = -i w
  const Wide w = omega;
  const WComplex alpha2 = w * w - Wide(spec.C);
  const Wide d = spec.d;
  const WComplex e = std::exp(-kI * w * d);
  const WComplex y1 = e * (cos_alpha(alpha2, d) + kI * w * sin_alpha(alpha2, d));
  const WComplex dy1 = e * (alpha2 * sin_alpha(alpha2, d) - kI * w * cos_alpha(alpha2, d));
  return narrow((y1 * (-kI * w) - dy1) / (Wide(2) * kI * w));
}

std::complex<double> oracle_green(const BarrierSpec& spec, double x, double y, std::complex<double> lambda) {
  check(spec);
  if (lambda.imag() == 0.0 && lambda.real() >= 0.0)
    throw DomainError("oracle Green function needs lambda off [0, inf)");
  WComplex w = std::sqrt(widen(lambda));
  if (w.imag() < 0) w = -w;
  const Wide hi = std::max(x, y), lo = std::min(x, y);
  const Wide d = spec.d;
  const WComplex alpha2 = w * w - Wide(spec.C);
  const WComplex a = a_wide(spec, w);
  if (std::abs(a) < 1e-14L) throw DomainError("lambda is an eigenvalue of the barrier (pole of 1/a)");
  const Wide r = d - hi + lo;
  const WComplex bracket = cos_alpha(alpha2, r) - kI * w * sin_alpha(alpha2, r) -
                           Wide(spec.C) * sin_alpha(alpha2, d - hi) * sin_alpha(alpha2, lo);
  return narrow(std::exp(kI * w * d) / (Wide(2) * kI * w * a) * bracket);
}

std::vector<double> oracle_bound_states(const BarrierSpec& spec) {
  check(spec);
  std::vector<double> roots;
  if (spec.C >= 0.0) return roots;
  const Wide C = spec.C, d = spec.d;
  // 2k * (-a(ik) e^{kd}) up to sign: real and free of the 1/k factor
  auto F = [&](Wide k) {
    const WComplex alpha2 = -k * k - C;
    return (Wide(2) * k * cos_alpha(alpha2, d) + (Wide(2) * k * k + C) * sin_alpha(alpha2, d)).real();
  };
  const Wide k_max = std::sqrt(-C);
  const int samples = 4000;
  Wide k_prev = k_max / samples, f_prev = F(k_prev);
  for (int i = 2; i <= samples; ++i) {
    const Wide k = k_max * i / samples;
    const Wide fk = F(k);
    if ((f_prev < 0) != (fk < 0) && fk != 0) {
      Wide lo = k_prev, hi = k, flo = f_prev;
      for (int it = 0; it < 200 && hi - lo > 1e-18L * hi; ++it) {
        const Wide mid = 0.5L * (lo + hi);
        const Wide fm = F(mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(static_cast<double>(0.5L * (lo + hi)));
    }
    k_prev = k;
    f_prev = fk;
  }
  return roots;
}

}  // namespace nsbf
