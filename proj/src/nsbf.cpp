#include "nsbf/nsbf.hpp"

#include <array>
#include <limits>
#include <tuple>
#include <type_traits>

#include "nsbf/bessel.hpp"
#include "nsbf/phase.hpp"

namespace nsbf {

LegendreCoeffs legendre_coeffs(int n_max) {
  if (n_max < 0 || n_max > 60)
    throw DomainError("Legendre coefficient table limited to n_max <= 60 (coefficient growth)");
  // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
  const size_t width = static_cast<size_t>(n_max + 1);
  std::vector<WideReal> l(width * width, WideReal(0));
  auto at = [&](int k, int n) -> WideReal& { return l[static_cast<size_t>(k) * width + static_cast<size_t>(n)]; };
  at(0, 0) = 1;
  if (n_max >= 1) at(1, 1) = 1;
  for (int n = 1; n < n_max; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      const WideReal shifted = k >= 1 ? at(k - 1, n) : WideReal(0);
      at(k, n + 1) = (WideReal(2 * n + 1) * shifted - WideReal(n) * at(k, n - 1)) / WideReal(n + 1);
    }
  }
  Eigen::MatrixXd out(n_max + 1, n_max + 1);
  for (int k = 0; k <= n_max; ++k)
    for (int n = 0; n <= n_max; ++n) out(k, n) = static_cast<double>(at(k, n));
  return LegendreCoeffs{n_max, std::move(out), std::move(l)};
}

NsbfModel build_nsbf(const FormalPowers& fp, const SeedSolution& seed, const Potential& p, int N,
                     const NsbfOptions& options) {
  if (N < 0 || N > kMaxTruncationOrder)
    throw DomainError("NSBF truncation order N must be in [0, " + std::to_string(kMaxTruncationOrder) + "]");
  const int top = 2 * N + 1;
  if (fp.K < top)
    throw DomainError("need at least 2N+1 = " + std::to_string(top) + " formal powers, got " +
                      std::to_string(fp.K));
  const Grid& grid = fp.grid;
  const Index M = grid.size();
  const LegendreCoeffs leg = legendre_coeffs(top);
  const Complex h = seed.h;

  // Sums of l(k,n) phi_k / x^k cancel down from ~max|l| to the coefficient size, so
  // they are formed in quad precision.
  Eigen::MatrixXcd beta = Eigen::MatrixXcd::Zero(top + 1, M);
  Eigen::MatrixXcd gamma = Eigen::MatrixXcd::Zero(top + 1, M);
  for (Index i = 1; i < M; ++i) {
    const double x = grid.node(i);
    const WideComplex log_derivative = WideComplex(seed.fprime[i]) / WideComplex(seed.f[i]);
    const WideReal half_Q = WideReal(p.cumulative[i]) / 2;
    const WideComplex wh(h);
    for (int n = 0; n <= top; ++n) {
      WideComplex phi_sum(-1), psi_sum(-WideReal(n * (n + 1)) / 2);
      for (int k = n % 2; k <= n; k += 2) {
        const WideReal lk = leg.wide_at(k, n);
        phi_sum += lk * fp.phi_scaled_wide(k, i);
        if (k > 0) psi_sum += (lk * WideReal(k)) * fp.psi_scaled_wide(k - 1, i);
      }
      const WideReal weight = WideReal(2 * n + 1) / 2;
      beta(n, i) = (weight * phi_sum).to_complex();
      WideComplex g = (WideReal(1) / WideReal(x)) * psi_sum + log_derivative * (phi_sum + WideComplex(1)) -
                      WideComplex(half_Q);
      if (n % 2 == 0) g -= wh;
      gamma(n, i) = (weight * g).to_complex();
      if (!std::isfinite(std::abs(beta(n, i))) || !std::isfinite(std::abs(gamma(n, i))))
        throw NumericalFault("NSBF coefficient of order " + std::to_string(n) + " is not finite at x = " +
                             std::to_string(x));
    }
  }

  Eigen::MatrixXcd beta_by_node = beta.transpose();
  NsbfModel model{N, grid, std::move(beta), std::move(gamma), std::move(beta_by_node), h, p.cumulative, seed,
                  std::numeric_limits<double>::quiet_NaN()};
  if (options.wronskian_tolerance > 0.0) {
    model.wronskian_defect = wronskian_defect(model, options.probe_omegas);
    if (!(model.wronskian_defect <= options.wronskian_tolerance))
      throw NumericalFault("NSBF model rejected: Wronskian defect " + std::to_string(model.wronskian_defect) +
                           " exceeds tolerance " + std::to_string(options.wronskian_tolerance));
  }
  return model;
}

template <typename Omega>
Solutions eval_solutions(const NsbfModel& m, Index node, Omega omega) {
  const double x = m.grid.node(node);
  const int top = 2 * m.N + 1;
  std::array<Omega, 2 * kMaxTruncationOrder + 2> j{};
  const auto [cw, sw] = cos_sin_product(omega, x);
  if constexpr (std::is_same_v<Omega, double>)
    spherical_bessel_j_sequence(top, omega * x, sw, cw, std::span<double>(j.data(), top + 1));
  else
    spherical_bessel_j_sequence<Omega>(top, omega * x, std::span<Omega>(j.data(), top + 1));
  const auto beta = m.beta.col(node);
  const auto gamma = m.gamma.col(node);
  Complex bc = 0.0, bs = 0.0, gc = 0.0, gs = 0.0;
  double sign = 1.0;
  for (int n = 0; n <= m.N; ++n, sign = -sign) {
    bc += sign * beta[2 * n] * j[2 * n];
    bs += sign * beta[2 * n + 1] * j[2 * n + 1];
    gc += sign * gamma[2 * n] * j[2 * n];
    gs += sign * gamma[2 * n + 1] * j[2 * n + 1];
  }
  const double half_Q = 0.5 * m.Q[node];
  const Complex w = omega;
  return Solutions{Complex(cw) + 2.0 * bc, Complex(sw) + 2.0 * bs,
                   -w * Complex(sw) + (m.h + half_Q) * Complex(cw) + 2.0 * gc,
                   w * Complex(cw) + half_Q * Complex(sw) + 2.0 * gs};
}

template Solutions eval_solutions<double>(const NsbfModel&, Index, double);
template Solutions eval_solutions<Complex>(const NsbfModel&, Index, Complex);

void eval_on_grid(const NsbfModel& m, double omega, Eigen::Ref<Eigen::VectorXcd> c,
                  Eigen::Ref<Eigen::VectorXcd> s, Eigen::VectorXd* cos_wx, Eigen::VectorXd* sin_wx) {
  const Index M = m.grid.size();
  if (c.size() != M || s.size() != M) throw DomainError("eval_on_grid output size must match the grid");
  const int top = 2 * m.N + 1;
  if (cos_wx) cos_wx->resize(M);
  if (sin_wx) sin_wx->resize(M);
  // Nodes are processed in blocks so that the upward Bessel recurrences of
  // neighbouring nodes interleave.
  constexpr int kBlock = 8;
  double J[2 * kMaxTruncationOrder + 2][kBlock];
  double z[kBlock], zinv[kBlock], cw[kBlock], sw[kBlock];
  std::array<double, 2 * kMaxTruncationOrder + 2> scratch{};
  for (Index i0 = 0; i0 < M; i0 += kBlock) {
    const int B = static_cast<int>(std::min<Index>(kBlock, M - i0));
    bool upward = B == kBlock;
    for (int l = 0; l < B; ++l) {
      const double x = m.grid.node(i0 + l);
      std::tie(cw[l], sw[l]) = cos_sin_product(omega, x);
      z[l] = omega * x;
      upward = upward && std::abs(z[l]) > top + 1.0;
    }
    if (upward) {
      for (int l = 0; l < kBlock; ++l) {
        zinv[l] = 1.0 / z[l];
        J[0][l] = sw[l] * zinv[l];
        J[1][l] = (J[0][l] - cw[l]) * zinv[l];
      }
      for (int n = 1; n < top; ++n) {
        const double k = 2 * n + 1;
        for (int l = 0; l < kBlock; ++l) J[n + 1][l] = k * zinv[l] * J[n][l] - J[n - 1][l];
      }
    } else {
      for (int l = 0; l < B; ++l) {
        spherical_bessel_j_sequence(top, z[l], sw[l], cw[l], std::span<double>(scratch.data(), top + 1));
        for (int n = 0; n <= top; ++n) J[n][l] = scratch[n];
      }
    }
    Complex bc[kBlock] = {}, bs[kBlock] = {};
    double sign = 1.0;
    for (int n = 0; n <= m.N; ++n, sign = -sign) {
      const Complex* even = m.beta_by_node.col(2 * n).data() + i0;
      const Complex* odd = m.beta_by_node.col(2 * n + 1).data() + i0;
      for (int l = 0; l < B; ++l) {
        bc[l] += (sign * J[2 * n][l]) * even[l];
        bs[l] += (sign * J[2 * n + 1][l]) * odd[l];
      }
    }
    for (int l = 0; l < B; ++l) {
      const Index i = i0 + l;
      c[i] = cw[l] + 2.0 * bc[l];
      s[i] = sw[l] + 2.0 * bs[l];
      if (cos_wx) (*cos_wx)[i] = cw[l];
      if (sin_wx) (*sin_wx)[i] = sw[l];
    }
  }
}

double wronskian_defect(const NsbfModel& m, const std::vector<double>& omegas) {
  double worst = 0.0;
  for (double w : omegas) {
    if (w == 0.0) throw DomainError("Wronskian probe frequencies must be nonzero");
    for (Index i = 0; i < m.grid.size(); ++i) {
      const Solutions v = eval_solutions(m, i, w);
      worst = std::max(worst, std::abs((v.c * v.ds - v.dc * v.s) / w - 1.0));
    }
  }
  return worst;
}

}  // namespace nsbf
