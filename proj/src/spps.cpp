#include "nsbf/spps.hpp"

namespace nsbf {

namespace {

constexpr int kMaxPicardTerms = 100;
constexpr double kPicardTolerance = 1e-15;

struct PicardResult {
  Vector<double> value;
  Vector<double> derivative;
};

PicardResult picard_solution(const Potential& p, const Vector<double>& g0,
                             const Vector<double>& g0prime) {
  const Grid& grid = p.grid();
  PicardResult r{g0, g0prime};
  RealGridFunction term(grid, g0);
  for (int k = 0; k < kMaxPicardTerms; ++k) {
    RealGridFunction qg(grid, p.samples.values.cwiseProduct(term.values));
    RealGridFunction d = cumulative_integral(qg);
    term = cumulative_integral(d);
    r.value += term.values;
    r.derivative += d.values;
    if (!term.values.allFinite() || !d.values.allFinite())
      throw NumericalFault("Picard iteration for the seed solution overflowed");
    const double size = std::max(term.values.cwiseAbs().maxCoeff(), d.values.cwiseAbs().maxCoeff());
    if (size < kPicardTolerance) return r;
  }
  throw NumericalFault("Picard series for the seed solution did not converge in " +
                       std::to_string(kMaxPicardTerms) + " terms (potential too large for this grid)");
}

}  // namespace

SeedSolution build_seed(const Potential& p, SeedChoice choice) {
  const Grid& grid = p.grid();
  const Index M = grid.size();
  const PicardResult s0 = picard_solution(p, Vector<double>::Ones(M), Vector<double>::Zero(M));
  const PicardResult s1 = picard_solution(p, grid.nodes(), Vector<double>::Ones(M));

  Vector<Complex> f(M), fp(M);
  if (choice == SeedChoice::Complex) {
    f = s0.value.cast<Complex>() + Complex(0, 1) * s1.value.cast<Complex>();
    fp = s0.derivative.cast<Complex>() + Complex(0, 1) * s1.derivative.cast<Complex>();
  } else {
    f = s0.value.cast<Complex>();
    fp = s0.derivative.cast<Complex>();
  }

  const double scale = f.cwiseAbs().maxCoeff();
  for (Index i = 0; i < M; ++i) {
    if (std::abs(f[i]) <= 1e-12 * scale) {
      const std::string where = " at x = " + std::to_string(grid.node(i));
      if (choice == SeedChoice::Real) throw DomainError("real seed f0 vanishes" + where);
      throw NumericalFault("seed solution vanishes" + where);
    }
  }

  return SeedSolution{choice,
                      ComplexGridFunction(grid, std::move(f)),
                      ComplexGridFunction(grid, std::move(fp)),
                      choice == SeedChoice::Complex ? Complex(0, 1) : Complex(0, 0),
                      RealGridFunction(grid, s0.value),
                      RealGridFunction(grid, s0.derivative),
                      RealGridFunction(grid, s1.value),
                      RealGridFunction(grid, s1.derivative)};
}

FormalPowers build_formal_powers(const SeedSolution& seed, int K) {
  if (K < 1 || K > detail::kMaxPowerIndex)
    throw DomainError("formal power count K must be in [1, " + std::to_string(detail::kMaxPowerIndex) + "]");
  const Grid& grid = seed.grid();
  const Index M = grid.size();
  std::vector<WideComplex> f(M), f2(M), f2inv(M);
  for (Index i = 0; i < M; ++i) {
    f[i] = WideComplex(seed.f[i]);
    f2[i] = f[i] * f[i];
    f2inv[i] = WideComplex(1) / f2[i];
  }

  WideTable X(K + 1, M), Xt(K + 1, M);
  for (Index i = 0; i < M; ++i) X(0, i) = Xt(0, i) = WideComplex(1);
  std::vector<WideComplex> g(M), gt(M);
  for (int n = 1; n <= K; ++n) {
    // X^(n) uses (f^2)^((-1)^n), X~^(n) the reciprocal weight
    const auto& w = (n % 2 == 0) ? f2 : f2inv;
    const auto& wt = (n % 2 == 0) ? f2inv : f2;
    for (Index i = 0; i < M; ++i) {
      g[i] = X(n - 1, i) * w[i];
      gt[i] = Xt(n - 1, i) * wt[i];
    }
    power_weighted_average(g.data(), X.row(n), M, n);
    power_weighted_average(gt.data(), Xt.row(n), M, n);
  }

  FormalPowers fp{K, grid, {}, {}, {}, {}, {}, {}, {}, {}, WideTable(K + 1, M), WideTable(K + 1, M)};
  for (auto* m : {&fp.X, &fp.Xt, &fp.phi, &fp.psi, &fp.X_scaled, &fp.Xt_scaled, &fp.phi_scaled,
                  &fp.psi_scaled})
    m->resize(K + 1, M);

  const Vector<double> x = grid.nodes();
  for (int k = 0; k <= K; ++k) {
    const bool odd = (k % 2) == 1;
    for (Index i = 0; i < M; ++i) {
      const WideComplex phi = (odd ? X(k, i) : Xt(k, i)) * f[i];
      const WideComplex psi = (odd ? Xt(k, i) : X(k, i)) / f[i];
      fp.phi_scaled_wide(k, i) = phi;
      fp.psi_scaled_wide(k, i) = psi;
      fp.X_scaled(k, i) = X(k, i).to_complex();
      fp.Xt_scaled(k, i) = Xt(k, i).to_complex();
      fp.phi_scaled(k, i) = phi.to_complex();
      fp.psi_scaled(k, i) = psi.to_complex();
      const double xk = std::pow(x[i], k);
      fp.X(k, i) = xk * fp.X_scaled(k, i);
      fp.Xt(k, i) = xk * fp.Xt_scaled(k, i);
      fp.phi(k, i) = xk * fp.phi_scaled(k, i);
      fp.psi(k, i) = xk * fp.psi_scaled(k, i);
    }
    if (!fp.X_scaled.row(k).allFinite() || !fp.Xt_scaled.row(k).allFinite() ||
        !fp.phi.row(k).allFinite() || !fp.psi.row(k).allFinite())
      throw NumericalFault("formal power of index " + std::to_string(k) + " is not finite");
  }
  return fp;
}

}  // namespace nsbf
