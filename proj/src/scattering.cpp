#include "nsbf/scattering.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "nsbf/phase.hpp"

namespace nsbf {

namespace {

constexpr Complex kI(0.0, 1.0);

void require_nonzero(Complex omega, const char* what) {
  if (omega == Complex(0.0)) throw DomainError(std::string(what) + " is undefined at omega = 0");
}

Solutions solutions_at(const NsbfModel& m, Index node, Complex omega) {
  if (omega.imag() == 0.0) return eval_solutions(m, node, omega.real());
  return eval_solutions(m, node, omega);
}

// y1(0) and y1'(0); the data of c and s at x = 0 are exact
std::pair<Complex, Complex> y1_at_zero(const NsbfModel& m, const JostBasis& jb) {
  return {jb.A, jb.A * m.h + jb.B * jb.omega};
}

}  // namespace

JostBasis jost_basis(const NsbfModel& m, Complex omega) {
  require_nonzero(omega, "Jost solution");
  const double d = m.grid.length();
  const Solutions v = solutions_at(m, m.grid.size() - 1, omega);
  const Complex e = exp_i_product(omega, d);
  const Complex iw = kI * omega;
  return JostBasis{omega, e * (v.ds - iw * v.s) / omega, e * (iw * v.c - v.dc) / omega, kI + m.h / omega, v};
}

JostPair jost_pair(const NsbfModel& m, const JostBasis& basis, Index node) {
  if (node < 0 || node >= m.grid.size()) throw DomainError("Jost pair node index out of range");
  const Solutions v = solutions_at(m, node, basis.omega);
  JostPair out{basis.omega, node, basis.A * v.c + basis.B * v.s, basis.A * v.dc + basis.B * v.ds,
               v.c - basis.mu * v.s, v.dc - basis.mu * v.ds};
  if (node == 0) {
    out.y2 = 1.0;
    out.dy2 = -kI * basis.omega;
  }
  return out;
}

JostPair jost_pair(const NsbfModel& m, Index node, Complex omega) {
  return jost_pair(m, jost_basis(m, omega), node);
}

Complex transmission_a(const NsbfModel& m, const JostBasis& basis) {
  const auto [y1, dy1] = y1_at_zero(m, basis);
  const Complex iw = kI * basis.omega;
  return -(dy1 + iw * y1) / (2.0 * iw);
}

Complex transmission_a(const NsbfModel& m, Complex omega) { return transmission_a(m, jost_basis(m, omega)); }

Complex reflection_b(const NsbfModel& m, double omega) {
  if (!std::isfinite(omega)) throw DomainError("reflection coefficient needs a finite real omega");
  require_nonzero(omega, "reflection coefficient");
  const auto [y1, dy1] = y1_at_zero(m, jost_basis(m, -omega));
  const Complex iw = kI * omega;
  return (-iw * y1 - dy1) / (2.0 * iw);
}

NearZero a_near_zero(const SeedSolution& seed, double neumann_tolerance) {
  const Index last = seed.grid().size() - 1;
  const double d = seed.grid().length();
  const double f0 = seed.f0[last];
  const double df0 = seed.f0prime[last];
  const double dphi1 = seed.f1prime[last];  // phi_1 = f1 for the seed f0
  const bool neumann = std::abs(df0) <= neumann_tolerance * std::max(1.0, std::abs(f0));
  if (neumann) return NearZero{0.0, -0.5 * (f0 + dphi1), true, f0};
  return NearZero{df0 / (2.0 * kI), -0.5 * (f0 - d * df0 + dphi1), false, f0};
}

ScatteringData scattering_sweep(const NsbfModel& m, const std::vector<double>& omegas) {
  ScatteringData sd{omegas, {}, {}, {}, a_near_zero(m.seed)};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double w : omegas) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("scattering sweep needs finite omega >= 0");
    if (w == 0.0) {
      sd.a.emplace_back(nan, nan);
      sd.b.emplace_back(nan, nan);
      sd.unitarity_defect.push_back(nan);
      continue;
    }
    const Complex a = transmission_a(m, w);
    const Complex b = reflection_b(m, w);
    sd.a.push_back(a);
    sd.b.push_back(b);
    sd.unitarity_defect.push_back(std::abs(std::norm(a) - 1.0 - std::norm(b)));
  }
  return sd;
}

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

Complex checked_a(const NsbfModel& m, const JostBasis& jb) {
  const Complex a = transmission_a(m, jb);
  if (!(std::abs(a) > 0.0) || !std::isfinite(std::abs(a))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "transmission coefficient vanishes or is not finite at real omega = " << jb.omega.real();
    throw NumericalFault(msg.str());
  }
  return a;
}

void require_real_frequency(double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) throw DomainError("u_pair needs a finite omega >= 0");
}

}  // namespace

Complex u_normalization(const NsbfModel& m, const JostBasis& basis) {
  return kInvSqrt2Pi / checked_a(m, basis);
}

UPair u_pair(const NsbfModel& m, const JostBasis& basis, Complex norm, Index node) {
  const JostPair y = jost_pair(m, basis, node);
  return {y.y1 * norm, y.y2 * norm};
}

UPair u_pair(const NsbfModel& m, const NearZero& nz, Index node, double omega) {
  require_real_frequency(omega);
  if (omega == 0.0) {
    if (!nz.neumann) return {0.0, 0.0};
    const double scale = -std::sqrt(2.0 / std::numbers::pi) / (nz.f0_d * nz.f0_d + 1.0);
    const double f0 = m.seed.f0[node];
    return {scale * f0, scale * f0 * nz.f0_d};
  }
  const JostBasis jb = jost_basis(m, omega);
  return u_pair(m, jb, u_normalization(m, jb), node);
}

void u_pair_on_grid(const NsbfModel& m, const NearZero& nz, double omega, Eigen::Ref<Eigen::VectorXcd> u1,
                    Eigen::Ref<Eigen::VectorXcd> u2) {
  require_real_frequency(omega);
  const Index M = m.grid.size();
  if (u1.size() != M || u2.size() != M) throw DomainError("u_pair_on_grid output size must match the grid");
  if (omega == 0.0) {
    if (!nz.neumann) {
      u1.setZero();
      u2.setZero();
      return;
    }
    const double scale = -std::sqrt(2.0 / std::numbers::pi) / (nz.f0_d * nz.f0_d + 1.0);
    u1 = (scale * m.seed.f0.values).cast<Complex>();
    u2 = u1 * nz.f0_d;
    return;
  }
  const JostBasis jb = jost_basis(m, omega);
  const Complex norm = u_normalization(m, jb);
  // u1, u2 reuse the output buffers for c and s
  eval_on_grid(m, omega, u1, u2);
  for (Index i = 0; i < M; ++i) {
    const Complex c = u1[i], s = u2[i];
    u1[i] = (jb.A * c + jb.B * s) * norm;
    u2[i] = (c - jb.mu * s) * norm;
  }
  u2[0] = norm;
}

namespace {

// W(kappa) = y1'(0) - kappa y1(0) at omega = i kappa; a(i kappa) = W / (2 kappa)
double bound_state_function(const NsbfModel& m, double kappa) {
  const JostBasis jb = jost_basis(m, Complex(0.0, kappa));
  const auto [y1, dy1] = y1_at_zero(m, jb);
  return (dy1 - kappa * y1).real();
}

}  // namespace

std::vector<BoundState> find_bound_states(const NsbfModel& m, const Potential& p,
                                          const BoundStateOptions& options) {
  if (!(m.grid == p.grid())) throw DomainError("potential and NSBF model use different grids");
  double kappa_max = options.kappa_max;
  if (kappa_max <= 0.0) kappa_max = std::sqrt(std::max(0.0, -p.samples.values.minCoeff())) + 1.0;
  if (!std::isfinite(kappa_max)) throw DomainError("kappa_max must be finite");
  if (options.scan_points < 2) throw DomainError("bound-state scan needs at least 2 points");
  if (!(options.tolerance > 0.0)) throw DomainError("bound-state tolerance must be positive");

  const int n = options.scan_points;
  const double step = kappa_max / n;
  std::vector<double> kappa(n), w(n);
  for (int i = 0; i < n; ++i) {
    kappa[i] = step * (i + 1);
    w[i] = bound_state_function(m, kappa[i]);
  }

  std::vector<BoundState> states;
  for (int i = 0; i + 1 < n; ++i) {
    const bool change = (w[i] < 0.0 && w[i + 1] > 0.0) || (w[i] > 0.0 && w[i + 1] < 0.0);
    if (!change && w[i] != 0.0) continue;
    double lo = kappa[i], hi = kappa[i + 1], flo = w[i];
    if (flo == 0.0) hi = lo;
    while (hi - lo > options.tolerance && flo != 0.0) {
      const double mid = 0.5 * (lo + hi);
      const double fm = bound_state_function(m, mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    const double root = 0.5 * (lo + hi);
    // |a(i kappa)| = |W| / (2 kappa) must be locally minimal at a zero
    const double a_root = std::abs(bound_state_function(m, root)) / (2.0 * root);
    const double a_left = std::abs(w[i]) / (2.0 * kappa[i]);
    const double a_right = std::abs(w[i + 1]) / (2.0 * kappa[i + 1]);
    if (!(a_root <= a_left && a_root <= a_right)) continue;
    if (!states.empty() && std::abs(states.back().kappa - root) < 2.0 * options.tolerance) continue;

    const JostBasis jb = jost_basis(m, Complex(0.0, root));
    const Index M = m.grid.size();
    Vector<double> y2(M);
    for (Index j = 0; j < M; ++j) y2[j] = jost_pair(m, jb, j).y2.real();
    const double inner = cumulative_integral(RealGridFunction(m.grid, y2.cwiseAbs2()))[M - 1];
    const double norm2 = (1.0 + y2[M - 1] * y2[M - 1]) / (2.0 * root) + inner;
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
      throw NumericalFault("bound state at kappa = " + std::to_string(root) + " has a non-finite norm");
    Vector<double> v = y2 / std::sqrt(norm2);
    if (v[0] < 0.0) v = -v;
    const double tails = (v[0] * v[0] + v[M - 1] * v[M - 1]) / (2.0 * root);
    const double check = tails + cumulative_integral(RealGridFunction(m.grid, v.cwiseAbs2()))[M - 1];
    const double left = v[0], right = v[M - 1];
    states.push_back(
        BoundState{root, -root * root, RealGridFunction(m.grid, std::move(v)), left, right, std::abs(check - 1.0)});
  }
  return states;
}

}  // namespace nsbf
