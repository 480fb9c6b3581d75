#include "nsbf/green.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nsbf/phase.hpp"

namespace nsbf {

namespace {

constexpr Complex kI(0.0, 1.0);
constexpr double kPi = std::numbers::pi;

std::string format_real(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

std::string format_complex(Complex z) {
  std::ostringstream out;
  out.precision(17);
  out << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return out.str();
}

void require_off_spectrum(Complex lambda, std::span<const BoundState> bound_states) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
    throw DomainError("lambda must be finite");
  if (lambda.imag() == 0.0 && lambda.real() >= 0.0)
    throw DomainError("spectral representation needs lambda off [0, inf), got lambda = " + format_complex(lambda));
  for (const BoundState& s : bound_states) {
    if (std::abs(lambda - s.lambda) <= 1e-12 * std::max(1.0, std::abs(s.lambda)))
      throw DomainError("lambda = " + format_complex(lambda) + " is the eigenvalue lambda_j = " +
                        format_complex(s.lambda));
  }
}

void require_grid_step(double omega_max, double omega_step) {
  if (!(omega_max > 0.0) || !std::isfinite(omega_max)) throw DomainError("truncation Omega must be positive");
  if (!(omega_step > 0.0) || !std::isfinite(omega_step)) throw DomainError("omega step must be positive");
}

Complex discrete_part(std::span<const BoundState> bound_states, Index x, Index y, Complex lambda) {
  Complex sum = 0.0;
  for (const BoundState& s : bound_states) sum += s.v[x] * s.v[y] / (s.lambda - lambda);
  return sum;
}

// cos(w D)/pi and D_Q sin(w D)/(2 pi w), with their w -> 0 limits
std::pair<double, double> head_terms(double omega, double delta, double delta_Q) {
  if (omega == 0.0) return {1.0 / kPi, delta_Q * delta / (2.0 * kPi)};
  const auto [c, s] = cos_sin_product(omega, delta);
  return {c / kPi, delta_Q * s / (2.0 * kPi * omega)};
}

}  // namespace

std::string_view variant_name(GreenVariant v) {
  switch (v) {
    case GreenVariant::Jost: return "jost";
    case GreenVariant::Plain: return "plain";
    case GreenVariant::Head1: return "head1";
    case GreenVariant::Head2: return "head2";
  }
  return "unknown";
}

GreenVariant parse_variant(std::string_view name) {
  for (GreenVariant v : {GreenVariant::Jost, GreenVariant::Plain, GreenVariant::Head1, GreenVariant::Head2})
    if (name == variant_name(v)) return v;
  throw DomainError("unknown Green variant '" + std::string(name) + "' (valid: jost, plain, head1, head2)");
}

Complex sqrt_upper(Complex lambda) {
  const Complex r = std::sqrt(lambda);
  return r.imag() < 0.0 ? -r : r;
}

Complex green_jost(const NsbfModel& m, double x, double y, Complex lambda,
                   std::span<const BoundState> bound_states) {
  if (lambda == Complex(0.0)) throw DomainError("green_jost needs lambda != 0");
  const Index nx = m.grid.nearest_node(x), ny = m.grid.nearest_node(y);
  const Index hi = std::max(nx, ny), lo = std::min(nx, ny);
  const Complex k = sqrt_upper(lambda);
  const JostBasis jb = jost_basis(m, k);
  const Complex a = transmission_a(m, jb);
  if (!(std::abs(a) > 1e-10)) {
    std::string msg = "lambda = " + format_complex(lambda) + " is a pole of the Green function (|a| = " +
                      format_real(std::abs(a)) + ")";
    if (!bound_states.empty()) {
      std::size_t near = 0;
      for (std::size_t j = 1; j < bound_states.size(); ++j)
        if (std::abs(bound_states[j].lambda - lambda) < std::abs(bound_states[near].lambda - lambda)) near = j;
      msg += "; nearest eigenvalue lambda_" + std::to_string(near + 1) + " = " +
             format_complex(bound_states[near].lambda);
    }
    throw DomainError(msg);
  }
  const Complex y1 = jost_pair(m, jb, hi).y1;
  const Complex y2 = jost_pair(m, jb, lo).y2;
  return y1 * y2 / (2.0 * kI * k * a);
}

Complex head1_integral(double delta, Complex lambda) {
  const Complex k = sqrt_upper(lambda);
  return -exp_i_product(k, std::abs(delta)) / (2.0 * kI * k);
}

Complex head2_integral(double delta, double delta_Q, Complex lambda) {
  const double sign = delta > 0.0 ? 1.0 : (delta < 0.0 ? -1.0 : 0.0);
  const Complex k = sqrt_upper(lambda);
  return head1_integral(delta, lambda) + (exp_i_product(k, std::abs(delta)) - 1.0) / (4.0 * lambda) * sign * delta_Q;
}

Eigen::Array3cd spectral_integrands(const NsbfModel& m, const NearZero& nz, Index x_node, Index y_node,
                                    Complex lambda, double omega) {
  UPair ux, uy;
  if (omega == 0.0) {
    ux = u_pair(m, nz, x_node, 0.0);
    uy = u_pair(m, nz, y_node, 0.0);
  } else {
    const JostBasis jb = jost_basis(m, omega);
    const Complex norm = u_normalization(m, jb);
    ux = u_pair(m, jb, norm, x_node);
    uy = u_pair(m, jb, norm, y_node);
  }
  const Complex S = ux.u1 * std::conj(uy.u1) + ux.u2 * std::conj(uy.u2);
  const double delta = m.grid.node(x_node) - m.grid.node(y_node);
  const auto [h1, h2] = head_terms(omega, delta, m.Q[x_node] - m.Q[y_node]);
  const Complex den = omega * omega - lambda;
  return Eigen::Array3cd(S / den, (S - h1) / den, (S - h1 - h2) / den);
}

GreenResult green_spectral(const NsbfModel& m, const NearZero& nz, std::span<const BoundState> bound_states,
                           const GreenRequest& req) {
  const Index nx = m.grid.nearest_node(req.x), ny = m.grid.nearest_node(req.y);
  GreenResult r{0.0, 0.0, 0.0, 0.0, 0.0, m.grid.node(nx), m.grid.node(ny)};
  if (req.variant == GreenVariant::Jost) {
    r.value = green_jost(m, req.x, req.y, req.lambda, bound_states);
    return r;
  }
  require_off_spectrum(req.lambda, bound_states);
  require_grid_step(req.omega_max, req.omega_step);
  const int slot = req.variant == GreenVariant::Plain ? 0 : (req.variant == GreenVariant::Head1 ? 1 : 2);
  auto integrand = [&](double w) { return spectral_integrands(m, nz, nx, ny, req.lambda, w)[slot]; };

  const double delta = r.x - r.y;
  r.discrete = discrete_part(bound_states, nx, ny, req.lambda);
  if (slot == 1) r.head = head1_integral(delta, req.lambda);
  if (slot == 2) r.head = head2_integral(delta, m.Q[nx] - m.Q[ny], req.lambda);
  r.integral = integrate_truncated(integrand, req.omega_max, req.omega_step);
  r.tail = std::abs(integrand(req.omega_max));
  r.value = r.discrete + r.head + r.integral;
  return r;
}

std::vector<Eigen::Array3cd> green_spectral_sweep(const NsbfModel& m, const NearZero& nz,
                                                  std::span<const BoundState> bound_states, double x, double y,
                                                  Complex lambda, const std::vector<double>& omega_max,
                                                  double omega_step) {
  require_off_spectrum(lambda, bound_states);
  for (double om : omega_max) require_grid_step(om, omega_step);
  const Index nx = m.grid.nearest_node(x), ny = m.grid.nearest_node(y);
  const double delta = m.grid.node(nx) - m.grid.node(ny);
  const double delta_Q = m.Q[nx] - m.Q[ny];
  const Complex discrete = discrete_part(bound_states, nx, ny, lambda);
  const Eigen::Array3cd offset(discrete, discrete + head1_integral(delta, lambda),
                               discrete + head2_integral(delta, delta_Q, lambda));
  auto integrand = [&](double w) { return spectral_integrands(m, nz, nx, ny, lambda, w); };
  std::vector<Eigen::Array3cd> out = integrate_truncated_checkpoints(integrand, omega_max, omega_step);
  for (auto& v : out) v += offset;
  return out;
}

Eigen::VectorXcd green_spectral_profile(const NsbfModel& m, const NearZero& nz,
                                        std::span<const BoundState> bound_states, double y, Complex lambda,
                                        GreenVariant variant, double omega_max, double omega_step) {
  const Index M = m.grid.size();
  const Index ny = m.grid.nearest_node(y);
  Eigen::VectorXcd out(M);
  if (variant == GreenVariant::Jost) {
    for (Index i = 0; i < M; ++i) out[i] = green_jost(m, m.grid.node(i), m.grid.node(ny), lambda, bound_states);
    return out;
  }
  require_off_spectrum(lambda, bound_states);
  require_grid_step(omega_max, omega_step);
  const Vector<double> x = m.grid.nodes();
  const double yv = x[ny];
  Eigen::VectorXcd c(M), s(M);
  Eigen::VectorXd cw(M), sw(M);
  // S(x_i) = u1(x_i) conj(u1(y)) + u2(x_i) conj(u2(y)) = c_i P + s_i R
  auto integrand = [&](double w) -> Eigen::VectorXcd {
    Eigen::VectorXcd v(M);
    const Complex den = w * w - lambda;
    if (w == 0.0) {
      u_pair_on_grid(m, nz, w, c, s);
      const Complex a = std::conj(c[ny]), b = std::conj(s[ny]);
      for (Index i = 0; i < M; ++i) {
        Complex S = c[i] * a + s[i] * b;
        if (variant != GreenVariant::Plain) {
          const auto [h1, h2] = head_terms(0.0, x[i] - yv, m.Q[i] - m.Q[ny]);
          S -= h1;
          if (variant == GreenVariant::Head2) S -= h2;
        }
        v[i] = S / den;
      }
      return v;
    }
    const JostBasis jb = jost_basis(m, w);
    const Complex norm = u_normalization(m, jb);
    eval_on_grid(m, w, c, s, &cw, &sw);
    const Complex u1y = std::conj(norm * (jb.A * c[ny] + jb.B * s[ny]));
    const Complex u2y = ny == 0 ? std::conj(norm) : std::conj(norm * (c[ny] - jb.mu * s[ny]));
    const Complex P = norm * (jb.A * u1y + u2y);
    const Complex R = norm * (jb.B * u1y - jb.mu * u2y);
    const double cy = cw[ny], sy = sw[ny];
    const double inv_pi = 1.0 / kPi, half_inv_pi_w = 0.5 / (kPi * w);
    const Complex inv_den = 1.0 / den;
    for (Index i = 0; i < M; ++i) {
      Complex S = c[i] * P + s[i] * R;
      if (variant != GreenVariant::Plain) {
        S -= (cw[i] * cy + sw[i] * sy) * inv_pi;
        if (variant == GreenVariant::Head2)
          S -= (m.Q[i] - m.Q[ny]) * (sw[i] * cy - cw[i] * sy) * half_inv_pi_w;
      }
      v[i] = S * inv_den;
    }
    return v;
  };
  out = integrate_truncated(integrand, omega_max, omega_step);
  for (Index i = 0; i < M; ++i) {
    out[i] += discrete_part(bound_states, i, ny, lambda);
    if (variant == GreenVariant::Head1) out[i] += head1_integral(x[i] - yv, lambda);
    if (variant == GreenVariant::Head2) out[i] += head2_integral(x[i] - yv, m.Q[i] - m.Q[ny], lambda);
  }
  return out;
}

std::vector<Eigen::Array3d> integrand_diag(const NsbfModel& m, const NearZero& nz, double x, double y,
                                           Complex lambda, const std::vector<double>& omegas) {
  require_off_spectrum(lambda, {});
  const Index nx = m.grid.nearest_node(x), ny = m.grid.nearest_node(y);
  std::vector<Eigen::Array3d> out;
  out.reserve(omegas.size());
  for (double w : omegas) {
    if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("integrand diagnostics need omega > 0");
    out.push_back(spectral_integrands(m, nz, nx, ny, lambda, w).abs());
  }
  return out;
}

}  // namespace nsbf
