#include "nsbf/quadrature.hpp"

#include <mutex>
#include <numbers>

namespace nsbf {

Grid::Grid(double d, Index M) : d_(d), M_(M) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("grid length d must be positive and finite");
  if (M < 11 || (M - 1) % 5 != 0)
    throw DomainError("grid node count M = " + std::to_string(M) +
                      " invalid: need M >= 11 and (M-1) divisible by 5");
}

Vector<double> Grid::nodes() const {
  Vector<double> x(M_);
  for (Index i = 0; i < M_; ++i) x[i] = node(i);
  return x;
}

Index Grid::nearest_node(double x) const {
  const double slack = 1e-12 * d_;
  if (!(x >= -slack && x <= d_ + slack)) {
    std::ostringstream msg;
    msg << "point " << x << " lies outside [0, " << d_ << "]";
    throw DomainError(msg.str());
  }
  const double t = x / step();
  return std::clamp<Index>(static_cast<Index>(std::llround(t)), 0, M_ - 1);
}

TruncatedLayout truncated_layout(double omega_max, double h) {
  if (!(omega_max > 0.0) || !std::isfinite(omega_max))
    throw DomainError("truncation limit Omega must be positive");
  if (!(h > 0.0)) throw DomainError("integration step must be positive");
  const double panel = 5.0 * h;
  TruncatedLayout layout;
  layout.full = static_cast<Index>(std::floor(omega_max / panel + 1e-9));
  const double rest = omega_max - panel * static_cast<double>(layout.full);
  if (rest > 1e-9 * panel) layout.tail_step = rest / 5.0;
  return layout;
}

namespace {

struct GaussRule {
  std::vector<WideReal> nodes;  // on [-1, 1]
  std::vector<WideReal> weights;
};

// P_m(x) and P_m'(x)
std::pair<WideReal, WideReal> legendre_value(int m, WideReal x) {
  WideReal p0 = 1, p1 = x;
  for (int k = 2; k <= m; ++k) {
    const WideReal p2 = (WideReal(2 * k - 1) * x * p1 - WideReal(k - 1) * p0) / WideReal(k);
    p0 = p1;
    p1 = p2;
  }
  return {p1, WideReal(m) * (x * p1 - p0) / (x * x - 1)};
}

GaussRule make_gauss_rule(int m) {
  GaussRule rule{std::vector<WideReal>(m), std::vector<WideReal>(m)};
  const WideReal tol = 1e-32;
  for (int i = 0; i < m; ++i) {
    WideReal x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre_value(m, x);
      const WideReal dx = p / dp;
      x -= dx;
      if (dx < tol && -dx < tol) break;
    }
    const WideReal dp = legendre_value(m, x).second;
    rule.nodes[i] = x;
    rule.weights[i] = 2 / ((1 - x * x) * dp * dp);
  }
  return rule;
}

// Lagrange basis on nodes 0..5 at u
std::array<WideReal, 6> lagrange_basis(WideReal u) {
  static constexpr std::array<double, 6> kDenominator = {-120, 24, -12, 12, -24, 120};
  std::array<WideReal, 6> out;
  for (int k = 0; k < 6; ++k) {
    WideReal v = 1;
    for (int m = 0; m < 6; ++m)
      if (m != k) v *= u - WideReal(m);
    out[k] = v / WideReal(kDenominator[k]);
  }
  return out;
}

std::shared_ptr<const detail::PowerWeightTable> make_power_weight_table(Index nodes) {
  using detail::kMaxPowerIndex;
  auto table = std::make_shared<detail::PowerWeightTable>();
  table->n_max = kMaxPowerIndex;
  table->nodes = nodes;
  table->entries.assign(static_cast<size_t>(kMaxPowerIndex * nodes), detail::PowerWeights{});
  // degree n+4 <= 2m-1 for every n <= kMaxPowerIndex
  const GaussRule rule = make_gauss_rule((kMaxPowerIndex + 5) / 2 + 2);
  for (Index b = 1; b < nodes; ++b) {
    const Index a = 5 * ((b - 1) / 5);
    const WideReal wb = static_cast<double>(b);
    const WideReal wa = static_cast<double>(a);
    const WideReal half = WideReal(static_cast<double>(b - a)) / 2;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const WideReal u = half * (rule.nodes[i] + 1);
      const auto L = lagrange_basis(u);
      const WideReal t = (wa + u) / wb;
      WideReal tp = rule.weights[i] * half / wb;  // t^(n-1) times the Gauss weight over b
      for (int n = 1; n <= kMaxPowerIndex; ++n) {
        auto& w = table->entries[static_cast<size_t>((n - 1) * nodes + b)].w;
        const WideReal c = WideReal(n) * tp;
        for (int k = 0; k < 6; ++k) w[k] += c * L[k];
        tp *= t;
      }
    }
    const WideReal r = wa / wb;
    WideReal rn = 1;
    for (int n = 1; n <= kMaxPowerIndex; ++n) {
      rn *= r;
      table->entries[static_cast<size_t>((n - 1) * nodes + b)].shrink = rn;
    }
  }
  return table;
}

}  // namespace

namespace detail {

std::shared_ptr<const PowerWeightTable> power_weight_table(Index nodes) {
  static std::mutex lock;
  static std::shared_ptr<const PowerWeightTable> cached;
  std::scoped_lock guard(lock);
  if (!cached || cached->nodes < nodes) cached = make_power_weight_table(nodes);
  return cached;
}

}  // namespace detail

void power_weighted_average(const WideComplex* g, WideComplex* Y, Index M, int n) {
  if (n < 1 || n > detail::kMaxPowerIndex)
    throw DomainError("power_weighted_average needs 1 <= n <= " + std::to_string(detail::kMaxPowerIndex));
  if (M < 11 || (M - 1) % 5 != 0) throw DomainError("power_weighted_average needs a panel-aligned node count");
  const auto table = detail::power_weight_table(M);
  detail::power_average_kernel<WideReal>(*table, n, g, Y, M);
}

}  // namespace nsbf
