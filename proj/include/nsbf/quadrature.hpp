#pragma once

// Master grid on [0,d] and the fixed-order six-point Newton-Cotes machinery used
// throughout: node-wise antiderivatives, power-weighted running averages and
// truncated integrals over [0, Omega].

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <memory>
#include <sstream>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "nsbf/errors.hpp"
#include "nsbf/summation.hpp"
#include "nsbf/wide.hpp"

namespace nsbf {

using Index = Eigen::Index;
using Complex = std::complex<double>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Uniform grid x_i = i d / (M-1) on [0,d]. M >= 11 and (M-1) % 5 == 0 so that
/// six-node panels tile the grid.
class Grid {
 public:
  Grid(double d, Index M);

  double length() const { return d_; }
  Index size() const { return M_; }
  double step() const { return d_ / static_cast<double>(M_ - 1); }
  Index panels() const { return (M_ - 1) / 5; }

  double node(Index i) const {
    return i == M_ - 1 ? d_ : static_cast<double>(i) * d_ / static_cast<double>(M_ - 1);
  }
  Vector<double> nodes() const;

  /// Nearest node to x; x must lie in [0,d] (up to rounding).
  Index nearest_node(double x) const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double d_;
  Index M_;
};

/// Samples of a function on a Grid.
template <typename Scalar>
struct GridFunction {
  Grid grid;
  Vector<Scalar> values;

  GridFunction(const Grid& g, Vector<Scalar> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
      throw DomainError("grid function has " + std::to_string(values.size()) +
                        " values for a grid of " + std::to_string(grid.size()) + " nodes");
  }
  explicit GridFunction(const Grid& g) : GridFunction(g, Vector<Scalar>::Zero(g.size())) {}

  Scalar operator[](Index i) const { return values[i]; }
  Scalar& operator[](Index i) { return values[i]; }
  Index size() const { return values.size(); }
};

using RealGridFunction = GridFunction<double>;
using ComplexGridFunction = GridFunction<Complex>;

namespace detail {

// int_0^j L_k(t) dt for the Lagrange basis on nodes 0..5, scaled by 1440.
inline constexpr std::array<std::array<double, 6>, 5> kPanelWeights1440 = {{
    {475, 1427, -798, 482, -173, 27},
    {448, 2064, 224, 224, -96, 16},
    {459, 1971, 1026, 1026, -189, 27},
    {448, 2048, 768, 2048, 448, 0},
    {475, 1875, 1250, 1250, 1875, 475},
}};

template <typename Scalar>
void require_consistent(const GridFunction<Scalar>& f) {
  if (f.values.size() != f.grid.size())
    throw DomainError("grid function size does not match its grid");
}

inline bool is_finite_value(double v) { return std::isfinite(v); }
inline bool is_finite_value(const Complex& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}
template <typename Derived>
bool is_finite_value(const Eigen::DenseBase<Derived>& v) {
  return v.derived().allFinite();
}

template <typename T>
T zero_like(const T& proto) {
  if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, Complex>)
    return T(0);
  else
    return T::Zero(proto.rows(), proto.cols());
}

// For the node b inside the panel starting at a (grid-step units), weights
// V_k = (n/b) int_0^(b-a) ((a+u)/b)^(n-1) L_k(u) du and shrink = (a/b)^n.
struct PowerWeights {
  std::array<WideReal, 6> w;
  WideReal shrink;
};

struct PowerWeightTable {
  int n_max;
  Index nodes;
  std::vector<PowerWeights> entries;  // index (n-1) * nodes + b

  const PowerWeights& at(int n, Index b) const { return entries[static_cast<size_t>((n - 1) * nodes + b)]; }
};

inline constexpr int kMaxPowerIndex = 40;

/// Cached table covering n <= kMaxPowerIndex and at least `nodes` grid nodes.
std::shared_ptr<const PowerWeightTable> power_weight_table(Index nodes);

template <typename Real, typename Scalar>
void power_average_kernel(const PowerWeightTable& t, int n, const Scalar* g, Scalar* Y, Index M) {
  Y[0] = g[0];
  for (Index a = 0; a + 5 < M; a += 5) {
    const Scalar ref = g[a];
    const Scalar prev = Y[a] - ref;
    for (int j = 1; j <= 5; ++j) {
      const PowerWeights& pw = t.at(n, a + j);
      Scalar acc = static_cast<Real>(pw.shrink) * prev;
      for (int k = 0; k < 6; ++k) acc += static_cast<Real>(pw.w[k]) * (g[a + k] - ref);
      Y[a + j] = ref + acc;
    }
  }
}

}  // namespace detail

/// F(x_i) = int_0^{x_i} f(t) dt at every node. On each six-node panel the degree-5
/// interpolant is integrated exactly up to each node; F(0) = 0.
template <typename Scalar>
GridFunction<Scalar> cumulative_integral(const GridFunction<Scalar>& f) {
  detail::require_consistent(f);
  const Grid& g = f.grid;
  const double h = g.step() / 1440.0;
  Vector<Scalar> F(g.size());
  F[0] = Scalar(0);
  for (Index p = 0; p < g.panels(); ++p) {
    const Index a = 5 * p;
    const Scalar base = F[a];
    for (int j = 1; j <= 5; ++j) {
      const auto& w = detail::kPanelWeights1440[j - 1];
      Scalar acc = Scalar(0);
      for (int k = 0; k < 6; ++k) acc += w[k] * f.values[a + k];
      F[a + j] = base + h * acc;
    }
  }
  return GridFunction<Scalar>(g, std::move(F));
}

/// Y(x) = n x^(-n) int_0^x s^(n-1) g(s) ds, with Y(0) = g(0).
///
/// Product integration: on each panel g is replaced by its degree-5 interpolant and
/// the weight s^(n-1) is integrated exactly, so the relative accuracy of Y does not
/// degrade as x -> 0 the way x^(-n) times a plain antiderivative would. Used to
/// build X^(n)/x^n. Constants are reproduced exactly.
template <typename Scalar>
GridFunction<Scalar> power_weighted_average(const GridFunction<Scalar>& g, int n) {
  detail::require_consistent(g);
  if (n < 1 || n > detail::kMaxPowerIndex)
    throw DomainError("power_weighted_average needs 1 <= n <= " + std::to_string(detail::kMaxPowerIndex));
  const auto table = detail::power_weight_table(g.grid.size());
  Vector<Scalar> Y(g.grid.size());
  detail::power_average_kernel<double>(*table, n, g.values.data(), Y.data(), g.grid.size());
  return GridFunction<Scalar>(g.grid, std::move(Y));
}

/// Same average in quad precision on raw node arrays of length M.
void power_weighted_average(const WideComplex* g, WideComplex* Y, Index M, int n);

/// Panel layout of a truncated integral over [0, Omega] with nominal step h:
/// `full` panels of width 5h followed, when Omega is not a multiple of 5h, by one
/// closing panel of width Omega - 5h*full.
struct TruncatedLayout {
  Index full = 0;
  double tail_step = 0.0;  // step of the closing panel, 0 if none
};

TruncatedLayout truncated_layout(double omega_max, double h);

namespace detail {

inline constexpr std::array<double, 6> kClosedSixPoint = {19, 75, 50, 50, 75, 19};

// Sum over panels [first, last) of the composite rule with step h, nodes at (5p+k) h.
template <typename F>
auto sum_panels(F& g, Index first, Index last, double h) -> std::invoke_result_t<F&, double> {
  using T = std::invoke_result_t<F&, double>;
  constexpr Index kChunk = 512;
  auto eval = [&](Index node) {
    const double w = static_cast<double>(node) * h;
    T v = g(w);
    if (!is_finite_value(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "non-finite integrand at omega = " << w;
      throw NumericalFault(msg.str());
    }
    return v;
  };
  std::vector<T> parts;
  T proto = eval(5 * first);
  for (Index c = first; c < last; c += kChunk) {
    const Index stop = std::min(last, c + kChunk);
    CompensatedSum<T> acc(zero_like(proto));
    T left = (c == first) ? proto : eval(5 * c);
    acc += T(19.0 * left);
    for (Index p = c; p < stop; ++p) {
      for (int k = 1; k <= 4; ++k) acc += T(kClosedSixPoint[k] * eval(5 * p + k));
      const double wr = (p + 1 == stop) ? 19.0 : 38.0;
      acc += T(wr * eval(5 * p + 5));
    }
    parts.push_back(T(acc.value() * (5.0 * h / 288.0)));
  }
  if (parts.empty()) return zero_like(proto);
  return pairwise_sum(std::move(parts));
}

template <typename F>
auto closing_panel(F& g, double start, double step) -> std::invoke_result_t<F&, double> {
  using T = std::invoke_result_t<F&, double>;
  T acc = zero_like(g(start));
  for (int k = 0; k <= 5; ++k) {
    const double w = (k == 5) ? start + 5.0 * step : start + k * step;
    T v = g(w);
    if (!is_finite_value(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "non-finite integrand at omega = " << w;
      throw NumericalFault(msg.str());
    }
    acc = T(acc + kClosedSixPoint[k] * v);
  }
  return T(acc * (5.0 * step / 288.0));
}

}  // namespace detail

/// Composite six-point closed Newton-Cotes values of int_0^{Omega_k} g(w) dw for an
/// ascending list of truncation limits, sharing all full panels. The last panel
/// before each Omega_k is shrunk so the rule stays closed.
template <typename F>
auto integrate_truncated_checkpoints(F&& g, const std::vector<double>& omega_max, double h)
    -> std::vector<std::invoke_result_t<F&, double>> {
  using T = std::invoke_result_t<F&, double>;
  if (!(h > 0.0)) throw DomainError("integration step must be positive");
  if (!std::is_sorted(omega_max.begin(), omega_max.end()))
    throw DomainError("truncation limits must be ascending");
  std::vector<T> out;
  out.reserve(omega_max.size());
  Index done = 0;
  std::vector<T> running;  // ordered partial sums over full panels
  for (double om : omega_max) {
    const TruncatedLayout layout = truncated_layout(om, h);
    if (layout.full > done) {
      running.push_back(detail::sum_panels(g, done, layout.full, h));
      done = layout.full;
    }
    T total = running.empty() ? detail::zero_like(g(0.0)) : pairwise_sum(running);
    if (layout.tail_step > 0.0)
      total = T(total + detail::closing_panel(g, 5.0 * h * static_cast<double>(layout.full),
                                              layout.tail_step));
    out.push_back(total);
  }
  return out;
}

/// Composite six-point closed Newton-Cotes approximation of int_0^Omega g(w) dw.
template <typename F>
auto integrate_truncated(F&& g, double omega_max, double h) -> std::invoke_result_t<F&, double> {
  return integrate_truncated_checkpoints(g, std::vector<double>{omega_max}, h).front();
}

}  // namespace nsbf
