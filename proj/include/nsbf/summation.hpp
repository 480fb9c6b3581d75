#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace nsbf {

// Neumaier's variant of Kahan summation. The compensation term is kept
// separately and folded in on read.
inline void neumaier_add(double& sum, double& comp, double value) {
  const double t = sum + value;
  if (std::abs(sum) >= std::abs(value))
    comp += (sum - t) + value;
  else
    comp += (value - t) + sum;
  sum = t;
}

inline void neumaier_add(std::complex<double>& sum, std::complex<double>& comp,
                         std::complex<double> value) {
  double sr = sum.real(), si = sum.imag(), cr = comp.real(), ci = comp.imag();
  neumaier_add(sr, cr, value.real());
  neumaier_add(si, ci, value.imag());
  sum = {sr, si};
  comp = {cr, ci};
}

template <typename Derived, typename OtherDerived>
void neumaier_add(Eigen::DenseBase<Derived>& sum, Eigen::DenseBase<Derived>& comp,
                  const Eigen::DenseBase<OtherDerived>& value) {
  for (Eigen::Index i = 0; i < sum.size(); ++i) {
    auto s = sum.derived().coeff(i);
    auto c = comp.derived().coeff(i);
    neumaier_add(s, c, value.derived().coeff(i));
    sum.derived().coeffRef(i) = s;
    comp.derived().coeffRef(i) = c;
  }
}

/// Running compensated sum. T is double, std::complex<double> or a fixed/dynamic Eigen array.
template <typename T>
class CompensatedSum {
 public:
  explicit CompensatedSum(T zero) : sum_(zero), comp_(zero) {}

  CompensatedSum& operator+=(const T& value) {
    neumaier_add(sum_, comp_, value);
    return *this;
  }

  T value() const { return sum_ + comp_; }

 private:
  T sum_;
  T comp_;
};

/// Compensated sum of a sequence of scalars.
template <typename Scalar>
Scalar compensated_sum(std::span<const Scalar> terms) {
  CompensatedSum<Scalar> acc(Scalar(0));
  for (const auto& t : terms) acc += t;
  return acc.value();
}

/// Pairwise reduction in a fixed tree (left-to-right halving), independent of how the
/// partial values were produced.
template <typename T>
T pairwise_sum(std::vector<T> parts) {
  if (parts.empty()) return T{};
  while (parts.size() > 1) {
    std::vector<T> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2 == 1) next.push_back(parts.back());
    parts = std::move(next);
  }
  return parts.front();
}

}  // namespace nsbf
