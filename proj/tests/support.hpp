#pragma once

// Shared fixtures: models are expensive, so each (C, d, seed) is built once per binary.

#include <map>
#include <memory>
#include <tuple>

#include "nsbf/green.hpp"
#include "nsbf/oracle.hpp"

namespace nsbf::test {

struct Model {
  Potential potential;
  SeedSolution seed;
  NsbfModel model;
  NearZero near_zero;
  BarrierSpec barrier;
};

inline const Model& barrier_model(double C, double d = 1.0, SeedChoice choice = SeedChoice::Complex,
                                  Index M = 1001, int N = 12) {
  static std::map<std::tuple<double, double, int, Index, int>, std::unique_ptr<Model>> cache;
  auto& slot = cache[{C, d, static_cast<int>(choice), M, N}];
  if (!slot) {
    Potential p = square_barrier(C, Grid(d, M));
    SeedSolution seed = build_seed(p, choice);
    FormalPowers fp = build_formal_powers(seed, 30);
    NsbfModel m = build_nsbf(fp, seed, p, N);
    NearZero nz = a_near_zero(seed);
    slot.reset(new Model{std::move(p), std::move(seed), std::move(m), nz, BarrierSpec{C, d}});
  }
  return *slot;
}

// mpmath values at 50 digits, see tests/oracles/reference_values.py.
namespace ref {
inline constexpr double kappa_well = 1.3472240583664296307;  // C=-4, d=1
inline constexpr double G_far = 0.03255479662296644981;      // C=1, d=1, (0.97, 0.069), lambda=-4
inline constexpr double G_near = 0.23415905569781490198;     // (0.97, 0.969)
inline const Complex G_complex{0.010918170965162851265, 0.041072789858605045932};  // lambda = 4 e^{2 pi i/3}
inline const Complex a_05{-0.95694472210526443213, -1.1664654983976867162};
inline const Complex a_1{-0.96103779827208797073, -0.57131983187382664795};
inline const Complex a_2{-0.9736166588300701895, -0.26901093832517247081};
inline const Complex a_10{-0.9987474170438614208, -0.050099329936276250949};
inline const Complex a_100{-0.99998749972427031793, -0.0050001047218870814522};
inline constexpr double free_G = 0.11233224102930539287;  // e^{-0.8}/4
inline constexpr double cosh1 = 1.5430806348152437785;
inline constexpr double cos_sqrt99 = -0.86527561550689621866;
inline constexpr double half_atan_5000 = 0.78529816339878164292;
}  // namespace ref

}  // namespace nsbf::test
