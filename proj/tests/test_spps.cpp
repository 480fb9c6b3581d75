#include <cmath>

#include "doctest.h"
#include "nsbf/spps.hpp"
#include "support.hpp"

using namespace nsbf;

TEST_CASE("free seed") {
  const Grid g(1.0, 1001);
  const SeedSolution s = build_seed(square_barrier(0.0, g));
  CHECK(s.h == Complex(0, 1));
  for (Index i = 0; i < g.size(); i += 50) {
    CHECK(s.f0[i] == doctest::Approx(1.0));
    CHECK(std::abs(s.f1[i] - g.node(i)) < 1e-15);
    CHECK(std::abs(s.f[i] - Complex(1.0, g.node(i))) < 1e-15);
  }
}

TEST_CASE("barrier seed is cosh") {
  const SeedSolution s = build_seed(square_barrier(1.0, Grid(1.0, 1001)));
  CHECK(std::abs(s.f0[1000] - test::ref::cosh1) < 1e-10);
  CHECK(std::abs(s.f0prime[1000] - std::sinh(1.0)) < 1e-10);
  CHECK(std::abs(s.f1[1000] - std::sinh(1.0)) < 1e-10);
}

TEST_CASE("well with Neumann zero at the edge") {
  const Grid g(1.0, 1001);
  const SeedSolution s = build_seed(square_barrier(-M_PI * M_PI, g), SeedChoice::Complex);
  for (Index i = 0; i < g.size(); i += 40) CHECK(std::abs(s.f0[i] - std::cos(M_PI * g.node(i))) < 1e-10);
  CHECK(std::abs(s.f0prime[1000]) < 1e-8);
  // the real seed vanishes at x = 1/2
  CHECK_THROWS_AS(build_seed(square_barrier(-M_PI * M_PI, g), SeedChoice::Real), DomainError);
}

TEST_CASE("seed satisfies the Wronskian f0 f1' - f0' f1 = 1") {
  const SeedSolution s = build_seed(square_barrier(-4.0, Grid(1.0, 1001)));
  for (Index i = 0; i < 1001; i += 25) CHECK(std::abs(s.f0[i] * s.f1prime[i] - s.f0prime[i] * s.f1[i] - 1.0) < 1e-12);
}

TEST_CASE("formal powers with f = 1 are monomials") {
  const Grid g(1.0, 1001);
  const SeedSolution s = build_seed(square_barrier(0.0, g), SeedChoice::Real);
  const FormalPowers fp = build_formal_powers(s, 10);
  for (int k = 0; k <= 10; ++k) {
    for (Index i = 0; i < g.size(); i += 111) {
      const double xk = std::pow(g.node(i), k);
      CHECK(std::abs(fp.phi(k, i) - xk) < 1e-14);
      CHECK(std::abs(fp.psi(k, i) - xk) < 1e-14);
      CHECK(std::abs(fp.phi_scaled(k, i) - 1.0) < 1e-14);
    }
  }
}

TEST_CASE("phi_1 for f = 1 + ix equals x") {
  const Grid g(1.0, 1001);
  const FormalPowers fp = build_formal_powers(build_seed(square_barrier(0.0, g)), 3);
  for (Index i = 0; i < g.size(); i += 10) CHECK(std::abs(fp.phi(1, i) - g.node(i)) < 1e-14);
}

TEST_CASE("thirty formal powers on the barrier") {
  const auto& m = test::barrier_model(1.0);
  const FormalPowers fp = build_formal_powers(m.seed, 30);
  CHECK(fp.K == 30);
  CHECK(fp.phi.rows() == 31);
  CHECK(fp.phi.allFinite());
  CHECK(fp.psi.allFinite());
  CHECK_THROWS_AS(build_formal_powers(m.seed, 0), DomainError);
  CHECK_THROWS_AS(build_formal_powers(m.seed, detail::kMaxPowerIndex + 1), DomainError);
}
