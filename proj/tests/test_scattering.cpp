#include <cmath>
#include <vector>

#include "doctest.h"
#include "nsbf/scattering.hpp"
#include "support.hpp"

using namespace nsbf;

namespace {
const Complex I(0.0, 1.0);
}

TEST_CASE("Jost solution y2 on the barrier") {
  const auto& m = test::barrier_model(1.0);
  const double alpha = std::sqrt(3.0);
  for (Index i : {0, 100, 500, 1000}) {
    const double x = m.model.grid.node(i);
    const JostPair p = jost_pair(m.model, i, 2.0);
    CHECK(std::abs(p.y2 - (std::cos(alpha * x) - 2.0 * I / alpha * std::sin(alpha * x))) < 1e-12);
    const OracleSolutions r = oracle_solutions(m.barrier, x, 2.0, m.model.h);
    CHECK(std::abs(p.y1 - r.y1) < 1e-12);
    CHECK(std::abs(p.dy1 - r.dy1) < 1e-10);
  }
  const JostPair at0 = jost_pair(m.model, 0, 2.0);
  CHECK(at0.y2 == Complex(1.0));
  CHECK(at0.dy2 == Complex(0.0, -2.0));
  CHECK_THROWS_AS(jost_pair(m.model, 0, 0.0), DomainError);
  CHECK_THROWS_AS(jost_pair(m.model, 1001, 1.0), DomainError);
}

TEST_CASE("y2 at imaginary frequency is real") {
  const auto& m = test::barrier_model(-4.0);
  for (Index i = 0; i < 1001; i += 50) CHECK(std::abs(jost_pair(m.model, i, Complex(0, 1.3)).y2.imag()) < 1e-9);
}

TEST_CASE("transmission coefficient against reference values") {
  const auto& m = test::barrier_model(1.0);
  CHECK(std::abs(transmission_a(m.model, 0.5) - test::ref::a_05) < 1e-12);
  CHECK(std::abs(transmission_a(m.model, 1.0) - test::ref::a_1) < 1e-12);
  CHECK(std::abs(transmission_a(m.model, 2.0) - test::ref::a_2) < 1e-12);
  CHECK(std::abs(transmission_a(m.model, 10.0) - test::ref::a_10) < 1e-12);
  CHECK(std::abs(transmission_a(m.model, 100.0) - test::ref::a_100) < 1e-12);
  CHECK(std::abs(test::ref::a_1 + std::exp(I) * (1.0 - I / 2.0)) < 1e-15);
  CHECK_THROWS_AS(transmission_a(m.model, 0.0), DomainError);
}

TEST_CASE("free potential: a = -1, b = 0") {
  const auto& m = test::barrier_model(0.0);
  for (double w : {0.1, 1.0, 7.0, 500.0}) {
    CHECK(std::abs(transmission_a(m.model, w) + 1.0) < 1e-13);
    CHECK(std::abs(reflection_b(m.model, w)) < 1e-13);
  }
}

TEST_CASE("reflection coefficient: unitarity and decay") {
  const auto& m = test::barrier_model(1.0);
  const Complex a = oracle_a(m.barrier, 2.0);
  const Complex b = reflection_b(m.model, 2.0);
  CHECK(std::abs(std::norm(a) - std::norm(b) - 1.0) < 1e-8);
  CHECK(std::abs(b - oracle_b(m.barrier, 2.0)) < 1e-12);
  CHECK(std::abs(reflection_b(m.model, 1e3)) < 1e-3);
  // |w b(w)| -> 0 and | |a| - 1 | = O(1/w)
  const double wb1 = 1e2 * std::abs(reflection_b(m.model, 1e2)), wb2 = 1e3 * std::abs(reflection_b(m.model, 1e3));
  CHECK(wb2 < wb1);
  for (double w : {1e2, 1e3, 1e4}) {
    CHECK(w * std::abs(std::abs(transmission_a(m.model, w)) - 1.0) < 1.0);
    // signed form: -a(w) = 1 + O(1/w) in the convention a == -1 for q == 0
    CHECK(w * std::abs(-transmission_a(m.model, w) - 1.0) < 1.0);
  }
}

TEST_CASE("scattering sweep") {
  const auto& m = test::barrier_model(1.0);
  const ScatteringData sd = scattering_sweep(m.model, {0.0, 0.5, 1.0, 2.0});
  CHECK(std::isnan(sd.a[0].real()));
  CHECK(std::isnan(sd.unitarity_defect[0]));
  for (std::size_t k = 1; k < 4; ++k) CHECK(sd.unitarity_defect[k] < 1e-12);
  CHECK(sd.a[2] == transmission_a(m.model, 1.0));
  CHECK_THROWS_AS(scattering_sweep(m.model, {-1.0}), DomainError);
}

TEST_CASE("behaviour of a near zero") {
  SUBCASE("free") {
    const NearZero nz = test::barrier_model(0.0).near_zero;
    CHECK(std::abs(nz.pole) < 1e-15);
    CHECK(std::abs(nz.constant + 1.0) < 1e-13);
  }
  SUBCASE("barrier: pole sinh(1)/(2i)") {
    const auto& m = test::barrier_model(1.0);
    CHECK_FALSE(m.near_zero.neumann);
    CHECK(std::abs(m.near_zero.pole - std::sinh(1.0) / (2.0 * I)) < 1e-12);
    const double w = 1e-4;
    CHECK(std::abs(transmission_a(m.model, w) - (m.near_zero.pole / w + m.near_zero.constant)) < 1e-3);
  }
  SUBCASE("Neumann well: no pole, constant 1") {
    const auto& m = test::barrier_model(-M_PI * M_PI);
    CHECK(m.near_zero.neumann);
    CHECK(m.near_zero.pole == Complex(0.0));
    CHECK(std::abs(m.near_zero.constant - 1.0) < 1e-8);
    CHECK(std::abs(transmission_a(m.model, 1e-3) - 1.0) < 1e-2);
  }
}

TEST_CASE("u1, u2 at zero frequency") {
  SUBCASE("pole case vanishes") {
    const auto& m = test::barrier_model(1.0);
    const UPair u = u_pair(m.model, m.near_zero, 300, 0.0);
    CHECK(u.u1 == Complex(0.0));
    CHECK(u.u2 == Complex(0.0));
  }
  SUBCASE("Neumann case") {
    const auto& m = test::barrier_model(-M_PI * M_PI);
    const double c = std::sqrt(2.0 / M_PI) / 2.0;
    for (Index i = 0; i < 1001; i += 100) {
      const double x = m.model.grid.node(i);
      const UPair u = u_pair(m.model, m.near_zero, i, 0.0);
      CHECK(std::abs(u.u1 + c * std::cos(M_PI * x)) < 1e-8);
      CHECK(std::abs(u.u2 - c * std::cos(M_PI * x)) < 1e-8);
    }
  }
}

TEST_CASE("u_pair_on_grid matches node-wise values") {
  const auto& m = test::barrier_model(1.0);
  Eigen::VectorXcd u1(1001), u2(1001);
  for (double w : {0.0, 0.7, 40.0}) {
    u_pair_on_grid(m.model, m.near_zero, w, u1, u2);
    for (Index i = 0; i < 1001; i += 125) {
      const UPair u = u_pair(m.model, m.near_zero, i, w);
      CHECK(std::abs(u1[i] - u.u1) < 1e-13);
      CHECK(std::abs(u2[i] - u.u2) < 1e-13);
    }
  }
}

TEST_CASE("bound states") {
  SUBCASE("barrier has none") {
    const auto& m = test::barrier_model(1.0);
    CHECK(find_bound_states(m.model, m.potential).empty());
  }
  SUBCASE("C = -4 has one") {
    const auto& m = test::barrier_model(-4.0);
    const auto states = find_bound_states(m.model, m.potential);
    REQUIRE(states.size() == 1);
    CHECK(std::abs(states[0].kappa - test::ref::kappa_well) < 1e-8);
    CHECK(states[0].lambda == doctest::Approx(-states[0].kappa * states[0].kappa));
    CHECK(states[0].norm_defect < 1e-8);
    CHECK(states[0].v[0] > 0.0);
    CHECK(std::abs(states[0].v[0] - states[0].left_amplitude) < 1e-14);
    CHECK(std::abs(states[0].v[1000] - states[0].right_amplitude) < 1e-14);
  }
  SUBCASE("count matches the closed form for deeper wells") {
    for (double C : {-M_PI * M_PI, -30.0}) {
      const auto& m = test::barrier_model(C);
      const auto states = find_bound_states(m.model, m.potential);
      const auto expected = oracle_bound_states(m.barrier);
      INFO("C=" << C);
      REQUIRE(states.size() == expected.size());
      for (std::size_t j = 0; j < states.size(); ++j) CHECK(std::abs(states[j].kappa - expected[j]) < 1e-8);
    }
  }
  SUBCASE("bad options") {
    const auto& m = test::barrier_model(-4.0);
    BoundStateOptions o;
    o.scan_points = 1;
    CHECK_THROWS_AS(find_bound_states(m.model, m.potential, o), DomainError);
  }
}
