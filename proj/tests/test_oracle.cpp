#include <cmath>

#include "doctest.h"
#include "nsbf/oracle.hpp"
#include "support.hpp"

using namespace nsbf;

TEST_CASE("closed-form solutions of the barrier") {
  const BarrierSpec b{1.0, 1.0};
  const OracleSolutions r = oracle_solutions(b, 1.0, 2.0);
  const double alpha = std::sqrt(3.0);
  CHECK(std::abs(r.c - std::cos(alpha)) < 1e-15);
  CHECK(std::abs(r.s - 2.0 / alpha * std::sin(alpha)) < 1e-15);
  // alpha^2 = -2 at w = i: cosh form, real
  const OracleSolutions ri = oracle_solutions(b, 1.0, Complex(0, 1));
  CHECK(std::abs(ri.c - std::cosh(std::sqrt(2.0))) < 1e-14);
  CHECK(std::abs(ri.c.imag()) == 0.0);
  // removable point alpha = 0
  const OracleSolutions r1 = oracle_solutions(b, 0.5, 1.0);
  CHECK(std::abs(r1.c - 1.0) < 1e-15);
  CHECK(std::abs(r1.s - 0.5) < 1e-15);
}

TEST_CASE("oracle a and b") {
  const BarrierSpec b{1.0, 1.0};
  CHECK(std::abs(oracle_a(b, 1.0) - test::ref::a_1) < 1e-15);
  CHECK(std::abs(oracle_a(b, 0.5) - test::ref::a_05) < 1e-15);
  CHECK(std::abs(oracle_a(b, 100.0) - test::ref::a_100) < 1e-14);
  const BarrierSpec free{0.0, 1.0};
  CHECK(std::abs(oracle_a(free, 3.0) + 1.0) < 1e-15);
  CHECK(std::abs(oracle_b(free, 3.0)) < 1e-15);
  CHECK_THROWS_AS(oracle_a(b, 0.0), DomainError);
  // C = -pi^2: no pole at the origin
  const BarrierSpec well{-M_PI * M_PI, 1.0};
  CHECK(std::abs(oracle_a(well, 1e-6)) < 2.0);
}

TEST_CASE("oracle Green function") {
  CHECK(std::abs(oracle_green({0.0, 1.0}, 0.3, 0.7, -4.0) - test::ref::free_G) < 1e-16);
  CHECK(std::abs(oracle_green({1.0, 1.0}, 0.97, 0.069, -4.0) - test::ref::G_far) < 1e-16);
  CHECK(std::abs(oracle_green({1.0, 1.0}, 0.97, 0.969, -4.0) - test::ref::G_near) < 1e-15);
  const Complex lam = 4.0 * std::exp(Complex(0, 2 * M_PI / 3));
  CHECK(std::abs(oracle_green({1.0, 1.0}, 0.97, 0.069, lam) - test::ref::G_complex) < 1e-15);
  CHECK_THROWS_AS(oracle_green({1.0, 1.0}, 0.5, 0.5, 2.0), DomainError);
}

TEST_CASE("oracle bound states") {
  CHECK(oracle_bound_states({1.0, 1.0}).empty());
  CHECK(oracle_bound_states({0.0, 1.0}).empty());
  const auto k = oracle_bound_states({-4.0, 1.0});
  REQUIRE(k.size() == 1);
  CHECK(std::abs(k[0] - test::ref::kappa_well) < 1e-13);
  CHECK(oracle_bound_states({-M_PI * M_PI, 1.0}).size() == 1);
  CHECK(oracle_bound_states({-100.0, 1.0}).size() == 4);
}
