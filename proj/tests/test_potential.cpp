#include <cmath>
#include <sstream>

#include "doctest.h"
#include "nsbf/potential.hpp"

using namespace nsbf;

TEST_CASE("square barrier samples and integral") {
  const Potential p = square_barrier(1.0, Grid(1.0, 1001));
  for (Index i = 0; i < 1001; ++i) CHECK(q_at(p, i) == 1.0);
  CHECK(p.total == 1.0);
  CHECK(Q_at(p, 0) == 0.0);
  CHECK(Q_at(p, 1000) == 1.0);
  CHECK_THROWS_AS(q_at(p, 1001), DomainError);
  CHECK_THROWS_AS(Q_at(p, -1), DomainError);
}

TEST_CASE("zero barrier") {
  const Potential p = square_barrier(0.0, Grid(1.0, 1001));
  CHECK(p.samples.values.cwiseAbs().maxCoeff() == 0.0);
  CHECK(p.cumulative.values.cwiseAbs().maxCoeff() == 0.0);
  CHECK(p.total == 0.0);
}

TEST_CASE("sampled q(x) = x integrates to 1/2") {
  PotentialTable t;
  for (int k = 0; k <= 200; ++k) {
    t.x.push_back(k / 200.0);
    t.q.push_back(k / 200.0);
  }
  const Grid g(1.0, 1001);
  const Potential p = make_potential({PotentialKind::Sampled, 0.0, t}, g);
  CHECK(std::abs(p.total - 0.5) < 1e-12);
  for (Index i = 0; i < g.size(); i += 37) CHECK(std::abs(q_at(p, i) - g.node(i)) < 1e-14);
}

TEST_CASE("sampled smooth potential is interpolated to high order") {
  PotentialTable t;
  for (int k = 0; k <= 100; ++k) {
    t.x.push_back(k / 100.0);
    t.q.push_back(std::sin(3.0 * k / 100.0));
  }
  const Grid g(1.0, 1001);
  const Potential p = make_potential({PotentialKind::Sampled, 0.0, t}, g);
  for (Index i = 0; i < g.size(); ++i) CHECK(std::abs(q_at(p, i) - std::sin(3.0 * g.node(i))) < 1e-8);
  CHECK(std::abs(p.total - (1.0 - std::cos(3.0)) / 3.0) < 1e-9);
}

TEST_CASE("table validation") {
  const Grid g(1.0, 11);
  CHECK_THROWS_AS(make_potential({PotentialKind::Sampled, 0.0, {{0.0, 0.5}, {1.0, 1.0}}}, g), DomainError);
  CHECK_THROWS_AS(make_potential({PotentialKind::Sampled, 0.0, {{0.0, 0.5, 0.4, 1.0}, {1, 1, 1, 1}}}, g),
                  DomainError);
  CHECK_THROWS_AS(make_potential({PotentialKind::Sampled, 0.0, {{0.0, 1.0}, {1.0, NAN}}}, g), DomainError);
  CHECK_THROWS_AS(square_barrier(INFINITY, g), DomainError);
}

TEST_CASE("csv parsing") {
  std::istringstream good("x,q\n0,1\n0.5,2\n1,3\n");
  const PotentialTable t = parse_potential_csv(good);
  REQUIRE(t.x.size() == 3);
  CHECK(t.q[2] == 3.0);

  std::istringstream bad_header("t,q\n0,1\n");
  CHECK_THROWS_AS(parse_potential_csv(bad_header), DomainError);
  std::istringstream bad_value("x,q\n0,abc\n");
  CHECK_THROWS_AS(parse_potential_csv(bad_value), DomainError);
  std::istringstream complex_value("x,q\n0,1+2i\n");
  CHECK_THROWS_AS(parse_potential_csv(complex_value), DomainError);
  CHECK_THROWS_AS(read_potential_csv("/nonexistent/q.csv"), DomainError);
}
