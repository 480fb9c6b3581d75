#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "nsbf/bessel.hpp"
#include "nsbf/nsbf.hpp"
#include "support.hpp"

using namespace nsbf;

TEST_CASE("Legendre coefficients") {
  const LegendreCoeffs l = legendre_coeffs(30);
  CHECK(l(0, 0) == 1.0);
  CHECK(l(1, 1) == 1.0);
  CHECK(l(0, 2) == -0.5);
  CHECK(l(2, 2) == 1.5);
  for (int n = 0; n <= 30; ++n) {
    WideReal sum = 0;
    for (int k = 0; k <= n; ++k) sum += l.wide_at(k, n);
    CHECK(std::abs(static_cast<double>(sum) - 1.0) < 1e-10);
  }
  CHECK_THROWS_AS(legendre_coeffs(61), DomainError);
}

TEST_CASE("spherical Bessel reference values") {
  struct Case {
    int n;
    double z, value;
  };
  const std::array<Case, 10> cases = {{{0, 1.0, 0.84147098480789650665},
                                       {1, 1.0, 0.30116867893975678925},
                                       {5, 0.3, 2.3295825567290273037e-7},
                                       {12, 7.5, 0.0013567114231533771579},
                                       {25, 3.0, 2.6112633829308916146e-22},
                                       {25, 30.0, 0.030615186663678257339},
                                       {3, 1e4, -9.5197185680696087694e-5},
                                       {25, 1e4, 9.4172336069934833636e-5},
                                       {10, 3.14159, 5.4855022793974938929e-6},
                                       {30, 0.75, 9.9759488650584395616e-47}}};
  for (const auto& c : cases) {
    INFO("n=" << c.n << " z=" << c.z);
    CHECK(std::abs(spherical_bessel_j(c.n, c.z) / c.value - 1.0) < 1e-12);
  }
  CHECK(spherical_bessel_j(0, 0.0) == 1.0);
  CHECK(spherical_bessel_j(2, 0.0) == 0.0);
}

TEST_CASE("spherical Bessel complex arguments") {
  auto rel = [](Complex a, Complex b) { return std::abs(a - b) / std::abs(b); };
  CHECK(rel(spherical_bessel_j(7, Complex(10, 10)), {174.30840640508299841, 62.261651605246767489}) < 1e-12);
  CHECK(rel(spherical_bessel_j(20, Complex(0, 3)), {2.9516512905661500837e-16, 0}) < 1e-12);
  CHECK(rel(spherical_bessel_j(2, Complex(0.2, 0.1)), {0.0020033178677043680323, 0.0026552439220719188966}) < 1e-12);
  CHECK(rel(spherical_bessel_j(25, Complex(40, 0.5)), {0.0076874304457244584394, -0.011001646710934510613}) < 1e-12);
}

TEST_CASE("Bessel sequence with supplied trig matches the plain sequence") {
  for (double z : {0.2, 3.0, 17.0, 250.0, 9999.5}) {
    std::vector<double> a(26), b(26);
    spherical_bessel_j_sequence<double>(25, z, a);
    spherical_bessel_j_sequence(25, z, std::sin(z), std::cos(z), b);
    for (int n = 0; n <= 25; ++n) CHECK(a[n] == b[n]);
  }
  std::vector<double> small(3);
  CHECK_THROWS_AS(spherical_bessel_j_sequence<double>(5, 1.0, small), DomainError);
}

TEST_CASE("free potential with the real seed gives zero coefficients") {
  const auto& m = test::barrier_model(0.0, 1.0, SeedChoice::Real);
  CHECK(m.model.beta.cwiseAbs().maxCoeff() < 1e-13);
  CHECK(m.model.gamma.cwiseAbs().maxCoeff() < 1e-13);
  const Solutions v = eval_solutions(m.model, 700, 3.0);
  CHECK(std::abs(v.c - std::cos(2.1)) < 1e-14);
  CHECK(std::abs(v.s - std::sin(2.1)) < 1e-14);
}

TEST_CASE("barrier model: c_N and s_N against the closed forms") {
  const auto& m = test::barrier_model(1.0, 1.0, SeedChoice::Real);
  CHECK(m.model.beta.allFinite());
  CHECK(m.model.wronskian_defect <= 1e-6);
  const Solutions v = eval_solutions(m.model, 1000, 10.0);
  CHECK(std::abs(v.c - test::ref::cos_sqrt99) < 1e-12);
  for (double w : {0.0, 0.5, 1.0, 30.0, 1e4}) {
    for (Index i : {0, 1, 333, 1000}) {
      const OracleSolutions r = oracle_solutions(m.barrier, m.model.grid.node(i), w, 0.0);
      const Solutions s = eval_solutions(m.model, i, w);
      CHECK(std::abs(s.c - r.c) < 1e-12);
      CHECK(std::abs(s.s - r.s) < 1e-12);
      CHECK(std::abs(s.dc - r.dc) < 1e-9 * std::max(1.0, w));
      CHECK(std::abs(s.ds - r.ds) < 1e-9 * std::max(1.0, w));
    }
  }
}

TEST_CASE("complex seed: solutions at complex frequency") {
  const auto& m = test::barrier_model(1.0);
  for (Complex w : {Complex(2, 0), Complex(0, 1.5), Complex(3, -0.5)}) {
    for (Index i : {250, 1000}) {
      const OracleSolutions r = oracle_solutions(m.barrier, m.model.grid.node(i), w, m.model.h);
      const Solutions s = eval_solutions(m.model, i, w);
      CHECK(std::abs(s.c - r.c) < 1e-11);
      CHECK(std::abs(s.s - r.s) < 1e-11);
    }
  }
}

TEST_CASE("eval_on_grid agrees with node-wise evaluation") {
  const auto& m = test::barrier_model(1.0);
  Eigen::VectorXcd c(1001), s(1001);
  Eigen::VectorXd cw(1001), sw(1001);
  for (double w : {0.0, 0.37, 12.0, 4321.0}) {
    eval_on_grid(m.model, w, c, s, &cw, &sw);
    for (Index i = 0; i < 1001; i += 97) {
      const Solutions v = eval_solutions(m.model, i, w);
      CHECK(std::abs(c[i] - v.c) < 1e-13);
      CHECK(std::abs(s[i] - v.s) < 1e-13);
      CHECK(std::abs(cw[i] - std::cos(w * m.model.grid.node(i))) < 1e-12);
    }
  }
  Eigen::VectorXcd wrong(10);
  CHECK_THROWS_AS(eval_on_grid(m.model, 1.0, wrong, s), DomainError);
}

TEST_CASE("Wronskian defect") {
  CHECK(wronskian_defect(test::barrier_model(0.0).model, {0.5, 10.0, 1e3}) < 1e-13);
  const double d12 = wronskian_defect(test::barrier_model(1.0).model, {0.5, 1.0, 10.0, 100.0, 1e3});
  CHECK(d12 < 1e-12);
  // a lower truncation order on a smooth potential is no better
  const double d4 = wronskian_defect(test::barrier_model(1.0, 1.0, SeedChoice::Complex, 1001, 4).model,
                                     {0.5, 1.0, 10.0, 100.0, 1e3});
  CHECK(d12 <= d4 * (1.0 + 1e-9) + 1e-14);
  CHECK_THROWS_AS(wronskian_defect(test::barrier_model(1.0).model, {0.0}), DomainError);
}

TEST_CASE("truncation order limits") {
  const auto& m = test::barrier_model(1.0);
  const FormalPowers fp = build_formal_powers(m.seed, 10);
  CHECK_THROWS_AS(build_nsbf(fp, m.seed, m.potential, 5), DomainError);
  CHECK_THROWS_AS(build_nsbf(fp, m.seed, m.potential, kMaxTruncationOrder + 1), DomainError);
}

TEST_CASE("regression baseline of the build Wronskian defect") {
  // recorded value 3.78e-14 for C=1, d=1, M=1001, K=30, N=12, complex seed
  const double defect = test::barrier_model(1.0).model.wronskian_defect;
  CHECK(defect > 0.0);
  CHECK(defect < 1.2e-13);
}
