#include <doctest.h>

#include <cmath>
#include <random>

#include "cliffspec/operator_zoo.hpp"
#include "test_support.hpp"

using namespace cliffspec;
using namespace testsupport;

TEST_CASE("build two_projection: z = 1 collapses to (sigma_z, sigma_z)") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::two_projection;
  spec.z = 1.0;
  const HermitianTuple t = build(spec);
  CHECK((t.op(0) - pauli_z()).max_abs() == 0.0);
  CHECK((t.op(1) - pauli_z()).max_abs() == 0.0);
}

TEST_CASE("build hemisphere: corner entry and tridiagonal structure") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::hemisphere;
  spec.b = 1.0;
  spec.n = 4;
  const HermitianTuple t = build(spec);
  CHECK(t.op(2)(0, 0) == Complex(1.0));
  for (std::size_t k = 1; k < 4; ++k) CHECK(t.op(2)(k, k) == Complex(0.0));
  CHECK(t.op(0)(0, 1) == Complex(0.5));
  CHECK(t.op(1)(0, 1) == Complex(0.0, -0.5));
  CHECK(t.op(1)(1, 0) == Complex(0.0, 0.5));
  CHECK(half_bandwidth(t.op(0)) == 1);
}

TEST_CASE("hemisphere: A1 - iA2 is the truncated forward shift") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::hemisphere;
  spec.b = 0.7;
  spec.n = 6;
  const HermitianTuple t = build(spec);
  ComplexMatrix X = t.op(1);
  X *= Complex(0.0, -1.0);
  X += t.op(0);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(std::abs(X(i, j) - ((i == j + 1) ? Complex(1.0) : Complex(0.0))) <= 1e-15);
}

TEST_CASE("build commuting_points gives coordinate diagonals") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::commuting_points;
  spec.points = {{0.0, 0.0}, {1.0, 2.0}};
  const HermitianTuple t = build(spec);
  CHECK(t.op(0)(0, 0) == Complex(0.0));
  CHECK(t.op(0)(1, 1) == Complex(1.0));
  CHECK(t.op(1)(0, 0) == Complex(0.0));
  CHECK(t.op(1)(1, 1) == Complex(2.0));
}

TEST_CASE("build position_momentum: Hermitian, grid endpoints, interior commutator rows") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::position_momentum;
  spec.n = 64;
  spec.box = 8.0;
  const HermitianTuple t = build(spec);
  const ComplexMatrix &P = t.op(0), &Q = t.op(1);
  CHECK(P.hermitian_deviation() == 0.0);
  CHECK(Q(0, 0).real() == doctest::Approx(-8.0));
  CHECK(Q(63, 63).real() == doctest::Approx(8.0));

  // [P,Q] + iI annihilates affine grid functions on interior rows
  ComplexMatrix C = multiply(P, Q);
  C -= multiply(Q, P);
  for (std::size_t i = 0; i < 64; ++i) C(i, i) += Complex(0.0, 1.0);
  for (const auto& coeff : {std::pair<double, double>{1.0, 0.0}, {0.25, 1.0}}) {
    for (std::size_t i = 1; i + 1 < 64; ++i) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < 64; ++j)
        acc += C(i, j) * (coeff.first + coeff.second * Q(j, j).real());
      CHECK(std::abs(acc) <= 1e-12);
    }
  }
}

TEST_CASE("zoo validation rejects bad parameters") {
  ZooSpec s1;
  s1.kind = ZooSpec::Kind::two_projection;
  s1.z = 1.5;
  CHECK_THROWS_AS(build(s1), std::invalid_argument);

  ZooSpec s2;
  s2.kind = ZooSpec::Kind::hemisphere;
  s2.n = 2;
  CHECK_THROWS_AS(build(s2), std::invalid_argument);

  ZooSpec s3;
  s3.kind = ZooSpec::Kind::position_momentum;
  s3.box = -1.0;
  CHECK_THROWS_AS(build(s3), std::invalid_argument);

  ZooSpec s4;
  s4.kind = ZooSpec::Kind::universal_pair;
  CHECK_THROWS_AS(build(s4), std::invalid_argument);
}

TEST_CASE("closed mu^Q for (U, V_z): pinned values") {
  CHECK(mu_q_two_projection_closed(1.0, 1.0, 1.0) == doctest::Approx(0.0));
  for (double z : {-1.0, -0.3, 0.0, 0.8, 1.0})
    CHECK(mu_q_two_projection_closed(0.0, 0.0, z) == doctest::Approx(std::sqrt(2.0)));
  for (double x : {-2.0, -0.5, 0.3, 1.7})
    for (double z : {-0.9, 0.1, 1.0}) {
      const double expect = std::sqrt(x * x + 2.0 - 2.0 * std::abs(x));
      CHECK(mu_q_two_projection_closed(x, 0.0, z) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("closed mu^C for (U, V_z): pinned values") {
  CHECK(mu_c_two_projection_closed(0.0, 0.0, 0.0) == doctest::Approx(0.0));
  CHECK(mu_c_two_projection_closed(0.0, 0.0, 1.0) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("closed pair formulas match the numerical 2x2 pair") {
  std::mt19937_64 rng(20240802);
  std::uniform_real_distribution<double> ux(-3.0, 3.0), uz(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = ux(rng), y = ux(rng), z = uz(rng);
    ZooSpec spec;
    spec.kind = ZooSpec::Kind::two_projection;
    spec.z = z;
    const HermitianTuple t = build(spec);
    const double mc = clifford_pseudospectrum(t, {x, y});
    const double mq = quadratic_pseudospectrum(t, {x, y});
    CHECK(std::abs(mc - mu_c_two_projection_closed(x, y, z)) <= 1e-10);
    CHECK(std::abs(mq - mu_q_two_projection_closed(x, y, z)) <= 1e-10);
  }
}

TEST_CASE("universal closed forms: corners, cross, origin") {
  CHECK(mu_q_universal_closed(1.0, -1.0) == doctest::Approx(0.0));
  CHECK(mu_q_universal_closed(0.0, 0.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(mu_q_universal_closed(2.0, 1.0) == doctest::Approx(1.0));

  for (double t : {-1.0, -0.6, 0.0, 0.4, 1.0}) {
    CHECK(mu_c_universal_closed(t, t) == doctest::Approx(0.0));
    CHECK(mu_c_universal_closed(t, -t) == doctest::Approx(0.0));
  }
  CHECK(mu_c_universal_closed(1.0, -1.0) == doctest::Approx(0.0));
  CHECK(mu_c_universal_closed(0.0, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("universal fiber minimization: interior minimizer, boundary pinning, coarse grid") {
  const auto fine = uniform_z_grid(1e-3);

  // interior minimizer z0 = xy
  const auto v1 = universal_pair_pseudospectra(0.5, 0.5, fine);
  CHECK(v1.mu_c <= 5e-4);
  CHECK(v1.mu_c >= 0.0);

  // outside |xy| <= 1 the minimizer pins to the boundary and mu_c = mu_q
  const auto v2 = universal_pair_pseudospectra(2.0, 2.0, fine);
  CHECK(v2.mu_c == doctest::Approx(v2.mu_q).epsilon(1e-9));
  CHECK(v2.mu_q == doctest::Approx(mu_q_universal_closed(2.0, 2.0)).epsilon(1e-6));

  // coarse grid containing z = 1 nails the corner exactly
  const auto v3 = universal_pair_pseudospectra(1.0, 1.0, std::vector<double>{-1.0, 0.0, 1.0});
  CHECK(v3.mu_q == doctest::Approx(0.0));

  CHECK_THROWS_AS(universal_pair_pseudospectra(0.0, 0.0, {}), std::invalid_argument);
}

TEST_CASE("universal fiber minimization converges to the closed forms") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (double h : {1e-2, 1e-3}) {
    const auto grid = uniform_z_grid(h);
    double worst = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
      const double x = u(rng), y = u(rng);
      const auto v = universal_pair_pseudospectra(x, y, grid);
      worst = std::max(worst, std::abs(v.mu_q - mu_q_universal_closed(x, y)));
      worst = std::max(worst, std::abs(v.mu_c - mu_c_universal_closed(x, y)));
    }
    CHECK(worst <= 5.0 * h);
  }
}

TEST_CASE("zoo spec json round trip") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::hemisphere;
  spec.b = 2.05;
  spec.n = 48;
  const ZooSpec back = zoo_from_json(zoo_to_json(spec));
  CHECK(back.kind == ZooSpec::Kind::hemisphere);
  CHECK(back.b == 2.05);
  CHECK(back.n == 48);

  ZooSpec pts;
  pts.kind = ZooSpec::Kind::commuting_points;
  pts.points = {{0.5, -1.0}, {2.0, 0.25}};
  const ZooSpec back2 = zoo_from_json(zoo_to_json(pts));
  REQUIRE(back2.points.size() == 2);
  CHECK(back2.points[1][1] == 0.25);

  CHECK_THROWS(zoo_from_json("{\"kind\":\"nonsense\"}"));
  CHECK_THROWS(zoo_from_json("{\"kind\":\"two_projection\",\"z\":7}"));
}

TEST_CASE("uniform z grid covers [-1,1] with exact endpoints") {
  const auto g = uniform_z_grid(1e-3);
  CHECK(g.front() == -1.0);
  CHECK(g.back() == 1.0);
  CHECK(g.size() >= 2001);
  for (std::size_t k = 1; k < g.size(); ++k) {
    CHECK(g[k] > g[k - 1]);
    CHECK(g[k] - g[k - 1] <= 1e-3 + 1e-12);
  }
}

TEST_CASE("position_momentum interior commutator against raw entries") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::position_momentum;
  spec.n = 32;
  spec.box = 6.0;
  const HermitianTuple t = build(spec);
  ComplexMatrix C = multiply(t.op(0), t.op(1));
  C -= multiply(t.op(1), t.op(0));
  // entrywise: -i/2 on both off-diagonals, zero elsewhere (interior rows)
  for (std::size_t i = 1; i + 1 < 32; ++i) {
    CHECK(std::abs(C(i, i + 1) - Complex(0.0, -0.5)) <= 1e-13);
    CHECK(std::abs(C(i, i - 1) - Complex(0.0, -0.5)) <= 1e-13);
    CHECK(std::abs(C(i, i)) <= 1e-13);
  }
}
