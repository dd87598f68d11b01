#include <doctest.h>

#include <cmath>
#include <random>

#include "cliffspec/operator_zoo.hpp"
#include "cliffspec/scan_engine.hpp"
#include "test_support.hpp"

using namespace cliffspec;
using namespace testsupport;

namespace {

HermitianTuple scalar_tuple(const std::vector<double>& a, std::size_t n) {
  std::vector<ComplexMatrix> ops;
  for (double v : a) {
    ComplexMatrix m = ComplexMatrix::identity(n);
    m *= v;
    ops.push_back(std::move(m));
  }
  return HermitianTuple(std::move(ops));
}

double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("region lattice accounting") {
  Region r{{-1.0, 0.0}, {1.0, 2.0}, {5, 3}};
  r.validate();
  CHECK(r.point_count() == 15);
  CHECK(r.coord(0, 0) == -1.0);
  CHECK(r.coord(0, 4) == 1.0);
  CHECK(r.coord(1, 1) == 1.0);
  const auto idx = r.unflatten(7);  // row-major: (1, 1, ...) pattern
  CHECK(idx[0] == 2);
  CHECK(idx[1] == 1);
  CHECK(r.spacing() == doctest::Approx(1.0));

  CHECK_THROWS_AS((Region{{0.0}, {0.0}, {4}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((Region{{0.0}, {1.0}, {1}}).validate(), std::invalid_argument);
}

TEST_CASE("scalar tuple field equals distance to the scalar point") {
  const std::vector<double> alpha = {0.5, -0.5};
  const HermitianTuple A = scalar_tuple(alpha, 3);
  Region region{{-1.0, -1.0}, {1.0, 1.0}, {9, 9}};
  const ScanGrid grid = grid_scan(A, region, {true, true, false}, gamma_rep(2), 1);
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    const auto& s = grid.values[i];
    std::vector<double> diff = {s.lambda[0] - alpha[0], s.lambda[1] - alpha[1]};
    CHECK(*s.mu_c == doctest::Approx(norm2(diff)).epsilon(1e-10));
    CHECK(*s.mu_q == doctest::Approx(norm2(diff)).epsilon(1e-10));
  }
}

TEST_CASE("grid field obeys the Lipschitz bound between adjacent points") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::two_projection;
  spec.z = 0.3;
  const HermitianTuple A = build(spec);
  Region region{{-1.5, -1.5}, {1.5, 1.5}, {13, 13}};
  const ScanGrid grid = grid_scan(A, region, {true, false, false}, gamma_rep(2), 1);
  const double hx = 3.0 / 12.0;
  for (std::size_t i = 0; i < 13; ++i)
    for (std::size_t j = 0; j + 1 < 13; ++j) {
      const double a = *grid.values[i * 13 + j].mu_c;
      const double b = *grid.values[i * 13 + j + 1].mu_c;
      CHECK(std::abs(a - b) <= hx + 1e-9);
    }
}

TEST_CASE("zero_set: exactness on aligned commuting points, monotone in eps") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::commuting_points;
  spec.points = {{-0.5, 0.5}, {0.5, -0.5}, {0.0, 0.0}};
  const HermitianTuple A = build(spec);
  Region region{{-1.0, -1.0}, {1.0, 1.0}, {5, 5}};  // h = 0.5, aligned
  const ScanGrid grid = grid_scan(A, region, {true, false, false}, gamma_rep(2), 1);

  const auto zs = zero_set(grid, 1e-8);
  REQUIRE(zs.size() == 3);
  for (const auto& p : zs) {
    bool matches = false;
    for (const auto& q : spec.points)
      matches = matches || (std::abs(p.lambda[0] - q[0]) < 1e-12 &&
                            std::abs(p.lambda[1] - q[1]) < 1e-12);
    CHECK(matches);
  }

  const auto all_small = zero_set(grid, 1e-3);
  const auto larger = zero_set(grid, 0.6);
  CHECK(all_small.size() <= larger.size());
  CHECK(zero_set(grid, -1.0).empty());
}

TEST_CASE("determinism: identical bytes for different worker counts") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::pauli;
  const HermitianTuple A = build(spec);
  Region region{{-1.2, -1.2, -1.2}, {1.2, 1.2, 1.2}, {5, 5, 5}};
  const ScanGrid g1 = grid_scan(A, region, {true, true, false}, gamma_rep(3), 1);
  const ScanGrid g4 = grid_scan(A, region, {true, true, false}, gamma_rep(3), 4);
  CHECK(grid_to_csv(g1) == grid_to_csv(g4));
  CHECK(grid_to_json(g1) == grid_to_json(g4));
}

TEST_CASE("pauli grid: minimum of mu^C sits near the unit sphere") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::pauli;
  const HermitianTuple A = build(spec);
  Region region{{-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5}, {13, 13, 13}};
  const ScanGrid grid = grid_scan(A, region, {true, false, false}, gamma_rep(3), 2);
  double best_mu = 1e300, best_r = 0.0;
  for (const auto& s : grid.values)
    if (*s.mu_c < best_mu) {
      best_mu = *s.mu_c;
      best_r = norm2(s.lambda);
    }
  CHECK(std::abs(best_r - 1.0) <= 0.25);
  CHECK(best_mu <= 0.25);
}

TEST_CASE("radial profile: pauli dip at t = 1, constant at t = 0") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::pauli;
  const HermitianTuple A = build(spec);
  std::vector<double> ts;
  for (int k = 0; k <= 20; ++k) ts.push_back(0.1 * k);
  const auto prof =
      radial_profile(A, {0.0, 0.0, 1.0}, ts, {true, false, false}, gamma_rep(3));
  double best = 1e300, arg = -1.0;
  for (std::size_t k = 0; k < ts.size(); ++k)
    if (*prof[k].mu_c < best) {
      best = *prof[k].mu_c;
      arg = ts[k];
    }
  CHECK(arg == doctest::Approx(1.0));
  CHECK(best <= 1e-10);

  const auto rep = radial_profile(A, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0},
                                  {true, false, false}, gamma_rep(3));
  CHECK(*rep[0].mu_c == *rep[1].mu_c);
  CHECK(*rep[1].mu_c == *rep[2].mu_c);
}

TEST_CASE("bisect_zero: pauli sphere, scalar tuple norm, and no-dip report") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::pauli;
  const HermitianTuple P = build(spec);
  const auto hit = bisect_zero(P, {1.0, 0.0, 0.0}, 0.5, 1.5, 1e-7, 1e-3, gamma_rep(3));
  CHECK(hit.found);
  CHECK(hit.t_star == doctest::Approx(1.0).epsilon(1e-6));

  const std::vector<double> alpha = {0.6, -0.8};
  const HermitianTuple S = scalar_tuple(alpha, 2);
  const std::vector<double> dir = {0.6, -0.8};  // unit, along alpha
  const auto hit2 = bisect_zero(S, dir, 0.2, 1.8, 1e-8, 1e-6, gamma_rep(2));
  CHECK(hit2.found);
  CHECK(hit2.t_star == doctest::Approx(1.0).epsilon(1e-6));  // ||alpha|| = 1

  const auto miss = bisect_zero(P, {1.0, 0.0, 0.0}, 2.5, 3.5, 1e-6, 1e-3, gamma_rep(3));
  CHECK_FALSE(miss.found);
}

TEST_CASE("planar scan embeds parameters into probe space") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::hemisphere;
  spec.b = 1.0;
  spec.n = 24;
  const HermitianTuple A = build(spec);
  PlaneEmbedding emb;
  emb.origin = {0.0, 0.0, 0.0};
  emb.axes = {{1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}};  // (x, 0, z)
  Region region{{0.2, 0.0}, {1.0, 0.8}, {5, 5}};
  const ScanGrid grid = planar_scan(A, region, emb, {true, false, false}, gamma_rep(3), 1);
  for (const auto& s : grid.values) {
    CHECK(s.lambda.size() == 3);
    CHECK(s.lambda[1] == 0.0);
  }
  // same values as a direct evaluation
  const auto& s0 = grid.values[7];
  CHECK(*s0.mu_c ==
        doctest::Approx(clifford_pseudospectrum(A, s0.lambda)).epsilon(1e-12));
}

TEST_CASE("universal-pair field scan through the generic evaluator") {
  const auto zgrid = uniform_z_grid(1e-2);
  const FieldEvaluator eval = [&](const std::vector<double>& lambda) {
    PseudospectrumSample s;
    s.lambda = lambda;
    const auto v = universal_pair_pseudospectra(lambda[0], lambda[1], zgrid);
    s.mu_c = v.mu_c;
    s.mu_q = v.mu_q;
    return s;
  };
  Region region{{-2.0, -2.0}, {2.0, 2.0}, {21, 21}};
  const ScanGrid grid =
      grid_scan_field(region, PlaneEmbedding::identity(2), {true, true, false}, eval, 2);
  // corners are lattice points here: mu^Q vanishes there
  const auto zq = [&](double x, double y) {
    for (const auto& s : grid.values)
      if (std::abs(s.lambda[0] - x) < 1e-12 && std::abs(s.lambda[1] - y) < 1e-12)
        return *s.mu_q;
    return -1.0;
  };
  CHECK(zq(1.0, 1.0) <= 1e-12);
  CHECK(zq(-1.0, 1.0) <= 1e-12);
  CHECK(zq(1.0, -1.0) <= 1e-12);
  CHECK(zq(-1.0, -1.0) <= 1e-12);
}

TEST_CASE("two_projection(0) scan field matches the closed-form oracle field") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::two_projection;
  spec.z = 0.0;
  const HermitianTuple A = build(spec);
  Region region{{-2.0, -2.0}, {2.0, 2.0}, {101, 101}};
  const ScanGrid grid = grid_scan(A, region, {true, false, false}, gamma_rep(2), 0);
  double worst = 0.0;
  for (const auto& s : grid.values)
    worst = std::max(worst, std::abs(*s.mu_c -
                                     mu_c_two_projection_closed(s.lambda[0], s.lambda[1], 0.0)));
  CHECK(worst <= 1e-10);
  // zero set matches the closed-form sub-level set exactly (the field is
  // quartically flat around the lone spectrum point at the origin, so the
  // sub-level set at eps = h has radius ~ sqrt(2h), not h)
  const double h = grid.region.spacing();
  const auto zs = zero_set(grid, h);
  std::size_t expected = 0;
  for (const auto& s : grid.values)
    if (mu_c_two_projection_closed(s.lambda[0], s.lambda[1], 0.0) <= h - 1e-9) ++expected;
  CHECK(zs.size() >= expected);
  for (const auto& p : zs)
    CHECK(mu_c_two_projection_closed(p.lambda[0], p.lambda[1], 0.0) <= h + 1e-9);
  CHECK_FALSE(zs.empty());
}

TEST_CASE("bisect_zero hits the hemisphere curve along a transversal ray") {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::hemisphere;
  spec.b = 1.0;
  spec.n = 256;
  const HermitianTuple H = build(spec);
  const double z0 = 0.5;
  const double x0 = std::sqrt(std::abs(z0 - 1.0)) * std::pow(z0 * z0 - z0 + 1.0, 0.25);
  const double pr = std::hypot(x0, z0);
  const std::vector<double> dir = {x0 / pr, 0.0, z0 / pr};
  const auto hit = bisect_zero(H, dir, 0.7 * pr, 1.3 * pr, 1e-6, 1e-2, gamma_rep(3));
  CHECK(hit.found);
  CHECK(std::abs(hit.t_star - pr) <= 1e-2);
}

TEST_CASE("truncation sweep reports monotone trends") {
  const auto builder = [](std::size_t n) {
    ZooSpec spec;
    spec.kind = ZooSpec::Kind::hemisphere;
    spec.b = 1.0;
    spec.n = n;
    return build(spec);
  };
  const TruncationSweep sw = truncation_sweep(builder, {16, 32, 64},
                                              {{1.0, 0.0, 0.0}}, gamma_rep(3));
  REQUIRE(sw.points.size() == 1);
  REQUIRE(sw.points[0].mu.size() == 3);
  CHECK(sw.points[0].monotone_decreasing);
}

TEST_CASE("csv layout: header plus one row per lattice point, 17 digits") {
  const HermitianTuple A = scalar_tuple({1.0 / 3.0}, 2);
  Region region{{0.0}, {1.0}, {3}};
  const ScanGrid grid = grid_scan(A, region, {true, true, false}, gamma_rep(1), 1);
  const std::string csv = grid_to_csv(grid);
  CHECK(csv.substr(0, csv.find('\n')) == "lambda0,mu_c,mu_q,mu_w");
  std::size_t rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == 4);
  CHECK(csv.find("0.33333333333333331") != std::string::npos);
}
