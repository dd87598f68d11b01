#include <doctest.h>

#include <cmath>
#include <random>

#include "cliffspec/clifford.hpp"
#include "test_support.hpp"

using namespace cliffspec;
using namespace testsupport;

TEST_CASE("gamma_rep base cases match the standard Pauli choices") {
  const GammaRep g2 = gamma_rep(2);
  REQUIRE(g2.size == 2);
  CHECK((g2.gammas[0] - pauli_x()).max_abs() == 0.0);
  CHECK((g2.gammas[1] - pauli_y()).max_abs() == 0.0);

  const GammaRep g3 = gamma_rep(3);
  REQUIRE(g3.size == 2);
  CHECK((g3.gammas[0] - pauli_x()).max_abs() == 0.0);
  CHECK((g3.gammas[1] - pauli_y()).max_abs() == 0.0);
  CHECK((g3.gammas[2] - pauli_z()).max_abs() == 0.0);
}

TEST_CASE("gamma_rep sizes and relations for d = 1..12") {
  for (std::size_t d = 1; d <= 12; ++d) {
    const GammaRep rep = gamma_rep(d);
    CHECK(rep.gammas.size() == d);
    CHECK(rep.size == (std::size_t(1) << (d / 2)));
    const CliffordReport r = verify_clifford(rep, 1e-13);
    CHECK_MESSAGE(r.pass, "d=", d, " worst violation ", r.worst());
  }
}

TEST_CASE("gamma_rep(3) verifies exactly; (sigma_x, sigma_x) fails anticommutation") {
  CHECK(verify_clifford(gamma_rep(3), 1e-13).worst() == 0.0);

  GammaRep bad;
  bad.d = 2;
  bad.size = 2;
  bad.gammas = {pauli_x(), pauli_x()};
  const CliffordReport r = verify_clifford(bad, 1e-13);
  CHECK_FALSE(r.pass);
  CHECK(r.max_anticommutation_violation == doctest::Approx(2.0));
  CHECK(r.max_involution_violation == 0.0);
  CHECK(r.max_hermitian_violation == 0.0);
}

TEST_CASE("gamma_rep(5) gives five 4x4 generators passing verify_clifford") {
  const GammaRep rep = gamma_rep(5);
  REQUIRE(rep.size == 4);
  CHECK(verify_clifford(rep, 1e-14).pass);
}

TEST_CASE("gamma_rep(7) verifies within 1e-14") {
  CHECK(verify_clifford(gamma_rep(7), 1e-14).pass);
}

TEST_CASE("gamma_rep rejects d = 0 and d > 20") {
  CHECK_THROWS_AS(gamma_rep(0), std::invalid_argument);
  CHECK_THROWS_AS(gamma_rep(21), std::invalid_argument);
}

TEST_CASE("linear combination spectrum: zero, (3,4) and random alpha") {
  const GammaRep g2 = gamma_rep(2);
  CHECK(linear_combination_spectrum_check(g2, {0.0, 0.0}).pass);

  // alpha = (3,4): eigenvalues +-5
  ComplexMatrix s = g2.gammas[0];
  s *= 3.0;
  ComplexMatrix t = g2.gammas[1];
  t *= 4.0;
  s += t;
  const auto vals = eig_hermitian_values(s);
  CHECK(vals.front() == doctest::Approx(-5.0).epsilon(1e-13));
  CHECK(vals.back() == doctest::Approx(5.0).epsilon(1e-13));
  CHECK(linear_combination_spectrum_check(g2, {3.0, 4.0}).pass);

  std::mt19937_64 rng(2024);
  const GammaRep g5 = gamma_rep(5);
  for (int trial = 0; trial < 10; ++trial)
    CHECK(linear_combination_spectrum_check(g5, random_vector(rng, 5, 2.0)).pass);
}

TEST_CASE("unitarily conjugated rep preserves relations and localizer spectra") {
  std::mt19937_64 rng(5150);
  const GammaRep rep = gamma_rep(3);
  const ComplexMatrix U = eig_hermitian(random_hermitian(rng, rep.size)).eigenvectors;
  const GammaRep conj = conjugated_rep(rep, U);
  CHECK(verify_clifford(conj, 1e-13).pass);
  for (int trial = 0; trial < 5; ++trial)
    CHECK(linear_combination_spectrum_check(conj, random_vector(rng, 3)).pass);
}
