#pragma once

#include <vector>

#include "cliffspec/matrix_core.hpp"

namespace cliffspec {

/// d Hermitian involutions that pairwise anticommute, size 2^floor(d/2).
struct GammaRep {
  std::size_t d = 0;
  std::size_t size = 0;
  std::vector<ComplexMatrix> gammas;
};

ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();

/// Standard representation: d=2 gives (sigma_x, sigma_y), d=3 adds sigma_z,
/// higher d by the recursive tensor construction G_j (x) sigma_z plus
/// I (x) sigma_x, I (x) sigma_y.  Even d takes the first d generators of the
/// (d+1)-representation at the same size.
GammaRep gamma_rep(std::size_t d);

struct CliffordReport {
  double max_hermitian_violation = 0.0;
  double max_involution_violation = 0.0;
  double max_anticommutation_violation = 0.0;
  bool pass = false;
  double worst() const;
};

CliffordReport verify_clifford(const GammaRep& rep, double tol);

struct SpectrumCheckReport {
  bool pass = false;
  double max_deviation = 0.0;  // worst | |eigenvalue| - ||alpha|| |
};

/// Every eigenvalue of sum_j alpha_j Gamma_j must be +-||alpha||_2.
SpectrumCheckReport linear_combination_spectrum_check(
    const GammaRep& rep, const std::vector<double>& alpha,
    const Tolerances& tol = default_tolerances());

/// Conjugated representation U G_j U* for rep-independence tests.
GammaRep conjugated_rep(const GammaRep& rep, const ComplexMatrix& U);

}  // namespace cliffspec
