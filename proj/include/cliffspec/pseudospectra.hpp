#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cliffspec/clifford.hpp"
#include "cliffspec/matrix_core.hpp"

namespace cliffspec {

/// Ordered tuple of d equal-size Hermitian matrices (the observables).
class HermitianTuple {
 public:
  HermitianTuple(std::vector<ComplexMatrix> ops,
                 const Tolerances& tol = default_tolerances());

  std::size_t d() const { return ops_.size(); }
  std::size_t dim() const { return dim_; }
  const ComplexMatrix& op(std::size_t j) const { return ops_[j]; }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }

 private:
  std::vector<ComplexMatrix> ops_;
  std::size_t dim_ = 0;
};

/// One probe point with whichever pseudospectrum values were requested.
struct PseudospectrumSample {
  std::vector<double> lambda;
  std::optional<double> mu_c;
  std::optional<double> mu_q;
  std::optional<double> mu_w;
};

/// L_lambda(A) = sum_j (A_j - lambda_j I) (x) Gamma_j.
ComplexMatrix spectral_localizer(const HermitianTuple& A, const std::vector<double>& lambda,
                                 const GammaRep& rep);

/// mu^C = s_min(L_lambda(A)).  Uses the standard representation for A.d()
/// when rep is null.
double clifford_pseudospectrum(const HermitianTuple& A, const std::vector<double>& lambda,
                               const GammaRep* rep = nullptr,
                               const Tolerances& tol = default_tolerances());

/// Q_lambda(A) = sum_j (A_j - lambda_j)^2, positive semidefinite.
ComplexMatrix quadratic_form(const HermitianTuple& A, const std::vector<double>& lambda);

/// mu^Q = sqrt(s_min(Q_lambda(A))).
double quadratic_pseudospectrum(const HermitianTuple& A, const std::vector<double>& lambda,
                                const Tolerances& tol = default_tolerances());

/// Same value through the stacked-column matrix [A_1 - l_1; ...; A_d - l_d];
/// kept as an independent arithmetic route for cross-checks.
double quadratic_pseudospectrum_stacked(const HermitianTuple& A,
                                        const std::vector<double>& lambda,
                                        const Tolerances& tol = default_tolerances());

/// 1 - ||g(A_1 - l_1) ... g(A_d - l_d)|| with the product taken in `order`.
/// Requires 0 <= g <= 1 on the sampled spectrum ranges and g(0) = 1.
double windowed_pseudospectrum(const HermitianTuple& A, const std::vector<double>& lambda,
                               const std::function<double(double)>& g,
                               const std::vector<std::size_t>& order,
                               const Tolerances& tol = default_tolerances());

/// Default left-to-right order.
double windowed_pseudospectrum(const HermitianTuple& A, const std::vector<double>& lambda,
                               const std::function<double(double)>& g,
                               const Tolerances& tol = default_tolerances());

/// sum_{j<k} ||[A_j, A_k]||; the bound between mu^C^2 and mu^Q^2.
double commutator_bound(const HermitianTuple& A,
                        const Tolerances& tol = default_tolerances());

struct PartitionCheckReport {
  bool precondition_ok = false;  // cross-block commutators vanish
  bool pass = false;
  double max_cross_commutator = 0.0;
  double identity_residual = 0.0;  // ||L^2 - L_left^2 - L_right^2||_max
};

/// Verifies the split-square identity for tuples commuting across index r
/// (1-based split: blocks {1..r} and {r+1..d}), both sides in the full rep.
PartitionCheckReport localizer_partition_check(const HermitianTuple& A, std::size_t r,
                                               const std::vector<double>& lambda,
                                               const GammaRep& rep,
                                               const Tolerances& tol = default_tolerances());

struct SymmetryCheckReport {
  bool hypothesis_ok = false;  // U orthogonal and Q conjugates A-hat back to A
  bool pass = false;
  double max_hypothesis_violation = 0.0;
  double mu_c_difference = 0.0;
  double mu_q_difference = 0.0;
};

/// If Q (A-hat_j) Q* = A_j with A-hat_j = sum_s U(j,s) A_s, then mu^C and
/// mu^Q at U lambda equal their values at lambda.  A failed hypothesis is
/// reported, not treated as a check failure.
SymmetryCheckReport symmetry_check(const HermitianTuple& A,
                                   const std::vector<std::vector<double>>& U,
                                   const ComplexMatrix& Q, const std::vector<double>& lambda,
                                   double check_tol,
                                   const Tolerances& tol = default_tolerances());

/// A-hat_j = sum_s U(j,s) A_s for an orthogonal d x d matrix U.
HermitianTuple rotated_tuple(const HermitianTuple& A,
                             const std::vector<std::vector<double>>& U);

std::vector<double> apply_orthogonal(const std::vector<std::vector<double>>& U,
                                     const std::vector<double>& lambda);

}  // namespace cliffspec
