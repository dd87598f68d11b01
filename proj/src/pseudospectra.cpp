#include "cliffspec/pseudospectra.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cliffspec {

HermitianTuple::HermitianTuple(std::vector<ComplexMatrix> ops, const Tolerances& tol)
    : ops_(std::move(ops)) {
  if (ops_.empty()) throw std::invalid_argument("HermitianTuple: empty tuple");
  dim_ = ops_.front().rows();
  for (const auto& m : ops_) {
    if (m.rows() != dim_ || m.cols() != dim_)
      throw std::invalid_argument("HermitianTuple: operators must share one square dimension");
    if (!m.all_finite()) throw std::invalid_argument("HermitianTuple: non-finite entries");
    const double scale = std::max(m.max_abs(), 1.0);
    if (m.hermitian_deviation() > tol.hermitian_tol * scale)
      throw std::invalid_argument("HermitianTuple: operator not Hermitian, deviation " +
                                  std::to_string(m.hermitian_deviation()));
  }
}

ComplexMatrix spectral_localizer(const HermitianTuple& A, const std::vector<double>& lambda,
                                 const GammaRep& rep) {
  if (rep.d != A.d())
    throw std::invalid_argument("spectral_localizer: rep.d != tuple d");
  if (lambda.size() != A.d())
    throw std::invalid_argument("spectral_localizer: lambda length != tuple d");
  const std::size_t n = A.dim() * rep.size;
  ComplexMatrix L(n, n);
  for (std::size_t j = 0; j < A.d(); ++j)
    kron_accumulate(L, A.op(j).shifted(lambda[j]), rep.gammas[j]);
  return L;
}

double clifford_pseudospectrum(const HermitianTuple& A, const std::vector<double>& lambda,
                               const GammaRep* rep, const Tolerances& tol) {
  GammaRep local;
  if (!rep) {
    local = gamma_rep(A.d());
    rep = &local;
  }
  return smallest_singular_value(spectral_localizer(A, lambda, *rep), tol);
}

ComplexMatrix quadratic_form(const HermitianTuple& A, const std::vector<double>& lambda) {
  if (lambda.size() != A.d())
    throw std::invalid_argument("quadratic_form: lambda length != tuple d");
  ComplexMatrix Q(A.dim(), A.dim());
  for (std::size_t j = 0; j < A.d(); ++j) {
    const ComplexMatrix S = A.op(j).shifted(lambda[j]);
    Q += multiply(S, S);
  }
  return Q;
}

double quadratic_pseudospectrum(const HermitianTuple& A, const std::vector<double>& lambda,
                                const Tolerances& tol) {
  const auto vals = eig_hermitian_values(quadratic_form(A, lambda), tol);
  return std::sqrt(std::max(0.0, vals.front()));
}

double quadratic_pseudospectrum_stacked(const HermitianTuple& A,
                                        const std::vector<double>& lambda,
                                        const Tolerances& tol) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(A.d());
  for (std::size_t j = 0; j < A.d(); ++j) blocks.push_back(A.op(j).shifted(lambda[j]));
  return smallest_singular_value(vstack(blocks), tol);
}

double windowed_pseudospectrum(const HermitianTuple& A, const std::vector<double>& lambda,
                               const std::function<double(double)>& g,
                               const std::vector<std::size_t>& order, const Tolerances& tol) {
  if (lambda.size() != A.d())
    throw std::invalid_argument("windowed_pseudospectrum: lambda length != tuple d");
  if (order.size() != A.d())
    throw std::invalid_argument("windowed_pseudospectrum: order length != tuple d");
  std::vector<bool> seen(A.d(), false);
  for (std::size_t j : order) {
    if (j >= A.d() || seen[j])
      throw std::invalid_argument("windowed_pseudospectrum: order is not a permutation");
    seen[j] = true;
  }
  const double g0 = g(0.0);
  if (std::abs(g0 - 1.0) > 1e-12)
    throw std::invalid_argument("windowed_pseudospectrum: g(0) != 1");

  // range check on the sampled eigenvalue span of each shifted operator
  for (std::size_t j = 0; j < A.d(); ++j) {
    const auto vals = eig_hermitian_values(A.op(j).shifted(lambda[j]), tol);
    const double lo = vals.front(), hi = vals.back();
    for (int k = 0; k <= 64; ++k) {
      const double t = lo + (hi - lo) * double(k) / 64.0;
      const double v = g(t);
      if (!(v >= -1e-12 && v <= 1.0 + 1e-12))
        throw std::invalid_argument("windowed_pseudospectrum: g out of [0,1] on spectrum at t=" +
                                    std::to_string(t));
    }
  }

  ComplexMatrix W;
  bool first = true;
  for (std::size_t j : order) {
    const ComplexMatrix Gj = matrix_function_hermitian(A.op(j).shifted(lambda[j]), g, tol);
    W = first ? Gj : multiply(W, Gj);
    first = false;
  }
  return 1.0 - operator_norm(W, tol);
}

double windowed_pseudospectrum(const HermitianTuple& A, const std::vector<double>& lambda,
                               const std::function<double(double)>& g, const Tolerances& tol) {
  std::vector<std::size_t> order(A.d());
  std::iota(order.begin(), order.end(), 0);
  return windowed_pseudospectrum(A, lambda, g, order, tol);
}

double commutator_bound(const HermitianTuple& A, const Tolerances& tol) {
  double sum = 0.0;
  for (std::size_t j = 0; j < A.d(); ++j)
    for (std::size_t k = j + 1; k < A.d(); ++k) {
      ComplexMatrix c = multiply(A.op(j), A.op(k));
      c -= multiply(A.op(k), A.op(j));
      sum += operator_norm(c, tol);
    }
  return sum;
}

PartitionCheckReport localizer_partition_check(const HermitianTuple& A, std::size_t r,
                                               const std::vector<double>& lambda,
                                               const GammaRep& rep, const Tolerances& tol) {
  if (r < 1 || r >= A.d())
    throw std::invalid_argument("localizer_partition_check: split index out of range");
  PartitionCheckReport out;
  double scale = 1.0;
  for (std::size_t j = 0; j < A.d(); ++j) scale = std::max(scale, A.op(j).max_abs());
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = r; k < A.d(); ++k) {
      ComplexMatrix c = multiply(A.op(j), A.op(k));
      c -= multiply(A.op(k), A.op(j));
      out.max_cross_commutator = std::max(out.max_cross_commutator, c.max_abs());
    }
  out.precondition_ok = out.max_cross_commutator <= tol.hermitian_tol * scale * scale;
  if (!out.precondition_ok) return out;

  const std::size_t n = A.dim() * rep.size;
  ComplexMatrix L(n, n), Lleft(n, n), Lright(n, n);
  for (std::size_t j = 0; j < A.d(); ++j) {
    const ComplexMatrix S = A.op(j).shifted(lambda[j]);
    kron_accumulate(L, S, rep.gammas[j]);
    kron_accumulate(j < r ? Lleft : Lright, S, rep.gammas[j]);
  }
  ComplexMatrix diff = multiply(L, L);
  diff -= multiply(Lleft, Lleft);
  diff -= multiply(Lright, Lright);
  out.identity_residual = diff.max_abs();
  const double sq_scale = std::max(1.0, scale * scale * double(A.d()));
  out.pass = out.identity_residual <= tol.eig_tol * sq_scale;
  return out;
}

HermitianTuple rotated_tuple(const HermitianTuple& A,
                             const std::vector<std::vector<double>>& U) {
  const std::size_t d = A.d();
  if (U.size() != d) throw std::invalid_argument("rotated_tuple: U must be d x d");
  std::vector<ComplexMatrix> hat;
  hat.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (U[j].size() != d) throw std::invalid_argument("rotated_tuple: U must be d x d");
    ComplexMatrix acc(A.dim(), A.dim());
    for (std::size_t s = 0; s < d; ++s) {
      ComplexMatrix term = A.op(s);
      term *= U[j][s];
      acc += term;
    }
    hat.push_back(std::move(acc));
  }
  return HermitianTuple(std::move(hat));
}

std::vector<double> apply_orthogonal(const std::vector<std::vector<double>>& U,
                                     const std::vector<double>& lambda) {
  std::vector<double> out(U.size(), 0.0);
  for (std::size_t j = 0; j < U.size(); ++j)
    for (std::size_t s = 0; s < lambda.size(); ++s) out[j] += U[j][s] * lambda[s];
  return out;
}

SymmetryCheckReport symmetry_check(const HermitianTuple& A,
                                   const std::vector<std::vector<double>>& U,
                                   const ComplexMatrix& Q, const std::vector<double>& lambda,
                                   double check_tol, const Tolerances& tol) {
  SymmetryCheckReport out;
  const std::size_t d = A.d();
  // U orthogonal?
  double ortho_dev = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < d; ++k) dot += U[k][i] * U[k][j];
      ortho_dev = std::max(ortho_dev, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  out.max_hypothesis_violation = ortho_dev;

  const HermitianTuple hat = rotated_tuple(A, U);
  const ComplexMatrix Qa = Q.adjoint();
  for (std::size_t j = 0; j < d; ++j) {
    ComplexMatrix conj = multiply(multiply(Q, hat.op(j)), Qa);
    conj -= A.op(j);
    out.max_hypothesis_violation = std::max(out.max_hypothesis_violation, conj.max_abs());
  }
  out.hypothesis_ok = out.max_hypothesis_violation <= check_tol;
  if (!out.hypothesis_ok) return out;

  const std::vector<double> ulambda = apply_orthogonal(U, lambda);
  out.mu_c_difference = std::abs(clifford_pseudospectrum(A, ulambda, nullptr, tol) -
                                 clifford_pseudospectrum(A, lambda, nullptr, tol));
  out.mu_q_difference = std::abs(quadratic_pseudospectrum(A, ulambda, tol) -
                                 quadratic_pseudospectrum(A, lambda, tol));
  out.pass = out.mu_c_difference <= check_tol && out.mu_q_difference <= check_tol;
  return out;
}

}  // namespace cliffspec
