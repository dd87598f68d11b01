#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace cliffspec {

using Complex = std::complex<double>;

/// Every tolerance used by the engine lives here so a run can be
/// reconfigured in one place.  All values are relative unless noted.
struct Tolerances {
  double eig_tol = 1e-10;        // eigen residual bound, relative to ||M||
  double hermitian_tol = 1e-12;  // max-norm Hermitian deviation, relative
  double member_eps = 1e-8;      // membership threshold for exact finite examples
  double curve_tol = 1e-10;      // polynomial residuals on the discrete-spectrum curve
  std::size_t max_kron_dim = 16384;
};

const Tolerances& default_tolerances();

/// Dense complex matrix, row-major.  Value semantics throughout; all
/// operations return fresh matrices so concurrent evaluation needs no locks.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<double>& d);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return a_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Complex* row(std::size_t i) { return a_.data() + i * cols_; }
  const Complex* row(std::size_t i) const { return a_.data() + i * cols_; }
  const std::vector<Complex>& data() const { return a_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  /// Shift the diagonal: M - s*I.  Requires a square matrix.
  ComplexMatrix shifted(Complex s) const;

  bool all_finite() const;
  double max_abs() const;
  double frobenius_norm() const;

  /// max |M(i,j) - conj(M(j,i))| over all entries.
  double hermitian_deviation() const;
  bool is_hermitian(const Tolerances& tol = default_tolerances()) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Complex> a_;
};

/// Matrix product.  Detects band structure in either operand and restricts
/// the inner loops accordingly, so products of truncated tridiagonal
/// operators cost O(n b^2) instead of O(n^3).
ComplexMatrix multiply(const ComplexMatrix& A, const ComplexMatrix& B);

/// Half-bandwidth: max |i-j| over structurally nonzero entries (0 for
/// diagonal, 1 for tridiagonal).  Exact zeros only; no thresholding.
std::size_t half_bandwidth(const ComplexMatrix& M);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, k-th column pairs with eigenvalues[k]
};

/// Hermitian eigendecomposition: Householder tridiagonalization followed by
/// implicit-shift QL.  Rejects input whose Hermitian deviation exceeds
/// tolerance, reporting the offending norm.
EigenDecomposition eig_hermitian(const ComplexMatrix& M,
                                 const Tolerances& tol = default_tolerances());

/// Eigenvalues only, ascending.  Banded matrices (half-bandwidth small
/// relative to n) are first reduced to tridiagonal form with Givens
/// rotations, which is what makes large truncated-operator scans tractable.
std::vector<double> eig_hermitian_values(const ComplexMatrix& M,
                                         const Tolerances& tol = default_tolerances());

/// Smallest singular value.  Hermitian input uses min |eigenvalue|; general
/// (possibly rectangular) input goes through T*T, never T T*.
double smallest_singular_value(const ComplexMatrix& T,
                               const Tolerances& tol = default_tolerances());

/// Largest singular value, via the largest eigenvalue of M*M.
double operator_norm(const ComplexMatrix& M,
                     const Tolerances& tol = default_tolerances());

/// Kronecker product A (x) B.  Rejects results beyond max_kron_dim.
ComplexMatrix kron(const ComplexMatrix& A, const ComplexMatrix& B,
                   const Tolerances& tol = default_tolerances());

/// dst += A (x) B without materializing the product. dst must be pre-sized.
void kron_accumulate(ComplexMatrix& dst, const ComplexMatrix& A, const ComplexMatrix& B);

/// Functional calculus g(M) = V diag(g(lambda_k)) V* for Hermitian M.
ComplexMatrix matrix_function_hermitian(const ComplexMatrix& M,
                                        const std::function<double(double)>& g,
                                        const Tolerances& tol = default_tolerances());

/// Stack matrices vertically; all operands must share a column count.
ComplexMatrix vstack(const std::vector<ComplexMatrix>& blocks);

}  // namespace cliffspec
