#include "cliffspec/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cliffspec {

const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix shape mismatch in +=");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix shape mismatch in -=");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ComplexMatrix ComplexMatrix::shifted(Complex s) const {
  if (rows_ != cols_) throw std::invalid_argument("shifted() requires a square matrix");
  ComplexMatrix m = *this;
  for (std::size_t i = 0; i < rows_; ++i) m(i, i) -= s;
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::hermitian_deviation() const {
  if (rows_ != cols_) return std::numeric_limits<double>::infinity();
  double dev = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return dev;
}

bool ComplexMatrix::is_hermitian(const Tolerances& tol) const {
  if (rows_ != cols_) return false;
  const double scale = std::max(max_abs(), 1.0);
  return hermitian_deviation() <= tol.hermitian_tol * scale;
}

std::size_t half_bandwidth(const ComplexMatrix& M) {
  std::size_t bw = 0;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    const Complex* r = M.row(i);
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (r[j] != 0.0) {
        const std::size_t d = i > j ? i - j : j - i;
        bw = std::max(bw, d);
      }
    }
  }
  return bw;
}

ComplexMatrix multiply(const ComplexMatrix& A, const ComplexMatrix& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("matrix shape mismatch in multiply");
  const std::size_t n = A.rows(), m = B.cols(), p = A.cols();
  ComplexMatrix C(n, m);
  // Band-restricted i-k-j loops; for dense operands the bounds are vacuous
  // and this is the cache-friendly row-major kernel.
  const std::size_t bwA = (n == p) ? half_bandwidth(A) : p;
  const std::size_t bwB = (p == m) ? half_bandwidth(B) : m;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k_lo = (bwA < p && i > bwA) ? i - bwA : 0;
    const std::size_t k_hi = (bwA < p) ? std::min(p, i + bwA + 1) : p;
    Complex* ci = C.row(i);
    const Complex* ai = A.row(i);
    for (std::size_t k = k_lo; k < k_hi; ++k) {
      const Complex a = ai[k];
      if (a == 0.0) continue;
      const std::size_t j_lo = (bwB < m && k > bwB) ? k - bwB : 0;
      const std::size_t j_hi = (bwB < m) ? std::min(m, k + bwB + 1) : m;
      const Complex* bk = B.row(k);
      for (std::size_t j = j_lo; j < j_hi; ++j) ci[j] += a * bk[j];
    }
  }
  return C;
}

ComplexMatrix kron(const ComplexMatrix& A, const ComplexMatrix& B, const Tolerances& tol) {
  const std::size_t r = A.rows() * B.rows(), c = A.cols() * B.cols();
  if (r > tol.max_kron_dim || c > tol.max_kron_dim)
    throw std::invalid_argument("kron result exceeds max dimension " +
                                std::to_string(tol.max_kron_dim));
  ComplexMatrix K(r, c);
  kron_accumulate(K, A, B);
  return K;
}

void kron_accumulate(ComplexMatrix& dst, const ComplexMatrix& A, const ComplexMatrix& B) {
  const std::size_t br = B.rows(), bc = B.cols();
  if (dst.rows() != A.rows() * br || dst.cols() != A.cols() * bc)
    throw std::invalid_argument("kron_accumulate destination shape mismatch");
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const Complex a = A(i, j);
      if (a == 0.0) continue;
      for (std::size_t r = 0; r < br; ++r) {
        Complex* drow = dst.row(i * br + r) + j * bc;
        const Complex* brow = B.row(r);
        for (std::size_t c = 0; c < bc; ++c) drow[c] += a * brow[c];
      }
    }
}

ComplexMatrix vstack(const std::vector<ComplexMatrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("vstack of nothing");
  const std::size_t c = blocks.front().cols();
  std::size_t r = 0;
  for (const auto& b : blocks) {
    if (b.cols() != c) throw std::invalid_argument("vstack column mismatch");
    r += b.rows();
  }
  ComplexMatrix S(r, c);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      std::copy(b.row(i), b.row(i) + c, S.row(off + i));
    off += b.rows();
  }
  return S;
}

namespace {

void require_hermitian_input(const ComplexMatrix& M, const Tolerances& tol, const char* who) {
  if (M.rows() != M.cols() || M.rows() == 0)
    throw std::invalid_argument(std::string(who) + ": square non-empty matrix required");
  if (!M.all_finite())
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
  const double scale = std::max(M.max_abs(), 1.0);
  const double dev = M.hermitian_deviation();
  if (dev > tol.hermitian_tol * scale)
    throw std::invalid_argument(std::string(who) + ": input not Hermitian, deviation " +
                                std::to_string(dev) + " exceeds " +
                                std::to_string(tol.hermitian_tol * scale));
}

// Implicit-shift QL on a real symmetric tridiagonal (d, e).  e[i] couples
// i and i+1; e[n-1] is workspace.  If Z is non-null its columns are rotated
// along, so Z starts as the basis in which (d, e) was obtained.
void tql_implicit(std::vector<double>& d, std::vector<double>& e, ComplexMatrix* Z) {
  const std::size_t n = d.size();
  if (n == 0) return;
  e.resize(n);
  e[n - 1] = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    std::size_t iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 64) throw std::runtime_error("tql_implicit: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (Z) {
            for (std::size_t k = 0; k < Z->rows(); ++k) {
              const Complex zf = (*Z)(k, i + 1);
              (*Z)(k, i + 1) = s * (*Z)(k, i) + c * zf;
              (*Z)(k, i) = c * (*Z)(k, i) - s * zf;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

// Householder reduction of Hermitian A (overwritten) to real symmetric
// tridiagonal (d, e).  When Q is non-null it receives the unitary with
// A = Q T Q*, off-diagonal phases already absorbed.
void householder_tridiag(ComplexMatrix& A, std::vector<double>& d, std::vector<double>& e,
                         ComplexMatrix* Q) {
  const std::size_t n = A.rows();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  std::vector<Complex> esub(n, 0.0);  // complex subdiagonal before phase scaling
  if (Q) *Q = ComplexMatrix::identity(n);

  std::vector<Complex> u(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // length of the column below the diagonal
    double xnorm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) xnorm2 += std::norm(A(k + 1 + i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) {
      esub[k] = 0.0;
      continue;
    }
    const Complex x0 = A(k + 1, k);
    const Complex phase = (x0 == 0.0) ? Complex(1.0, 0.0) : x0 / std::abs(x0);

    for (std::size_t i = 0; i < m; ++i) u[i] = A(k + 1 + i, k);
    u[0] += phase * xnorm;
    double sigma = 0.0;
    for (std::size_t i = 0; i < m; ++i) sigma += std::norm(u[i]);
    if (sigma == 0.0) {
      esub[k] = -phase * xnorm;
      continue;
    }
    const double beta = 2.0 / sigma;

    // p = beta * A_sub * u on the trailing block
    for (std::size_t i = 0; i < m; ++i) {
      Complex acc = 0.0;
      const Complex* arow = A.row(k + 1 + i) + (k + 1);
      for (std::size_t j = 0; j < m; ++j) acc += arow[j] * u[j];
      p[i] = beta * acc;
    }
    double K = 0.0;  // (u* p) / sigma, real for Hermitian A
    for (std::size_t i = 0; i < m; ++i) K += std::real(std::conj(u[i]) * p[i]);
    K /= sigma;
    // rank-2 update A_sub -= u w* + w u*, w = p - K u
    for (std::size_t i = 0; i < m; ++i) p[i] -= K * u[i];
    for (std::size_t i = 0; i < m; ++i) {
      Complex* arow = A.row(k + 1 + i) + (k + 1);
      const Complex ui = u[i], wi = p[i];
      for (std::size_t j = 0; j < m; ++j)
        arow[j] -= ui * std::conj(p[j]) + wi * std::conj(u[j]);
    }
    for (std::size_t i = 0; i < m; ++i) {
      A(k + 1 + i, k) = 0.0;
      A(k, k + 1 + i) = 0.0;
    }
    esub[k] = -phase * xnorm;
    A(k + 1, k) = esub[k];
    A(k, k + 1) = std::conj(esub[k]);

    if (Q) {
      // Q <- Q H with H = I - beta u u* acting on rows k+1..n-1
      for (std::size_t r = 0; r < n; ++r) {
        Complex acc = 0.0;
        Complex* qrow = Q->row(r) + (k + 1);
        for (std::size_t j = 0; j < m; ++j) acc += qrow[j] * u[j];
        acc *= beta;
        for (std::size_t j = 0; j < m; ++j) qrow[j] -= acc * std::conj(u[j]);
      }
    }
  }
  if (n >= 2) esub[n - 2] = A(n - 1, n - 2);

  for (std::size_t i = 0; i < n; ++i) d[i] = std::real(A(i, i));
  // Absorb subdiagonal phases into a diagonal unitary.
  Complex delta = 1.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Complex t = esub[k];
    const double a = std::abs(t);
    e[k] = a;
    const Complex delta_next = (a == 0.0) ? delta : delta * (t / a);
    if (Q && delta_next != 1.0)
      for (std::size_t r = 0; r < n; ++r) (*Q)(r, k + 1) *= delta_next;
    delta = delta_next;
  }
}

// One complex Givens rotation: returns (c, s) with c real so that
// [c s; -conj(s) c] * [f; g] = [r; 0].
struct GivensCS {
  double c;
  Complex s;
};

GivensCS make_givens(Complex f, Complex g) {
  const double af = std::abs(f), ag = std::abs(g);
  if (ag == 0.0) return {1.0, 0.0};
  if (af == 0.0) return {0.0, std::conj(g) / ag};
  const double h = std::hypot(af, ag);
  const Complex fs = f / af;
  return {af / h, fs * std::conj(g) / h};
}

// Reduce a Hermitian matrix of half-bandwidth bw (>= 2) to tridiagonal form
// in place with bulge-chasing Givens rotations.  Only the band is touched.
// Eigenvalues-only path: rotations are not accumulated.
void band_to_tridiag(ComplexMatrix& A, std::size_t bw) {
  const std::size_t n = A.rows();
  auto apply_rows = [&](std::size_t j, std::size_t k, const GivensCS& g) {
    // rows j, k over columns in the union of their bands (clipped)
    const std::size_t lo = (j > bw + 1) ? j - bw - 1 : 0;
    const std::size_t hi = std::min(n, k + bw + 2);
    for (std::size_t c = lo; c < hi; ++c) {
      const Complex aj = A(j, c), ak = A(k, c);
      A(j, c) = g.c * aj + g.s * ak;
      A(k, c) = -std::conj(g.s) * aj + g.c * ak;
    }
  };
  auto apply_cols = [&](std::size_t j, std::size_t k, const GivensCS& g) {
    const std::size_t lo = (j > bw + 1) ? j - bw - 1 : 0;
    const std::size_t hi = std::min(n, k + bw + 2);
    for (std::size_t r = lo; r < hi; ++r) {
      const Complex aj = A(r, j), ak = A(r, k);
      A(r, j) = g.c * aj + std::conj(g.s) * ak;
      A(r, k) = -g.s * aj + g.c * ak;
    }
  };

  for (std::size_t b = bw; b >= 2; --b) {
    for (std::size_t i = 0; i + b < n; ++i) {
      // zero A(i+b, i), then chase the bulge down the band
      std::size_t q = i;
      std::size_t pr = i + b;  // row being annihilated against pr-1
      while (pr < n && A(pr, q) != 0.0) {
        const GivensCS g = make_givens(A(pr - 1, q), A(pr, q));
        apply_rows(pr - 1, pr, g);
        apply_cols(pr - 1, pr, g);
        A(pr, q) = 0.0;
        A(q, pr) = 0.0;
        A(pr - 1, pr - 1) = std::real(A(pr - 1, pr - 1));
        A(pr, pr) = std::real(A(pr, pr));
        // the rotation fills (pr-1 + b+1, pr-1) when inside the matrix
        q = pr - 1;
        pr = q + b + 1;
      }
    }
  }
}

std::vector<double> sorted_values(std::vector<double> d) {
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::vector<double> eig_hermitian_values(const ComplexMatrix& M, const Tolerances& tol) {
  require_hermitian_input(M, tol, "eig_hermitian_values");
  const std::size_t n = M.rows();
  if (n == 1) return {std::real(M(0, 0))};

  const std::size_t bw = half_bandwidth(M);
  std::vector<double> d(n), e(n, 0.0);
  if (bw == 0) {
    for (std::size_t i = 0; i < n; ++i) d[i] = std::real(M(i, i));
    return sorted_values(d);
  }
  if (bw == 1) {
    for (std::size_t i = 0; i < n; ++i) d[i] = std::real(M(i, i));
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::abs(M(i + 1, i));
    tql_implicit(d, e, nullptr);
    return sorted_values(d);
  }
  if (bw <= 8 && bw * 4 < n) {
    ComplexMatrix A = M;
    band_to_tridiag(A, bw);
    for (std::size_t i = 0; i < n; ++i) d[i] = std::real(A(i, i));
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::abs(A(i + 1, i));
    tql_implicit(d, e, nullptr);
    return sorted_values(d);
  }
  ComplexMatrix A = M;
  householder_tridiag(A, d, e, nullptr);
  tql_implicit(d, e, nullptr);
  return sorted_values(d);
}

EigenDecomposition eig_hermitian(const ComplexMatrix& M, const Tolerances& tol) {
  require_hermitian_input(M, tol, "eig_hermitian");
  const std::size_t n = M.rows();
  EigenDecomposition out;
  std::vector<double> d(n), e(n, 0.0);
  ComplexMatrix Q;

  if (n == 1) {
    out.eigenvalues = {std::real(M(0, 0))};
    out.eigenvectors = ComplexMatrix::identity(1);
    return out;
  }
  if (half_bandwidth(M) <= 1) {
    // already tridiagonal; absorb subdiagonal phases and rotate directly
    Q = ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = std::real(M(i, i));
    Complex delta = 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Complex t = M(i + 1, i);
      const double a = std::abs(t);
      e[i] = a;
      delta = (a == 0.0) ? delta : delta * (t / a);
      Q(i + 1, i + 1) = delta;
    }
    tql_implicit(d, e, &Q);
  } else {
    ComplexMatrix A = M;
    householder_tridiag(A, d, e, &Q);
    tql_implicit(d, e, &Q);
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = d[idx[k]];
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = Q(r, idx[k]);
  }
  return out;
}

double smallest_singular_value(const ComplexMatrix& T, const Tolerances& tol) {
  if (T.rows() == 0 || T.cols() == 0)
    throw std::invalid_argument("smallest_singular_value: empty matrix");
  if (!T.all_finite())
    throw std::invalid_argument("smallest_singular_value: non-finite entries");
  if (T.rows() == T.cols() && T.is_hermitian(tol)) {
    double mn = std::numeric_limits<double>::infinity();
    for (double v : eig_hermitian_values(T, tol)) mn = std::min(mn, std::abs(v));
    return mn;
  }
  const ComplexMatrix TtT = multiply(T.adjoint(), T);
  const auto vals = eig_hermitian_values(TtT, tol);
  return std::sqrt(std::max(0.0, vals.front()));
}

double operator_norm(const ComplexMatrix& M, const Tolerances& tol) {
  if (M.rows() == 0 || M.cols() == 0) return 0.0;
  if (!M.all_finite()) throw std::invalid_argument("operator_norm: non-finite entries");
  const ComplexMatrix MtM = multiply(M.adjoint(), M);
  const auto vals = eig_hermitian_values(MtM, tol);
  return std::sqrt(std::max(0.0, vals.back()));
}

ComplexMatrix matrix_function_hermitian(const ComplexMatrix& M,
                                        const std::function<double(double)>& g,
                                        const Tolerances& tol) {
  const EigenDecomposition ed = eig_hermitian(M, tol);
  const std::size_t n = M.rows();
  std::vector<double> gl(n);
  for (std::size_t k = 0; k < n; ++k) {
    gl[k] = g(ed.eigenvalues[k]);
    if (!std::isfinite(gl[k]))
      throw std::invalid_argument("matrix_function_hermitian: g not finite on spectrum");
  }
  // V diag(g) V*
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = ed.eigenvectors(i, k) * gl[k];
      Complex* orow = out.row(i);
      for (std::size_t j = 0; j < n; ++j)
        orow[j] += vik * std::conj(ed.eigenvectors(j, k));
    }
  }
  return out;
}

}  // namespace cliffspec
