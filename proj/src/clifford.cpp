#include "cliffspec/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace cliffspec {

ComplexMatrix sigma_x() {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix sigma_y() {
  ComplexMatrix m(2, 2);
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

ComplexMatrix sigma_z() {
  ComplexMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

namespace {

// Odd-d representation built recursively from the d=3 Pauli base.
GammaRep gamma_rep_odd(std::size_t d) {
  GammaRep rep;
  rep.d = d;
  if (d == 1) {
    rep.size = 1;
    ComplexMatrix one(1, 1);
    one(0, 0) = 1.0;
    rep.gammas = {one};
    return rep;
  }
  if (d == 3) {
    rep.size = 2;
    rep.gammas = {sigma_x(), sigma_y(), sigma_z()};
    return rep;
  }
  const GammaRep base = gamma_rep_odd(d - 2);
  rep.size = base.size * 2;
  rep.gammas.reserve(d);
  const ComplexMatrix eye = ComplexMatrix::identity(base.size);
  for (const auto& g : base.gammas) rep.gammas.push_back(kron(g, sigma_z()));
  rep.gammas.push_back(kron(eye, sigma_x()));
  rep.gammas.push_back(kron(eye, sigma_y()));
  return rep;
}

}  // namespace

GammaRep gamma_rep(std::size_t d) {
  if (d < 1 || d > 20)
    throw std::invalid_argument("gamma_rep: d must be in [1, 20], got " + std::to_string(d));
  if (d == 2) {
    GammaRep rep;
    rep.d = 2;
    rep.size = 2;
    rep.gammas = {sigma_x(), sigma_y()};
    return rep;
  }
  if (d % 2 == 1) return gamma_rep_odd(d);
  GammaRep rep = gamma_rep_odd(d + 1);
  rep.gammas.pop_back();
  rep.d = d;
  return rep;
}

double CliffordReport::worst() const {
  return std::max(max_hermitian_violation,
                  std::max(max_involution_violation, max_anticommutation_violation));
}

CliffordReport verify_clifford(const GammaRep& rep, double tol) {
  CliffordReport r;
  const std::size_t n = rep.size;
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  for (const auto& g : rep.gammas) {
    r.max_hermitian_violation = std::max(r.max_hermitian_violation, g.hermitian_deviation());
    ComplexMatrix sq = multiply(g, g);
    sq -= eye;
    r.max_involution_violation = std::max(r.max_involution_violation, sq.max_abs());
  }
  for (std::size_t j = 0; j < rep.gammas.size(); ++j)
    for (std::size_t k = j + 1; k < rep.gammas.size(); ++k) {
      ComplexMatrix ac = multiply(rep.gammas[j], rep.gammas[k]);
      ac += multiply(rep.gammas[k], rep.gammas[j]);
      r.max_anticommutation_violation = std::max(r.max_anticommutation_violation, ac.max_abs());
    }
  r.pass = r.worst() <= tol;
  return r;
}

SpectrumCheckReport linear_combination_spectrum_check(const GammaRep& rep,
                                                      const std::vector<double>& alpha,
                                                      const Tolerances& tol) {
  if (alpha.size() != rep.d)
    throw std::invalid_argument("linear_combination_spectrum_check: alpha length != d");
  ComplexMatrix sum(rep.size, rep.size);
  double norm2 = 0.0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    ComplexMatrix term = rep.gammas[j];
    term *= alpha[j];
    sum += term;
    norm2 += alpha[j] * alpha[j];
  }
  const double target = std::sqrt(norm2);
  SpectrumCheckReport out;
  for (double ev : eig_hermitian_values(sum, tol))
    out.max_deviation = std::max(out.max_deviation, std::abs(std::abs(ev) - target));
  out.pass = out.max_deviation <= tol.eig_tol * std::max(1.0, target);
  return out;
}

GammaRep conjugated_rep(const GammaRep& rep, const ComplexMatrix& U) {
  if (U.rows() != rep.size || U.cols() != rep.size)
    throw std::invalid_argument("conjugated_rep: unitary size mismatch");
  GammaRep out;
  out.d = rep.d;
  out.size = rep.size;
  const ComplexMatrix Ua = U.adjoint();
  for (const auto& g : rep.gammas) out.gammas.push_back(multiply(multiply(U, g), Ua));
  return out;
}

}  // namespace cliffspec
