#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cliffspec/matrix_core.hpp"

namespace cliffspec {

/// Transfer matrix for the null-vector recurrence of the truncated
/// hemisphere localizer at probe (x, 0, z), with the corner weight b
/// entering only through the initial vector.
struct TransferState {
  double x = 0.0;
  double z = 0.0;
  double b = 1.0;
  std::array<double, 4> M{};   // row-major 2x2, symmetric, det = 1
  std::array<double, 2> v0{};  // (a_2, a_3)

  double trace() const { return M[0] + M[3]; }
  double det() const { return M[0] * M[3] - M[1] * M[2]; }
};

TransferState transfer_state(double x, double z, double b = 1.0);

double e_poly(double x, double z);
double f_poly(double x, double z);

/// The general-b discrete-spectrum surface in (b, r, z); b = 1 reduces to
/// e_poly(r, z).
double general_b_surface(double b, double r, double z);

/// One-variable reduction of f along the b = 1 curve x(z).
double f_on_curve(double z);

/// Closed-form curve abscissa for b = 1: x = |z-1|^(1/2) (z^2-z+1)^(1/4).
double curve_x_closed(double z);

struct MembershipReport {
  bool member = false;
  bool double_eigenvalue = false;  // Tr(M) = 2 case, excluded
  double eig_small = 0.0;          // transfer eigenvalue in (0,1) when defined
  double residual = 0.0;           // ||M v0 - mu v0|| / ||v0||
};

/// v0 must be an eigenvector of M for the eigenvalue inside (0,1).
MembershipReport eigen_membership(const TransferState& state, double tol = 1e-8);

/// Residual ||L a|| / ||a|| of the candidate null vector against the
/// truncated localizer of size 2N.  The recurrence is propagated on the
/// contracting eigenbranch of the transfer matrix; propagating the raw
/// two-term recurrence in floating point would excite the growing branch.
double null_vector_residual(double x, double z, std::size_t N, double b = 1.0);

struct CurvePoint {
  double x = 0.0;
  double z = 0.0;
  double e_val = 0.0;
  double f_val = 0.0;
  double eig_small = 0.0;
  double residual = 0.0;
};

struct CurveRejection {
  double z = 0.0;
  std::optional<double> x;  // absent if no root was found
  std::string cause;        // constraint, f-sign, eigenvalue test, no-root, ...
};

struct CurveTrace {
  double b = 1.0;
  bool experimental = false;  // b > 2.25 is outside the stated validity range
  std::vector<CurvePoint> accepted;
  std::vector<CurveRejection> rejected;
};

/// Trace the discrete-spectrum curve at the given z samples.  b = 1 uses the
/// closed form; other b root-find the general surface in r at fixed z.
CurveTrace curve_trace(double b, const std::vector<double>& z_samples,
                       std::size_t residual_N = 200, double curve_tol = 1e-10);

struct SpecialCasesReport {
  double z = 0.0;
  std::array<double, 3> determinants{};  // of the x = 0 blocks
  bool singular = false;
};

/// x = 0 block analysis of the localizer (b = 1 block pattern).
SpecialCasesReport special_cases(double z, double b = 1.0, double tol = 1e-12);

struct CurveSignReport {
  bool pass = false;
  std::size_t checked = 0;
  std::vector<double> violations;  // offending z values
};

/// Sign pattern of f restricted to the curve: >= 0 on [0,1], <= 0 on
/// z <= 0, >= 0 on z >= 1.
CurveSignReport f_on_curve_sign_check(const std::vector<double>& z_samples,
                                              double slack = 1e-12);

}  // namespace cliffspec
