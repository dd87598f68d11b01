#include "cliffspec/hemisphere.hpp"

#include <cmath>
#include <stdexcept>

namespace cliffspec {

TransferState transfer_state(double x, double z, double b) {
  if (!(x > 0.0))
    throw std::invalid_argument(
        "transfer_state: x must be positive; x = 0 is handled by special_cases");
  TransferState s;
  s.x = x;
  s.z = z;
  s.b = b;
  s.M = {1.0 / x, -z / x, -z / x, (x * x + z * z) / x};
  const double bz = b - z;
  s.v0 = {bz / x, x + bz * bz / x};
  return s;
}

double e_poly(double x, double z) {
  return x * x * x * x - z * z * z * z + 3.0 * z * z * z - 4.0 * z * z + 3.0 * z - 1.0;
}

double f_poly(double x, double z) {
  return x * x * z - x * z + x + z * z * z - 2.0 * z * z + 2.0 * z - 1.0;
}

double general_b_surface(double b, double r, double z) {
  const double b2 = b * b, b3 = b2 * b, b4 = b3 * b;
  const double r2 = r * r, r4 = r2 * r2;
  const double z2 = z * z, z3 = z2 * z, z4 = z3 * z;
  return b4 * z + b3 * r2 - 3.0 * b3 * z2 - b3 - b2 * r2 * z + 3.0 * b2 * z3 + 2.0 * b2 * z +
         b * r4 - b * r2 - b * z4 - b * z2 + r2 * z;
}

double curve_x_closed(double z) {
  return std::sqrt(std::abs(z - 1.0)) * std::pow(z * z - z + 1.0, 0.25);
}

double f_on_curve(double z) {
  const double q = z * z - z + 1.0;
  const double az = std::abs(z - 1.0);
  return z * az * std::sqrt(q) - (z - 1.0) * std::sqrt(az) * std::pow(q, 0.25) +
         (z - 1.0) * q;
}

namespace {

struct TransferEigen {
  double mu_small = 0.0;
  double mu_big = 0.0;
  std::array<double, 2> w_small{};  // unit eigenvector for mu_small
  std::array<double, 2> w_big{};
  bool degenerate = false;
};

TransferEigen transfer_eigen(const TransferState& s) {
  TransferEigen out;
  const double tr = s.trace();
  const double disc = tr * tr - 4.0;
  if (disc <= 0.0) {
    // Tr >= 2 always holds; equality only at (x,z) = (1,0)
    out.degenerate = true;
    out.mu_small = out.mu_big = 0.5 * tr;
    out.w_small = {1.0, 0.0};
    out.w_big = {0.0, 1.0};
    return out;
  }
  const double root = std::sqrt(disc);
  out.mu_big = 0.5 * (tr + root);
  out.mu_small = 0.5 * (tr - root);  // = 1/mu_big since det(M) = 1
  // eigenvector of the symmetric 2x2 for mu: (M - mu) w = 0
  auto unit_vec = [&](double mu) -> std::array<double, 2> {
    const double a = s.M[0] - mu, c = s.M[3] - mu, off = s.M[1];
    double wx, wy;
    if (std::abs(a) >= std::abs(c)) {
      wx = -off;
      wy = a;
    } else {
      wx = c;
      wy = -off;
    }
    const double n = std::hypot(wx, wy);
    if (n == 0.0) return {1.0, 0.0};
    return {wx / n, wy / n};
  };
  out.w_small = unit_vec(out.mu_small);
  out.w_big = unit_vec(out.mu_big);
  return out;
}

}  // namespace

MembershipReport eigen_membership(const TransferState& state, double tol) {
  MembershipReport out;
  const TransferEigen eg = transfer_eigen(state);
  if (eg.degenerate || std::abs(state.trace() - 2.0) <= 1e-12) {
    out.double_eigenvalue = true;
    return out;
  }
  out.eig_small = eg.mu_small;
  const double r0 = state.M[0] * state.v0[0] + state.M[1] * state.v0[1] -
                    eg.mu_small * state.v0[0];
  const double r1 = state.M[2] * state.v0[0] + state.M[3] * state.v0[1] -
                    eg.mu_small * state.v0[1];
  const double vnorm = std::hypot(state.v0[0], state.v0[1]);
  out.residual = (vnorm == 0.0) ? 0.0 : std::hypot(r0, r1) / vnorm;
  out.member = out.residual <= tol && eg.mu_small > 0.0 && eg.mu_small < 1.0;
  return out;
}

double null_vector_residual(double x, double z, std::size_t N, double b) {
  if (N < 4) throw std::invalid_argument("null_vector_residual: N too small");
  const TransferState st = transfer_state(x, z, b);
  const TransferEigen eg = transfer_eigen(st);

  // a_1 = 1; pair p_1 = v0 fixed by the first two rows; subsequent pairs
  // follow the contracting branch: p_n = c_s mu_s^(n-1) w_s.
  const std::size_t len = 2 * N;
  std::vector<double> a(len, 0.0);
  a[0] = 1.0;
  a[1] = st.v0[0];
  a[2] = st.v0[1];
  const double cs = st.v0[0] * eg.w_small[0] + st.v0[1] * eg.w_small[1];
  double scale = cs * eg.mu_small;
  for (std::size_t n = 2;; ++n) {
    const std::size_t i = 2 * n - 1;  // zero-based slot of a_{2n}
    if (i >= len) break;
    a[i] = scale * eg.w_small[0];
    if (i + 1 < len) a[i + 1] = scale * eg.w_small[1];
    scale *= eg.mu_small;
  }

  // || L a || for the 2N-truncated tridiagonal localizer:
  // diag (b-z, z-b, -z, z, -z, z, ...), offdiag (-x, 1, -x, 1, ...)
  auto diag_at = [&](std::size_t i) {  // zero-based
    if (i == 0) return b - z;
    if (i == 1) return z - b;
    return (i % 2 == 0) ? -z : z;
  };
  auto off_at = [&](std::size_t i) {  // coupling (i, i+1), zero-based
    return (i % 2 == 0) ? -x : 1.0;
  };
  double r2 = 0.0, n2 = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    double row = diag_at(i) * a[i];
    if (i > 0) row += off_at(i - 1) * a[i - 1];
    if (i + 1 < len) row += off_at(i) * a[i + 1];
    r2 += row * row;
    n2 += a[i] * a[i];
  }
  return std::sqrt(r2 / n2);
}

CurveTrace curve_trace(double b, const std::vector<double>& z_samples, std::size_t residual_N,
                       double curve_tol) {
  if (!(b >= 0.0)) throw std::invalid_argument("curve_trace: b must be >= 0");
  CurveTrace out;
  out.b = b;
  out.experimental = b > 2.25;

  auto consider = [&](double z, double x) {
    if (z < 0.0 || z > b) {
      out.rejected.push_back({z, x, "constraint: z outside [0, b]"});
      return;
    }
    if (x * x > 1.0 + 1e-12) {
      out.rejected.push_back({z, x, "constraint: r^2 > 1"});
      return;
    }
    if (x <= 0.0) {
      // x = 0 points belong to the block-diagonal analysis
      out.rejected.push_back({z, x, "x = 0 handled by special_cases"});
      return;
    }
    const TransferState st = transfer_state(x, z, b);
    CurvePoint p;
    p.x = x;
    p.z = z;
    p.e_val = e_poly(x, z);
    p.f_val = f_poly(x, z);
    const MembershipReport m = eigen_membership(st, 1e-6);
    if (m.double_eigenvalue) {
      out.rejected.push_back({z, x, "double transfer eigenvalue (excluded point)"});
      return;
    }
    if (!m.member) {
      const bool f_bad = (z < 1.0 && p.f_val < -curve_tol) || (z > 1.0 && p.f_val > curve_tol);
      out.rejected.push_back({z, x, f_bad ? "f-sign" : "eigenvalue test"});
      return;
    }
    p.eig_small = m.eig_small;
    p.residual = null_vector_residual(x, z, residual_N, b);
    out.accepted.push_back(p);
  };

  for (double z : z_samples) {
    if (b == 1.0) {
      if (std::abs(z - 1.0) < 1e-14) {
        // only the point (0,0,1) lies on the line z = 1
        out.rejected.push_back({z, 0.0, "x = 0 handled by special_cases"});
        continue;
      }
      consider(z, curve_x_closed(z));
      continue;
    }
    // general b: bracketed bisection of the surface in r over [0, 1.2]
    const int grid = 1200;
    const auto g = [&](double r) { return general_b_surface(b, r, z); };
    bool bracketed = false;
    double prev_r = 0.0, prev_g = g(0.0);
    for (int k = 1; k <= grid; ++k) {
      const double r = 1.2 * double(k) / grid;
      const double gr = g(r);
      if ((prev_g < 0.0 && gr > 0.0) || (prev_g > 0.0 && gr < 0.0) || gr == 0.0) {
        bracketed = true;
        double lo = prev_r, hi = r, glo = prev_g;
        for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double gm = g(mid);
          if ((glo < 0.0) == (gm < 0.0)) {
            lo = mid;
            glo = gm;
          } else {
            hi = mid;
          }
        }
        if (hi - lo > 1e-10)
          out.rejected.push_back({z, 0.5 * (lo + hi), "root-finder non-convergence"});
        else
          consider(z, 0.5 * (lo + hi));
      }
      prev_r = r;
      prev_g = gr;
    }
    if (!bracketed) out.rejected.push_back({z, std::nullopt, "no-root"});
  }
  return out;
}

SpecialCasesReport special_cases(double z, double b, double tol) {
  SpecialCasesReport out;
  out.z = z;
  // x = 0 makes the localizer block diagonal: [b-z], [[z-b,1],[1,-z]], [[z,1],[1,-z]], ...
  out.determinants = {b - z, -z * (z - b) - 1.0, -z * z - 1.0};
  out.singular = false;
  for (double det : out.determinants)
    if (std::abs(det) <= tol) out.singular = true;
  return out;
}

CurveSignReport f_on_curve_sign_check(const std::vector<double>& z_samples,
                                              double slack) {
  CurveSignReport out;
  for (double z : z_samples) {
    ++out.checked;
    const double v = f_on_curve(z);
    bool ok = true;
    if (z >= 0.0 && z <= 1.0)
      ok = v >= -slack;
    else if (z <= 0.0)
      ok = v <= slack;
    else
      ok = v >= -slack;
    if (!ok) out.violations.push_back(z);
  }
  out.pass = out.violations.empty();
  return out;
}

}  // namespace cliffspec
