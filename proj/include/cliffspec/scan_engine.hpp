#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliffspec/pseudospectra.hpp"

namespace cliffspec {

/// Rectangular lattice over a box in parameter space.
struct Region {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<std::size_t> res;  // points per axis, >= 2

  void validate() const;
  std::size_t dims() const { return lo.size(); }
  std::size_t point_count() const;
  /// coordinate of index k on axis a: lo + k * (hi - lo)/(res - 1)
  double coord(std::size_t axis, std::size_t k) const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;
  std::vector<double> point(std::size_t flat) const;
  /// max lattice spacing over axes
  double spacing() const;
};

/// Affine embedding of scan parameters into probe space; identity when the
/// region already lives in lambda coordinates.  Used for planar slices such
/// as (x, 0, z).
struct PlaneEmbedding {
  std::vector<double> origin;
  std::vector<std::vector<double>> axes;  // one direction per region axis

  std::vector<double> map(const std::vector<double>& u) const;
  static PlaneEmbedding identity(std::size_t d);
};

struct WhichValues {
  bool c = true;
  bool q = false;
  bool w = false;
};

struct ScanGrid {
  Region region;
  PlaneEmbedding embedding;
  WhichValues which;
  double epsilon = 0.0;  // membership threshold used by zero_set defaults
  std::vector<PseudospectrumSample> values;  // index-ordered, deterministic
};

using FieldEvaluator = std::function<PseudospectrumSample(const std::vector<double>& lambda)>;

/// Evaluate an arbitrary field over the lattice.  Work is split across
/// `workers` threads; results are assembled by index, never by completion
/// order, so output is deterministic for any worker count.
ScanGrid grid_scan_field(const Region& region, const PlaneEmbedding& embedding,
                         const WhichValues& which, const FieldEvaluator& eval,
                         std::size_t workers = 0);

/// Pseudospectra of a Hermitian tuple over a lattice in lambda space.
ScanGrid grid_scan(const HermitianTuple& A, const Region& region, const WhichValues& which,
                   const GammaRep& rep, std::size_t workers = 0,
                   const Tolerances& tol = default_tolerances());

/// Planar slice: region axes map through the embedding into lambda space.
ScanGrid planar_scan(const HermitianTuple& A, const Region& region2,
                     const PlaneEmbedding& embedding, const WhichValues& which,
                     const GammaRep& rep, std::size_t workers = 0,
                     const Tolerances& tol = default_tolerances());

struct ZeroSetPoint {
  std::vector<std::size_t> index;
  std::vector<double> lambda;
  double mu_c = 0.0;
};

/// Lattice points with mu_c <= eps; monotone in eps.
std::vector<ZeroSetPoint> zero_set(const ScanGrid& grid, double eps);

/// 1-D slice lambda = t * direction.
std::vector<PseudospectrumSample> radial_profile(const HermitianTuple& A,
                                                 const std::vector<double>& direction,
                                                 const std::vector<double>& t_samples,
                                                 const WhichValues& which, const GammaRep& rep,
                                                 const Tolerances& tol = default_tolerances());

struct BisectResult {
  bool found = false;
  double t_star = 0.0;
  double mu_at_t = 0.0;
};

/// Localize a transversal dip of mu^C along a ray by coarse bracketing plus
/// golden-section refinement.  Reports failure when no sample dips below
/// eps_dip.
BisectResult bisect_zero(const HermitianTuple& A, const std::vector<double>& direction,
                         double t_lo, double t_hi, double tol_t, double eps_dip,
                         const GammaRep& rep,
                         const Tolerances& tol = default_tolerances());

struct SweepPoint {
  std::vector<double> lambda;
  std::vector<double> mu;  // one value per truncation size
  bool monotone_decreasing = true;
};

struct TruncationSweep {
  std::vector<std::size_t> sizes;
  std::vector<SweepPoint> points;
};

/// Evaluate mu^C at fixed probes across truncation sizes N, 2N, 4N (or any
/// explicit list) and report per-point monotone trends.
TruncationSweep truncation_sweep(const std::function<HermitianTuple(std::size_t)>& builder,
                                 const std::vector<std::size_t>& sizes,
                                 const std::vector<std::vector<double>>& probes,
                                 const GammaRep& rep,
                                 const Tolerances& tol = default_tolerances());

/// Fixed-layout CSV: one row per point, 17 significant digits.
std::string grid_to_csv(const ScanGrid& grid);

/// JSON document with region header and flat value array.
std::string grid_to_json(const ScanGrid& grid);

}  // namespace cliffspec
