#pragma once

#include <string>
#include <vector>

#include "cliffspec/pseudospectra.hpp"

namespace cliffspec {

/// Parameters for the concrete example families.
struct ZooSpec {
  enum class Kind {
    commuting_points,
    pauli,
    two_projection,
    universal_pair,
    hemisphere,
    position_momentum,
  };

  Kind kind = Kind::pauli;
  std::vector<std::vector<double>> points;  // commuting_points
  double z = 0.0;                           // two_projection, -1 <= z <= 1
  double b = 1.0;                           // hemisphere corner weight, b >= 0
  std::size_t n = 64;                       // truncation size
  double box = 12.0;                        // position_momentum half-width L > 0

  void validate() const;
  std::string kind_name() const;
  static Kind kind_from_name(const std::string& name);
};

/// Build the finite Hermitian tuple for a spec.  The universal pair is not a
/// finite tuple; it is evaluated through fiber minimization below.
HermitianTuple build(const ZooSpec& spec);

/// Closed forms for the order-two pair (U, V_z) at probe (x, y).
double mu_q_two_projection_closed(double x, double y, double z);
double mu_c_two_projection_closed(double x, double y, double z);

/// Closed forms for the universal pair.
double mu_q_universal_closed(double x, double y);
double mu_c_universal_closed(double x, double y);

struct UniversalValues {
  double mu_q;
  double mu_c;
};

/// Fiber minimization of the closed forms over a sorted sample of [-1, 1].
UniversalValues universal_pair_pseudospectra(double x, double y,
                                             const std::vector<double>& z_grid);

/// Uniformly spaced z grid with ~spacing h covering [-1, 1], endpoints exact.
std::vector<double> uniform_z_grid(double h);

/// JSON form {"kind": ..., params...} consumed by the CLI.
std::string zoo_to_json(const ZooSpec& spec);
ZooSpec zoo_from_json(const std::string& text);

}  // namespace cliffspec
