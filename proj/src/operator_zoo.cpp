#include "cliffspec/operator_zoo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace cliffspec {

namespace {

// Guarded square root: tiny negative radicands are rounding, anything worse
// signals a misused formula.
double safe_sqrt(double radicand) {
  if (radicand < -1e-9)
    throw std::domain_error("negative radicand " + std::to_string(radicand) +
                            " beyond rounding slack");
  return std::sqrt(std::max(0.0, radicand));
}

}  // namespace

void ZooSpec::validate() const {
  switch (kind) {
    case Kind::commuting_points: {
      if (points.empty()) throw std::invalid_argument("commuting_points: no points");
      const std::size_t d = points.front().size();
      if (d == 0) throw std::invalid_argument("commuting_points: zero-dimensional points");
      for (const auto& p : points)
        if (p.size() != d)
          throw std::invalid_argument("commuting_points: inconsistent point dimensions");
      break;
    }
    case Kind::pauli:
    case Kind::universal_pair:
      break;
    case Kind::two_projection:
      if (!(z >= -1.0 && z <= 1.0))
        throw std::invalid_argument("two_projection: z must lie in [-1, 1]");
      break;
    case Kind::hemisphere:
      if (!(b >= 0.0)) throw std::invalid_argument("hemisphere: b must be >= 0");
      if (n < 4) throw std::invalid_argument("hemisphere: truncation must be >= 4");
      break;
    case Kind::position_momentum:
      if (n < 16) throw std::invalid_argument("position_momentum: truncation must be >= 16");
      if (!(box > 0.0)) throw std::invalid_argument("position_momentum: box must be > 0");
      break;
  }
}

std::string ZooSpec::kind_name() const {
  switch (kind) {
    case Kind::commuting_points: return "commuting_points";
    case Kind::pauli: return "pauli";
    case Kind::two_projection: return "two_projection";
    case Kind::universal_pair: return "universal_pair";
    case Kind::hemisphere: return "hemisphere";
    case Kind::position_momentum: return "position_momentum";
  }
  return "?";
}

ZooSpec::Kind ZooSpec::kind_from_name(const std::string& name) {
  if (name == "commuting_points") return Kind::commuting_points;
  if (name == "pauli") return Kind::pauli;
  if (name == "two_projection") return Kind::two_projection;
  if (name == "universal_pair") return Kind::universal_pair;
  if (name == "hemisphere") return Kind::hemisphere;
  if (name == "position_momentum") return Kind::position_momentum;
  throw std::invalid_argument("unknown zoo kind '" + name + "'");
}

HermitianTuple build(const ZooSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ZooSpec::Kind::commuting_points: {
      const std::size_t d = spec.points.front().size();
      const std::size_t n = spec.points.size();
      std::vector<ComplexMatrix> ops;
      for (std::size_t j = 0; j < d; ++j) {
        ComplexMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = spec.points[k][j];
        ops.push_back(std::move(m));
      }
      return HermitianTuple(std::move(ops));
    }
    case ZooSpec::Kind::pauli:
      return HermitianTuple({sigma_x(), sigma_y(), sigma_z()});
    case ZooSpec::Kind::two_projection: {
      const double w = std::sqrt(std::max(0.0, 1.0 - spec.z * spec.z));
      ComplexMatrix V(2, 2);
      V(0, 0) = spec.z;
      V(0, 1) = w;
      V(1, 0) = w;
      V(1, 1) = -spec.z;
      return HermitianTuple({sigma_z(), V});
    }
    case ZooSpec::Kind::universal_pair:
      throw std::invalid_argument(
          "universal_pair is not a finite tuple; use universal_pair_pseudospectra");
    case ZooSpec::Kind::hemisphere: {
      const std::size_t n = spec.n;
      // truncations of (S* + S)/2, i(S - S*)/2, b e_1 e_1*
      ComplexMatrix a1(n, n), a2(n, n), a3(n, n);
      for (std::size_t k = 0; k + 1 < n; ++k) {
        a1(k, k + 1) = 0.5;
        a1(k + 1, k) = 0.5;
        a2(k, k + 1) = Complex(0.0, -0.5);
        a2(k + 1, k) = Complex(0.0, 0.5);
      }
      a3(0, 0) = spec.b;
      return HermitianTuple({a1, a2, a3});
    }
    case ZooSpec::Kind::position_momentum: {
      const std::size_t n = spec.n;
      const double L = spec.box;
      const double h = 2.0 * L / double(n - 1);
      ComplexMatrix q(n, n), p(n, n);
      for (std::size_t k = 0; k < n; ++k) q(k, k) = -L + double(k) * h;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        p(k, k + 1) = Complex(0.0, -1.0 / (2.0 * h));
        p(k + 1, k) = Complex(0.0, 1.0 / (2.0 * h));
      }
      return HermitianTuple({p, q});
    }
  }
  throw std::logic_error("unreachable");
}

double mu_q_two_projection_closed(double x, double y, double z) {
  if (!(z >= -1.0 && z <= 1.0))
    throw std::invalid_argument("mu_q_two_projection_closed: z outside [-1, 1]");
  const double inner = safe_sqrt(x * x + 2.0 * z * x * y + y * y);
  return safe_sqrt(x * x + y * y + 2.0 - 2.0 * inner);
}

double mu_c_two_projection_closed(double x, double y, double z) {
  if (!(z >= -1.0 && z <= 1.0))
    throw std::invalid_argument("mu_c_two_projection_closed: z outside [-1, 1]");
  const double inner = safe_sqrt(x * x + 2.0 * x * y * z + y * y + 1.0 - z * z);
  return safe_sqrt(x * x + y * y + 2.0 - 2.0 * inner);
}

double mu_q_universal_closed(double x, double y) {
  double best = std::numeric_limits<double>::infinity();
  for (double cx : {-1.0, 1.0})
    for (double cy : {-1.0, 1.0})
      best = std::min(best, std::hypot(x - cx, y - cy));
  return best;
}

double mu_c_universal_closed(double x, double y) {
  const double xy = x * y;
  if (xy < -1.0 || xy > 1.0) return mu_q_universal_closed(x, y);
  const double inner = safe_sqrt(x * x * y * y + x * x + y * y + 1.0);
  return safe_sqrt(x * x + y * y + 2.0 - 2.0 * inner);
}

UniversalValues universal_pair_pseudospectra(double x, double y,
                                             const std::vector<double>& z_grid) {
  if (z_grid.empty())
    throw std::invalid_argument("universal_pair_pseudospectra: empty z grid");
  UniversalValues out{std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity()};
  for (double z : z_grid) {
    out.mu_q = std::min(out.mu_q, mu_q_two_projection_closed(x, y, z));
    out.mu_c = std::min(out.mu_c, mu_c_two_projection_closed(x, y, z));
  }
  return out;
}

std::vector<double> uniform_z_grid(double h) {
  if (!(h > 0.0 && h <= 2.0)) throw std::invalid_argument("uniform_z_grid: bad spacing");
  const std::size_t steps = std::size_t(std::ceil(2.0 / h));
  std::vector<double> grid(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k)
    grid[k] = -1.0 + 2.0 * double(k) / double(steps);
  grid.front() = -1.0;
  grid.back() = 1.0;
  return grid;
}

std::string zoo_to_json(const ZooSpec& spec) {
  nlohmann::json j;
  j["kind"] = spec.kind_name();
  switch (spec.kind) {
    case ZooSpec::Kind::commuting_points: j["points"] = spec.points; break;
    case ZooSpec::Kind::two_projection: j["z"] = spec.z; break;
    case ZooSpec::Kind::hemisphere:
      j["b"] = spec.b;
      j["n"] = spec.n;
      break;
    case ZooSpec::Kind::position_momentum:
      j["n"] = spec.n;
      j["l"] = spec.box;
      break;
    default: break;
  }
  return j.dump();
}

ZooSpec zoo_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  ZooSpec spec;
  spec.kind = ZooSpec::kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("points")) spec.points = j["points"].get<std::vector<std::vector<double>>>();
  if (j.contains("z")) spec.z = j["z"].get<double>();
  if (j.contains("b")) spec.b = j["b"].get<double>();
  if (j.contains("n")) spec.n = j["n"].get<std::size_t>();
  if (j.contains("l")) spec.box = j["l"].get<double>();
  spec.validate();
  return spec;
}

}  // namespace cliffspec
