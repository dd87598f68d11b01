// cliffspec: joint spectra and pseudospectra of noncommuting Hermitian
// tuples via the spectral localizer.  Subcommands build example operators,
// scan grids and slices, trace the hemisphere curve, and run the oracle and
// property suites.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <json.hpp>

#include "cliffspec/emit.hpp"
#include "cliffspec/hemisphere.hpp"
#include "cliffspec/operator_zoo.hpp"
#include "cliffspec/scan_engine.hpp"

using namespace cliffspec;

namespace {

struct CommonOpts {
  std::string zoo = "pauli";
  std::string zoo_json;
  double b = 1.0;
  double z = 0.0;
  std::size_t n_trunc = 64;
  double box = 12.0;
  std::string points_json;
  std::string region = "";
  std::size_t res = 41;
  double epsilon = -1.0;  // <0: default to grid spacing
  std::string which = "c";
  std::uint64_t seed = 1;
  std::string out = "out";
  std::size_t workers = 0;
  std::string format = "csv,json,svg";
  double hz = 1e-3;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--zoo", o.zoo,
                  "example family: commuting_points|pauli|two_projection|universal_pair|"
                  "hemisphere|position_momentum");
  cmd->add_option("--zoo-json", o.zoo_json, "ZooSpec as a JSON object {kind, params}");
  cmd->add_option("--b", o.b, "hemisphere corner weight");
  cmd->add_option("--z", o.z, "two_projection parameter in [-1,1]");
  cmd->add_option("--n-trunc", o.n_trunc, "truncation size");
  cmd->add_option("--box", o.box, "position_momentum half-width L");
  cmd->add_option("--points-json", o.points_json, "commuting_points as JSON [[..],[..]]");
  cmd->add_option("--region", o.region, "scan box, lo:hi^d (e.g. -1.5:1.5^3)");
  cmd->add_option("--res", o.res, "lattice points per axis");
  cmd->add_option("--epsilon", o.epsilon, "zero-set threshold (default: grid spacing)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--which", o.which, "values to compute, subset of c,q,w");
  cmd->add_option("--seed", o.seed, "RNG seed for randomized suites");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--workers", o.workers, "worker threads (0 = hardware)");
  cmd->add_option("--format", o.format, "outputs to write, subset of csv,json,svg");
  cmd->add_option("--hz", o.hz, "universal-pair fiber grid spacing");
}

ZooSpec make_zoo(const CommonOpts& o) {
  if (!o.zoo_json.empty()) {
    std::ifstream in(o.zoo_json);
    if (in) {
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      return zoo_from_json(text);
    }
    return zoo_from_json(o.zoo_json);  // inline JSON
  }
  ZooSpec spec;
  spec.kind = ZooSpec::kind_from_name(o.zoo);
  spec.b = o.b;
  spec.z = o.z;
  spec.n = o.n_trunc;
  spec.box = o.box;
  if (!o.points_json.empty())
    spec.points = nlohmann::json::parse(o.points_json).get<std::vector<std::vector<double>>>();
  else if (spec.kind == ZooSpec::Kind::commuting_points)
    spec.points = {{0.0, 0.0, 0.0}, {1.0, 0.5, -0.5}};
  spec.validate();
  return spec;
}

std::size_t zoo_dims(const ZooSpec& spec) {
  switch (spec.kind) {
    case ZooSpec::Kind::commuting_points: return spec.points.front().size();
    case ZooSpec::Kind::pauli:
    case ZooSpec::Kind::hemisphere: return 3;
    default: return 2;
  }
}

Region parse_region(const std::string& text, std::size_t fallback_d, std::size_t res) {
  double lo = -2.0, hi = 2.0;
  std::size_t d = fallback_d;
  if (!text.empty()) {
    const auto colon = text.find(':');
    const auto caret = text.find('^');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--region", "expected lo:hi^d");
    lo = std::stod(text.substr(0, colon));
    if (caret == std::string::npos) {
      hi = std::stod(text.substr(colon + 1));
    } else {
      hi = std::stod(text.substr(colon + 1, caret - colon - 1));
      d = std::stoul(text.substr(caret + 1));
    }
  }
  Region r;
  r.lo.assign(d, lo);
  r.hi.assign(d, hi);
  r.res.assign(d, res);
  r.validate();
  return r;
}

WhichValues parse_which(const std::string& text) {
  WhichValues w{false, false, false};
  for (char c : text) {
    if (c == 'c') w.c = true;
    else if (c == 'q') w.q = true;
    else if (c == 'w') w.w = true;
    else if (c != ',' && c != ' ')
      throw CLI::ValidationError("--which", "subset of c,q,w expected");
  }
  if (!w.c && !w.q && !w.w) throw CLI::ValidationError("--which", "nothing requested");
  return w;
}

bool has_format(const CommonOpts& o, const std::string& f) {
  return o.format.find(f) != std::string::npos;
}

// Extract the 2-D slice at index k along the last axis of a 3-D grid.
ScanGrid slice_last_axis(const ScanGrid& g, std::size_t k) {
  ScanGrid out;
  out.region.lo = {g.region.lo[0], g.region.lo[1]};
  out.region.hi = {g.region.hi[0], g.region.hi[1]};
  out.region.res = {g.region.res[0], g.region.res[1]};
  out.embedding = PlaneEmbedding::identity(2);
  out.which = g.which;
  out.epsilon = g.epsilon;
  const std::size_t n2 = g.region.res[2];
  for (std::size_t i = 0; i < g.region.res[0]; ++i)
    for (std::size_t j = 0; j < g.region.res[1]; ++j)
      out.values.push_back(g.values[(i * g.region.res[1] + j) * n2 + k]);
  return out;
}

void write_grid_outputs(const CommonOpts& o, const ScanGrid& grid, const std::string& stem) {
  namespace fs = std::filesystem;
  fs::create_directories(o.out);
  if (has_format(o, "csv")) write_text_file(o.out + "/" + stem + ".csv", grid_to_csv(grid));
  if (has_format(o, "json")) {
    const std::string doc = grid_to_json(grid);
    const std::string err = validate_against_schema(doc, grid_schema_json());
    if (!err.empty()) throw std::runtime_error("grid json failed self-validation: " + err);
    write_text_file(o.out + "/" + stem + ".json", doc);
  }
  if (has_format(o, "svg")) {
    const double eps = o.epsilon > 0 ? o.epsilon : grid.epsilon;
    if (grid.region.dims() == 2) {
      if (grid.which.c)
        write_text_file(o.out + "/" + stem + "_heatmap_c.svg", svg_heatmap(grid, 'c', eps));
      if (grid.which.q)
        write_text_file(o.out + "/" + stem + "_heatmap_q.svg", svg_heatmap(grid, 'q', eps));
      if (grid.which.w)
        write_text_file(o.out + "/" + stem + "_heatmap_w.svg", svg_heatmap(grid, 'w', eps));
    } else if (grid.region.dims() == 3) {
      // central slice plus the two ends along the last axis
      const std::size_t n2 = grid.region.res[2];
      for (std::size_t k : {std::size_t(0), n2 / 2, n2 - 1}) {
        const ScanGrid s = slice_last_axis(grid, k);
        char name[64];
        std::snprintf(name, sizeof name, "%s_heatmap_c_slice%zu.svg", stem.c_str(), k);
        if (grid.which.c) write_text_file(o.out + "/" + name, svg_heatmap(s, 'c', eps));
      }
    }
  }
}

int cmd_scan(const CommonOpts& o) {
  const ZooSpec spec = make_zoo(o);
  const WhichValues which = parse_which(o.which);

  if (spec.kind == ZooSpec::Kind::universal_pair) {
    const auto zgrid = uniform_z_grid(o.hz);
    const FieldEvaluator eval = [&](const std::vector<double>& lambda) {
      PseudospectrumSample s;
      s.lambda = lambda;
      const auto v = universal_pair_pseudospectra(lambda[0], lambda[1], zgrid);
      if (which.c) s.mu_c = v.mu_c;
      if (which.q) s.mu_q = v.mu_q;
      return s;
    };
    const Region region = parse_region(o.region, 2, o.res);
    ScanGrid grid =
        grid_scan_field(region, PlaneEmbedding::identity(2), which, eval, o.workers);
    if (o.epsilon > 0) grid.epsilon = o.epsilon;
    write_grid_outputs(o, grid, "grid");
    std::printf("scan: universal_pair, %zu points, epsilon %.6g\n", grid.values.size(),
                grid.epsilon);
    return 0;
  }

  const HermitianTuple A = build(spec);
  const Region region = parse_region(o.region, zoo_dims(spec), o.res);
  if (region.dims() != A.d())
    throw CLI::ValidationError("--region", "dimension must match the tuple");
  const GammaRep rep = gamma_rep(A.d());
  ScanGrid grid = grid_scan(A, region, which, rep, o.workers);
  if (o.epsilon > 0) grid.epsilon = o.epsilon;
  write_grid_outputs(o, grid, "grid");
  const auto zs = zero_set(grid, grid.epsilon);
  std::printf("scan: %s, %zu points, epsilon %.6g, zero-set size %zu\n",
              spec.kind_name().c_str(), grid.values.size(), grid.epsilon, zs.size());
  return 0;
}

int cmd_slice(const CommonOpts& o, const std::string& plane, const std::string& direction,
              const std::string& t_range) {
  const ZooSpec spec = make_zoo(o);
  const HermitianTuple A = build(spec);
  const GammaRep rep = gamma_rep(A.d());
  const WhichValues which = parse_which(o.which);
  namespace fs = std::filesystem;
  fs::create_directories(o.out);

  if (!direction.empty()) {
    // radial slice lambda = t * direction
    std::vector<double> dir;
    std::stringstream ss(direction);
    std::string part;
    while (std::getline(ss, part, ',')) dir.push_back(std::stod(part));
    if (dir.size() != A.d())
      throw CLI::ValidationError("--direction", "dimension must match the tuple");
    double t0 = 0.0, t1 = 2.0;
    if (!t_range.empty()) {
      const auto colon = t_range.find(':');
      t0 = std::stod(t_range.substr(0, colon));
      t1 = std::stod(t_range.substr(colon + 1));
    }
    std::vector<double> ts(o.res);
    for (std::size_t k = 0; k < o.res; ++k)
      ts[k] = t0 + (t1 - t0) * double(k) / double(o.res - 1);
    const auto prof = radial_profile(A, dir, ts, which, rep);
    std::string csv = "t";
    for (std::size_t j = 0; j < A.d(); ++j) csv += ",lambda" + std::to_string(j);
    csv += ",mu_c,mu_q,mu_w\n";
    char buf[64];
    for (std::size_t k = 0; k < ts.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", ts[k]);
      csv += buf;
      for (double x : prof[k].lambda) {
        std::snprintf(buf, sizeof buf, ",%.17g", x);
        csv += buf;
      }
      auto app = [&](const std::optional<double>& v) {
        if (v)
          std::snprintf(buf, sizeof buf, ",%.17g", *v);
        else
          std::snprintf(buf, sizeof buf, ",");
        csv += buf;
      };
      app(prof[k].mu_c);
      app(prof[k].mu_q);
      app(prof[k].mu_w);
      csv += '\n';
    }
    write_text_file(o.out + "/slice.csv", csv);
    std::printf("slice: radial, %zu samples -> %s/slice.csv\n", ts.size(), o.out.c_str());
    return 0;
  }

  // planar slice; for d=3 the xz plane fixes y = 0
  if (plane != "xz")
    throw CLI::ValidationError("--plane", "only the xz plane is defined for d = 3 tuples");
  if (A.d() != 3) throw CLI::ValidationError("--plane", "xz plane needs a 3-tuple");
  PlaneEmbedding emb;
  emb.origin = {0.0, 0.0, 0.0};
  emb.axes = {{1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}};
  Region region2 = parse_region(o.region.empty() ? "-0.2:1.3" : o.region, 2, o.res);
  if (region2.dims() != 2) throw CLI::ValidationError("--region", "plane slices are 2-D");
  ScanGrid grid = planar_scan(A, region2, emb, which, rep, o.workers);
  if (o.epsilon > 0) grid.epsilon = o.epsilon;
  write_grid_outputs(o, grid, "slice");
  std::printf("slice: %s xz-plane, %zu points -> %s\n", spec.kind_name().c_str(),
              grid.values.size(), o.out.c_str());
  return 0;
}

int cmd_curve(const CommonOpts& o) {
  namespace fs = std::filesystem;
  fs::create_directories(o.out);
  CurveTrace trace;
  if (o.b == 0.0) {
    // degenerate family: the surface vanishes identically on z = 0, so the
    // whole unit disk's boundary circle bounds the z = 0 zero set
    trace.b = 0.0;
    for (std::size_t k = 0; k < o.res; ++k) {
      const double r = double(k) / double(o.res - 1);
      CurvePoint p;
      p.x = r;
      p.z = 0.0;
      p.e_val = general_b_surface(0.0, r, 0.0);
      p.f_val = 0.0;
      if (r > 0.0) {
        const auto m = eigen_membership(transfer_state(r, 0.0, 0.0));
        p.eig_small = m.eig_small;
        p.residual = null_vector_residual(r, 0.0, 200, 0.0);
      }
      trace.accepted.push_back(p);
    }
  } else {
    std::vector<double> zs(o.res);
    for (std::size_t k = 0; k < o.res; ++k)
      zs[k] = o.b * double(k) / double(o.res - 1);
    trace = curve_trace(o.b, zs, 200);
  }
  if (has_format(o, "csv")) write_text_file(o.out + "/curve.csv", curve_to_csv(trace));
  if (has_format(o, "json")) {
    const std::string doc = curve_to_json(trace);
    const std::string err = validate_against_schema(doc, curve_schema_json());
    if (!err.empty()) throw std::runtime_error("curve json failed self-validation: " + err);
    write_text_file(o.out + "/curve.json", doc);
  }
  if (has_format(o, "svg")) write_text_file(o.out + "/curve.svg", svg_curve(trace));
  std::printf("curve: b=%.4g, accepted %zu, rejected %zu%s\n", o.b, trace.accepted.size(),
              trace.rejected.size(), trace.experimental ? " (experimental: b > 2.25)" : "");
  return 0;
}

int cmd_oracle_check(const CommonOpts& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> ux(-3.0, 3.0), uz(-1.0, 1.0);
  bool ok = true;

  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double x = ux(rng), y = ux(rng), z = uz(rng);
    ZooSpec spec;
    spec.kind = ZooSpec::Kind::two_projection;
    spec.z = z;
    const HermitianTuple t = build(spec);
    worst = std::max(worst, std::abs(clifford_pseudospectrum(t, {x, y}) -
                                     mu_c_two_projection_closed(x, y, z)));
    worst = std::max(worst, std::abs(quadratic_pseudospectrum(t, {x, y}) -
                                     mu_q_two_projection_closed(x, y, z)));
  }
  std::printf("[%s] two-projection closed forms vs numerics: max |delta| = %.3e (<= 1e-9)\n",
              worst <= 1e-9 ? "PASS" : "FAIL", worst);
  ok = ok && worst <= 1e-9;

  const auto zgrid = uniform_z_grid(o.hz);
  std::uniform_real_distribution<double> u2(-2.0, 2.0);
  double worst_u = 0.0;
  for (int k = 0; k < 400; ++k) {
    const double x = u2(rng), y = u2(rng);
    const auto v = universal_pair_pseudospectra(x, y, zgrid);
    worst_u = std::max(worst_u, std::abs(v.mu_q - mu_q_universal_closed(x, y)));
    worst_u = std::max(worst_u, std::abs(v.mu_c - mu_c_universal_closed(x, y)));
  }
  const double budget = 5.0 * o.hz;
  std::printf("[%s] universal fiber minimization vs closed forms: max |delta| = %.3e (<= %.1e)\n",
              worst_u <= budget ? "PASS" : "FAIL", worst_u, budget);
  ok = ok && worst_u <= budget;

  double worst_g = 0.0;
  std::uniform_real_distribution<double> ur(-2.0, 2.0);
  for (int k = 0; k < 1000; ++k) {
    const double r = ur(rng), z = ur(rng);
    worst_g = std::max(worst_g, std::abs(general_b_surface(1.0, r, z) - e_poly(r, z)));
  }
  std::printf("[%s] general-b surface at b=1 equals e(x,z): max |delta| = %.3e (<= 1e-12)\n",
              worst_g <= 1e-12 ? "PASS" : "FAIL", worst_g);
  ok = ok && worst_g <= 1e-12;

  return ok ? 0 : 2;
}

int cmd_property_suite(const CommonOpts& o) {
  std::mt19937_64 rng(o.seed);
  bool ok = true;
  const auto herm = [&](std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = u(rng);
      for (std::size_t j = i + 1; j < n; ++j) {
        const Complex v(u(rng), u(rng));
        m(i, j) = v;
        m(j, i) = std::conj(v);
      }
    }
    return m;
  };

  {
    double worst = 0.0;
    for (std::size_t d = 1; d <= 12; ++d)
      worst = std::max(worst, verify_clifford(gamma_rep(d), 1e-13).worst());
    std::printf("[%s] Clifford relations d=1..12: max violation %.3e (< 1e-13)\n",
                worst < 1e-13 ? "PASS" : "FAIL", worst);
    ok = ok && worst < 1e-13;
  }
  {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    bool pass = true;
    for (int k = 0; k < 500; ++k) {
      const std::size_t d = 2 + k % 3;
      std::vector<ComplexMatrix> ops;
      for (std::size_t j = 0; j < d; ++j) ops.push_back(herm(3));
      const HermitianTuple A(std::move(ops));
      std::vector<double> l1(d), l2(d);
      for (auto& x : l1) x = u(rng);
      for (auto& x : l2) x = u(rng);
      const double m1 = clifford_pseudospectrum(A, l1);
      const double m2 = clifford_pseudospectrum(A, l2);
      double n2 = 0.0;
      for (std::size_t j = 0; j < d; ++j) n2 += (l1[j] - l2[j]) * (l1[j] - l2[j]);
      pass = pass && std::abs(m1 - m2) <= std::sqrt(n2) + 1e-8;
    }
    std::printf("[%s] mu^C Lipschitz in lambda (500 random pairs)\n", pass ? "PASS" : "FAIL");
    ok = ok && pass;
  }
  {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    bool pass = true;
    for (int k = 0; k < 300; ++k) {
      std::vector<ComplexMatrix> ops;
      for (int j = 0; j < 3; ++j) ops.push_back(herm(3));
      const HermitianTuple A(std::move(ops));
      std::vector<double> lam = {u(rng), u(rng), u(rng)};
      const double mc = clifford_pseudospectrum(A, lam);
      const double mq = quadratic_pseudospectrum(A, lam);
      pass = pass && std::abs(mc * mc - mq * mq) <= commutator_bound(A) + 1e-8;
    }
    std::printf("[%s] closeness |mu_c^2 - mu_q^2| <= sum of commutator norms (300 tuples)\n",
                pass ? "PASS" : "FAIL");
    ok = ok && pass;
  }
  {
    // hemisphere rotational symmetry in the x-y plane
    ZooSpec spec;
    spec.kind = ZooSpec::Kind::hemisphere;
    spec.b = 1.0;
    spec.n = 64;
    const HermitianTuple H = build(spec);
    std::uniform_real_distribution<double> uth(0.0, 6.28318530717958648),
        ur(0.0, 1.3), uzz(-0.3, 1.3);
    bool pass = true;
    for (int k = 0; k < 20; ++k) {
      const double th = uth(rng), r = ur(rng), zz = uzz(rng);
      const double a = clifford_pseudospectrum(H, {r * std::cos(th), r * std::sin(th), zz});
      const double b2 = clifford_pseudospectrum(H, {r, 0.0, zz});
      pass = pass && std::abs(a - b2) <= 1e-9;
    }
    std::printf("[%s] hemisphere rotational symmetry (20 random rotations)\n",
                pass ? "PASS" : "FAIL");
    ok = ok && pass;
  }
  return ok ? 0 : 2;
}

int cmd_report(const CommonOpts& o) {
  namespace fs = std::filesystem;
  fs::create_directories(o.out);
  nlohmann::json sections = nlohmann::json::array();
  bool all_pass = true;
  const auto add = [&](const std::string& name, bool pass, nlohmann::json details) {
    sections.push_back({{"name", name}, {"pass", pass}, {"details", std::move(details)}});
    std::printf("[%s] %s\n", pass ? "PASS" : "FAIL", name.c_str());
    all_pass = all_pass && pass;
  };

  {
    ZooSpec spec;
    spec.kind = ZooSpec::Kind::pauli;
    const HermitianTuple P = build(spec);
    const auto hit = bisect_zero(P, {0.0, 0.0, 1.0}, 0.5, 1.5, 1e-8, 1e-4, gamma_rep(3));
    add("pauli sphere radius by ray bisection", hit.found && std::abs(hit.t_star - 1.0) < 1e-6,
        {{"t_star", hit.t_star}});
  }
  {
    const auto zgrid = uniform_z_grid(o.hz);
    const auto origin = universal_pair_pseudospectra(0.0, 0.0, zgrid);
    const auto corner = universal_pair_pseudospectra(1.0, 1.0, zgrid);
    const bool pass = origin.mu_c <= 1e-3 && corner.mu_q <= 1e-12 &&
                      std::abs(origin.mu_q - std::sqrt(2.0)) <= 1e-9;
    add("universal pair: cross through origin, corners in quadratic spectrum", pass,
        {{"mu_c_origin", origin.mu_c}, {"mu_q_corner", corner.mu_q}});
  }
  {
    std::vector<double> zs;
    for (int k = 1; k <= 9; ++k) zs.push_back(0.1 * k);
    const CurveTrace tr = curve_trace(1.0, zs, 200);
    double worst = 0.0;
    for (const auto& p : tr.accepted) worst = std::max(worst, p.residual);
    const bool pass = tr.accepted.size() == zs.size() && worst <= 1e-8;
    add("hemisphere b=1 curve: members with small null-vector residuals", pass,
        {{"accepted", tr.accepted.size()}, {"max_residual", worst}});
  }
  {
    ZooSpec spec;
    spec.kind = ZooSpec::Kind::position_momentum;
    spec.n = 256;
    spec.box = 12.0;
    const HermitianTuple PQ = build(spec);
    const double mq = quadratic_pseudospectrum(PQ, {0.0, 0.0});
    add("position/momentum: mu^Q near 1 at the origin", std::abs(mq - 1.0) <= 2e-2,
        {{"mu_q", mq}});
  }

  nlohmann::json j;
  j["schema"] = "cliffspec.report/1";
  j["seed"] = o.seed;
  j["sections"] = std::move(sections);
  const std::string doc = j.dump(2);
  const std::string err = validate_against_schema(doc, report_schema_json());
  if (!err.empty()) throw std::runtime_error("report json failed self-validation: " + err);
  write_text_file(o.out + "/report.json", doc);
  std::printf("report -> %s/report.json\n", o.out.c_str());
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"joint spectra and pseudospectra of Hermitian tuples via the spectral localizer"};
  app.require_subcommand(0, 1);
  bool print_schema = false;
  app.add_flag("--schema", print_schema, "print the embedded JSON schemas and exit");

  CommonOpts scan_o, slice_o, curve_o, oracle_o, prop_o, report_o;
  std::string plane, direction, t_range;

  CLI::App* scan = app.add_subcommand("scan", "pseudospectrum values over a lattice");
  add_common(scan, scan_o);
  CLI::App* slice = app.add_subcommand("slice", "radial ray or xz-plane slice");
  add_common(slice, slice_o);
  slice->add_option("--plane", plane, "planar slice (xz: probes (x, 0, z))");
  slice->add_option("--direction", direction, "radial direction, comma separated");
  slice->add_option("--t-range", t_range, "radial parameter range lo:hi");
  CLI::App* curve = app.add_subcommand("curve", "hemisphere discrete-spectrum curve");
  add_common(curve, curve_o);
  CLI::App* oracle = app.add_subcommand("oracle-check", "closed-form equivalence suite");
  add_common(oracle, oracle_o);
  CLI::App* prop = app.add_subcommand("property-suite", "randomized structural properties");
  add_common(prop, prop_o);
  CLI::App* report = app.add_subcommand("report", "standard example battery with JSON summary");
  add_common(report, report_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (print_schema) {
      std::printf("%s\n", all_schemas_json().c_str());
      return 0;
    }
    if (scan->parsed()) return cmd_scan(scan_o);
    if (slice->parsed()) return cmd_slice(slice_o, plane, direction, t_range);
    if (curve->parsed()) return cmd_curve(curve_o);
    if (oracle->parsed()) return cmd_oracle_check(oracle_o);
    if (prop->parsed()) return cmd_property_suite(prop_o);
    if (report->parsed()) return cmd_report(report_o);
    std::printf("%s\n", app.help().c_str());
    return 0;
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
