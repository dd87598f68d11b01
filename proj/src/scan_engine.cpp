#include "cliffspec/scan_engine.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace cliffspec {

void Region::validate() const {
  if (lo.empty() || lo.size() != hi.size() || lo.size() != res.size())
    throw std::invalid_argument("Region: lo/hi/res must share a nonzero length");
  for (std::size_t a = 0; a < lo.size(); ++a) {
    if (!(lo[a] < hi[a]))
      throw std::invalid_argument("Region: lo < hi required on axis " + std::to_string(a));
    if (res[a] < 2)
      throw std::invalid_argument("Region: resolution >= 2 required on axis " +
                                  std::to_string(a));
  }
}

std::size_t Region::point_count() const {
  std::size_t n = 1;
  for (std::size_t r : res) n *= r;
  return n;
}

double Region::coord(std::size_t axis, std::size_t k) const {
  return lo[axis] + double(k) * (hi[axis] - lo[axis]) / double(res[axis] - 1);
}

std::vector<std::size_t> Region::unflatten(std::size_t flat) const {
  std::vector<std::size_t> idx(res.size());
  for (std::size_t a = res.size(); a-- > 0;) {
    idx[a] = flat % res[a];
    flat /= res[a];
  }
  return idx;
}

std::vector<double> Region::point(std::size_t flat) const {
  const auto idx = unflatten(flat);
  std::vector<double> p(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) p[a] = coord(a, idx[a]);
  return p;
}

double Region::spacing() const {
  double h = 0.0;
  for (std::size_t a = 0; a < lo.size(); ++a)
    h = std::max(h, (hi[a] - lo[a]) / double(res[a] - 1));
  return h;
}

std::vector<double> PlaneEmbedding::map(const std::vector<double>& u) const {
  if (axes.size() != u.size())
    throw std::invalid_argument("PlaneEmbedding: parameter dimension mismatch");
  std::vector<double> out = origin;
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (axes[a].size() != origin.size())
      throw std::invalid_argument("PlaneEmbedding: axis dimension mismatch");
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += u[a] * axes[a][j];
  }
  return out;
}

PlaneEmbedding PlaneEmbedding::identity(std::size_t d) {
  PlaneEmbedding e;
  e.origin.assign(d, 0.0);
  e.axes.assign(d, std::vector<double>(d, 0.0));
  for (std::size_t a = 0; a < d; ++a) e.axes[a][a] = 1.0;
  return e;
}

ScanGrid grid_scan_field(const Region& region, const PlaneEmbedding& embedding,
                         const WhichValues& which, const FieldEvaluator& eval,
                         std::size_t workers) {
  region.validate();
  ScanGrid grid;
  grid.region = region;
  grid.embedding = embedding;
  grid.which = which;
  grid.epsilon = region.spacing();
  const std::size_t total = region.point_count();
  grid.values.resize(total);

  if (workers == 0) workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  workers = std::min(workers, total);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;

  auto body = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total || failed.load()) break;
      try {
        grid.values[i] = eval(embedding.map(region.point(i)));
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        failed.store(true);
        if (error_message.empty()) error_message = e.what();
      }
    }
  };

  if (workers <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw std::runtime_error("grid_scan_field: " + error_message);
  return grid;
}

namespace {

FieldEvaluator tuple_evaluator(const HermitianTuple& A, const WhichValues& which,
                               const GammaRep& rep, const Tolerances& tol) {
  return [&A, which, &rep, &tol](const std::vector<double>& lambda) {
    PseudospectrumSample s;
    s.lambda = lambda;
    if (which.c) s.mu_c = clifford_pseudospectrum(A, lambda, &rep, tol);
    if (which.q) s.mu_q = quadratic_pseudospectrum(A, lambda, tol);
    if (which.w)
      s.mu_w = windowed_pseudospectrum(A, lambda, [](double t) { return std::exp(-t * t); },
                                       tol);
    return s;
  };
}

}  // namespace

ScanGrid grid_scan(const HermitianTuple& A, const Region& region, const WhichValues& which,
                   const GammaRep& rep, std::size_t workers, const Tolerances& tol) {
  if (region.dims() != A.d())
    throw std::invalid_argument("grid_scan: region dimension != tuple d");
  return grid_scan_field(region, PlaneEmbedding::identity(A.d()), which,
                         tuple_evaluator(A, which, rep, tol), workers);
}

ScanGrid planar_scan(const HermitianTuple& A, const Region& region2,
                     const PlaneEmbedding& embedding, const WhichValues& which,
                     const GammaRep& rep, std::size_t workers, const Tolerances& tol) {
  if (embedding.origin.size() != A.d())
    throw std::invalid_argument("planar_scan: embedding target dimension != tuple d");
  return grid_scan_field(region2, embedding, which, tuple_evaluator(A, which, rep, tol),
                         workers);
}

std::vector<ZeroSetPoint> zero_set(const ScanGrid& grid, double eps) {
  std::vector<ZeroSetPoint> out;
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    const auto& s = grid.values[i];
    if (!s.mu_c)
      throw std::invalid_argument("zero_set: grid was scanned without mu^C values");
    if (*s.mu_c <= eps) out.push_back({grid.region.unflatten(i), s.lambda, *s.mu_c});
  }
  return out;
}

std::vector<PseudospectrumSample> radial_profile(const HermitianTuple& A,
                                                 const std::vector<double>& direction,
                                                 const std::vector<double>& t_samples,
                                                 const WhichValues& which, const GammaRep& rep,
                                                 const Tolerances& tol) {
  if (direction.size() != A.d())
    throw std::invalid_argument("radial_profile: direction dimension != tuple d");
  const FieldEvaluator eval = tuple_evaluator(A, which, rep, tol);
  std::vector<PseudospectrumSample> out;
  out.reserve(t_samples.size());
  for (double t : t_samples) {
    std::vector<double> lambda(direction.size());
    for (std::size_t j = 0; j < direction.size(); ++j) lambda[j] = t * direction[j];
    out.push_back(eval(lambda));
  }
  return out;
}

BisectResult bisect_zero(const HermitianTuple& A, const std::vector<double>& direction,
                         double t_lo, double t_hi, double tol_t, double eps_dip,
                         const GammaRep& rep, const Tolerances& tol) {
  if (!(t_lo < t_hi)) throw std::invalid_argument("bisect_zero: t_lo < t_hi required");
  const auto mu = [&](double t) {
    std::vector<double> lambda(direction.size());
    for (std::size_t j = 0; j < direction.size(); ++j) lambda[j] = t * direction[j];
    return clifford_pseudospectrum(A, lambda, &rep, tol);
  };

  // coarse bracket of the dip
  const std::size_t samples = 33;
  double best_t = t_lo, best_mu = std::numeric_limits<double>::infinity();
  std::vector<double> ts(samples), ms(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    ts[k] = t_lo + (t_hi - t_lo) * double(k) / double(samples - 1);
    ms[k] = mu(ts[k]);
    if (ms[k] < best_mu) {
      best_mu = ms[k];
      best_t = ts[k];
    }
  }
  BisectResult out;
  // Lipschitz constant 1: a dip reaching below eps_dip cannot hide between
  // samples deeper than half a sample spacing
  const double h = (t_hi - t_lo) / double(samples - 1);
  if (best_mu > eps_dip + 0.5 * h) return out;

  double a = std::max(t_lo, best_t - h), b = std::min(t_hi, best_t + h);
  // golden-section minimization of the V-shaped dip
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = mu(c), fd = mu(d);
  while (b - a > tol_t) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = mu(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = mu(d);
    }
  }
  out.t_star = 0.5 * (a + b);
  out.mu_at_t = mu(out.t_star);
  out.found = out.mu_at_t <= eps_dip;
  return out;
}

TruncationSweep truncation_sweep(const std::function<HermitianTuple(std::size_t)>& builder,
                                 const std::vector<std::size_t>& sizes,
                                 const std::vector<std::vector<double>>& probes,
                                 const GammaRep& rep, const Tolerances& tol) {
  TruncationSweep out;
  out.sizes = sizes;
  out.points.resize(probes.size());
  for (std::size_t p = 0; p < probes.size(); ++p) out.points[p].lambda = probes[p];
  for (std::size_t n : sizes) {
    const HermitianTuple A = builder(n);
    for (std::size_t p = 0; p < probes.size(); ++p)
      out.points[p].mu.push_back(clifford_pseudospectrum(A, probes[p], &rep, tol));
  }
  for (auto& pt : out.points)
    for (std::size_t k = 1; k < pt.mu.size(); ++k)
      if (pt.mu[k] >= pt.mu[k - 1]) pt.monotone_decreasing = false;
  return out;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string grid_to_csv(const ScanGrid& grid) {
  std::string out;
  const std::size_t d = grid.embedding.origin.size();
  for (std::size_t j = 0; j < d; ++j) out += "lambda" + std::to_string(j) + ",";
  out += "mu_c,mu_q,mu_w\n";
  for (const auto& s : grid.values) {
    for (double x : s.lambda) {
      out += fmt17(x);
      out += ',';
    }
    out += s.mu_c ? fmt17(*s.mu_c) : "";
    out += ',';
    out += s.mu_q ? fmt17(*s.mu_q) : "";
    out += ',';
    out += s.mu_w ? fmt17(*s.mu_w) : "";
    out += '\n';
  }
  return out;
}

std::string grid_to_json(const ScanGrid& grid) {
  nlohmann::json j;
  j["schema"] = "cliffspec.grid/1";
  j["region"] = {{"lo", grid.region.lo}, {"hi", grid.region.hi}, {"res", grid.region.res}};
  j["embedding"] = {{"origin", grid.embedding.origin}, {"axes", grid.embedding.axes}};
  j["epsilon"] = grid.epsilon;
  j["which"] = {{"c", grid.which.c}, {"q", grid.which.q}, {"w", grid.which.w}};
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& s : grid.values) {
    nlohmann::json v;
    v["lambda"] = s.lambda;
    if (s.mu_c) v["mu_c"] = *s.mu_c;
    if (s.mu_q) v["mu_q"] = *s.mu_q;
    if (s.mu_w) v["mu_w"] = *s.mu_w;
    vals.push_back(std::move(v));
  }
  j["values"] = std::move(vals);
  return j.dump(2);
}

}  // namespace cliffspec
