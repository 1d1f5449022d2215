#include <cmath>
#include <limits>
#include <random>

#include "spex/spectral.hpp"

namespace spex {

namespace {

// p-norm with max scaling
double pnorm(const std::vector<double>& x, double p) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::fabs(v));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : x) s += std::pow(std::fabs(v) / m, p);
  return m * std::pow(s, 1.0 / p);
}

void normalize_p(std::vector<double>& x, double p) {
  double nrm = pnorm(x, p);
  if (nrm > 0)
    for (double& v : x) v /= nrm;
}

struct RunResult {
  bool converged = false;
  double value = 0.0;
  std::vector<double> x;
  double residual = 0.0;
  long iterations = 0;
};

RunResult run_fixed_point(const Graph& g, std::vector<double> x,
                          const PSpectralOptions& opt) {
  int n = g.vertex_count();
  double p = opt.p;
  double inv = 1.0 / (p - 1.0);
  normalize_p(x, p);
  std::vector<double> s(n), y(n);
  double theta = 1.0;
  int worse = 0;
  double prev_res = std::numeric_limits<double>::infinity();
  RunResult out;
  for (long it = 1; it <= opt.max_iterations; ++it) {
    double lam = 0.0;
    for (int v = 0; v < n; ++v) {
      double sv = 0.0;
      for_each_bit(g.neighbors(v), [&](int u) { sv += x[u]; });
      s[v] = sv;
      lam += x[v] * sv;  // equals 2 * sum over edges
    }
    double res = 0.0;
    for (int v = 0; v < n; ++v)
      res = std::max(res, std::fabs(lam * std::pow(x[v], p - 1.0) - s[v]));
    if (res <= opt.tolerance) {
      out.converged = true;
      out.value = lam;
      out.x = x;
      out.residual = res;
      out.iterations = it;
      return out;
    }
    // oscillation control: repeated residual growth halves the step
    if (res > prev_res && ++worse >= 2) {
      theta = std::max(theta * 0.5, 1.0 / 1024.0);
      worse = 0;
    }
    prev_res = res;
    out.residual = res;
    out.iterations = it;
    for (int v = 0; v < n; ++v) y[v] = s[v] > 0.0 ? std::pow(s[v], inv) : 0.0;
    normalize_p(y, p);
    if (theta < 1.0)
      for (int v = 0; v < n; ++v) y[v] = theta * y[v] + (1.0 - theta) * x[v];
    normalize_p(y, p);
    x.swap(y);
  }
  return out;
}

}  // namespace

SpectralResult p_spectral_radius(const Graph& g, const PSpectralOptions& opt) {
  if (!(opt.p > 1.0)) throw std::domain_error("p must exceed 1");
  if (!(opt.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("graph must be non-empty");

  SpectralResult result;
  result.heuristic_global = opt.p < 2.0;
  if (g.edge_count() == 0) {
    result.vector.assign(n, 0.0);
    return result;
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  bool have = false;
  RunResult last;
  for (int attempt = 0; attempt <= opt.restarts; ++attempt) {
    std::vector<double> start(n, 1.0);
    if (attempt > 0)
      for (double& v : start) v = unif(rng);
    RunResult run = run_fixed_point(g, std::move(start), opt);
    last = run;
    if (!run.converged) continue;
    if (!have || run.value > result.value) {
      result.value = run.value;
      result.vector = run.x;
      result.residual = run.residual;
      result.iterations = run.iterations;
      have = true;
    }
  }
  if (!have)
    throw convergence_error("p-spectral fixed point did not converge", last.residual,
                            last.iterations);
  return result;
}

}  // namespace spex
