#include "spex/spectral.hpp"

#include <cmath>

#include "spex/invariants.hpp"

namespace spex {

convergence_error::convergence_error(const std::string& msg, double res, long iters)
    : std::runtime_error(msg + " (residual " + std::to_string(res) + " after " +
                         std::to_string(iters) + " iterations)"),
      residual(res),
      iterations(iters) {}

double neighbor_weight_sum(const Graph& g, std::span<const double> x, int v) {
  if (x.size() != static_cast<size_t>(g.vertex_count()))
    throw std::invalid_argument("weight vector length mismatch");
  double s = 0.0;
  for_each_bit(g.neighbors(v), [&](int u) { s += x[u]; });
  return s;
}

namespace {

struct ComponentSolve {
  double value;
  double residual;
  long iterations;
};

// Power iteration for M = ca*D + cb*A restricted to one component.  Iterates
// on M + I so that bipartite components cannot stall on the +/- eigenpair.
ComponentSolve power_component(const Graph& g, double ca, double cb, uint64_t mask,
                               double tol, long max_iter, std::vector<double>& x) {
  int n = g.vertex_count();
  int size = popcount64(mask);
  double init = 1.0 / std::sqrt(double(size));
  for (int v = 0; v < n; ++v) x[v] = ((mask >> v) & 1) ? init : 0.0;

  std::vector<double> z(n, 0.0);
  double rho = 0.0, res = 0.0;
  for (long it = 1; it <= max_iter; ++it) {
    for_each_bit(mask, [&](int v) {
      double s = 0.0;
      for_each_bit(g.neighbors(v), [&](int u) { s += x[u]; });
      z[v] = ca * g.degree(v) * x[v] + cb * s;
    });
    rho = 0.0;
    for_each_bit(mask, [&](int v) { rho += x[v] * z[v]; });
    res = 0.0;
    for_each_bit(mask, [&](int v) { res = std::max(res, std::fabs(z[v] - rho * x[v])); });
    if (res <= tol) return {rho, res, it};
    double norm = 0.0;
    for_each_bit(mask, [&](int v) {
      z[v] += x[v];  // the +I shift
      norm += z[v] * z[v];
    });
    norm = std::sqrt(norm);
    for_each_bit(mask, [&](int v) { x[v] = z[v] / norm; });
  }
  throw convergence_error("power iteration did not converge", res, max_iter);
}

SpectralResult solve_nonneg(const Graph& g, double ca, double cb, double tol,
                            long max_iter) {
  if (g.vertex_count() < 1) throw std::invalid_argument("graph must be non-empty");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  int n = g.vertex_count();
  SpectralResult best;
  best.value = -1.0;
  std::vector<double> x(n);
  for (uint64_t comp : components(g)) {
    ComponentSolve cs = power_component(g, ca, cb, comp, tol, max_iter, x);
    if (cs.value > best.value) {
      best.value = cs.value;
      best.vector = x;
      best.residual = cs.residual;
      best.iterations = cs.iterations;
    }
  }
  return best;
}

}  // namespace

SpectralResult adjacency_radius(const Graph& g, double tolerance, long max_iterations) {
  return solve_nonneg(g, 0.0, 1.0, tolerance, max_iterations);
}

SpectralResult signless_laplacian_radius(const Graph& g, double tolerance,
                                         long max_iterations) {
  return solve_nonneg(g, 1.0, 1.0, tolerance, max_iterations);
}

SpectralResult a_alpha_radius(const Graph& g, double alpha, double tolerance,
                              long max_iterations) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::domain_error("alpha must lie in [0, 1]");
  return solve_nonneg(g, alpha, 1.0 - alpha, tolerance, max_iterations);
}

}  // namespace spex
