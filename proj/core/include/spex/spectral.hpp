#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

struct convergence_error : std::runtime_error {
  convergence_error(const std::string& msg, double residual, long iterations);
  double residual;
  long iterations;
};

struct SpectralResult {
  double value = 0.0;
  std::vector<double> vector;  // unit norm; zero off the solved component
  double residual = 0.0;
  long iterations = 0;
  bool heuristic_global = false;  // set by the p-solver for p < 2
};

// s_G(v, x): sum of x over the neighbors of v.
double neighbor_weight_sum(const Graph& g, std::span<const double> x, int v);

SpectralResult adjacency_radius(const Graph& g, double tolerance = 1e-10,
                                long max_iterations = 2'000'000);
SpectralResult signless_laplacian_radius(const Graph& g, double tolerance = 1e-10,
                                         long max_iterations = 2'000'000);
// alpha*D + (1-alpha)*A for alpha in [0, 1]
SpectralResult a_alpha_radius(const Graph& g, double alpha, double tolerance = 1e-10,
                              long max_iterations = 2'000'000);

struct PSpectralOptions {
  double p = 2.0;           // must be > 1
  int restarts = 8;         // random positive restarts beyond the uniform start
  long max_iterations = 200'000;
  double tolerance = 1e-10; // stationarity residual, infinity norm
  uint64_t seed = 1;
};

// max of 2 * sum_{uv in E} x_u x_v over the p-norm unit sphere; for p < 2 the
// landscape has non-global stationary points, so the result is best-of-restarts.
SpectralResult p_spectral_radius(const Graph& g, const PSpectralOptions& opt);

}  // namespace spex
