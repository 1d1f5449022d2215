#pragma once

// Slow reference implementations used only as test oracles.  Nothing here
// shares a code path with the library: cliques by subset scan, coloring by
// base-k counting, eigenvalues by cyclic Jacobi, characteristic polynomials
// by Faddeev-LeVerrier, p-spectral radii by lattice search plus pattern
// refinement.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "spex/graph.hpp"
#include "spex/polynomial.hpp"

namespace naive {

inline bool is_clique(const spex::Graph& g, uint64_t mask) {
  bool ok = true;
  spex::for_each_bit(mask, [&](int v) {
    if ((g.neighbors(v) & mask) != (mask & ~(uint64_t(1) << v))) ok = false;
  });
  return ok;
}

inline int clique_number(const spex::Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask)
    if (spex::popcount64(mask) > best && is_clique(g, mask))
      best = spex::popcount64(mask);
  return best;
}

inline bool colorable(const spex::Graph& g, int k) {
  int n = g.vertex_count();
  if (n == 0) return true;
  if (k <= 0) return false;
  std::vector<int> col(n, 0);
  auto edges = spex::edge_list(g);
  for (;;) {
    bool proper = true;
    for (auto [u, v] : edges)
      if (col[u] == col[v]) {
        proper = false;
        break;
      }
    if (proper) return true;
    int i = 0;
    while (i < n && col[i] == k - 1) col[i++] = 0;
    if (i == n) return false;
    ++col[i];
  }
}

inline int chromatic_number(const spex::Graph& g) {
  if (g.vertex_count() == 0) return 0;
  int k = 1;
  while (!colorable(g, k)) ++k;
  return k;
}

// Cyclic Jacobi; returns the eigenvalues in no particular order.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-20) continue;
        double phi = 0.5 * std::atan2(2.0 * a[p][q], a[q][q] - a[p][p]);
        double c = std::cos(phi), s = std::sin(phi);
        for (int i = 0; i < n; ++i) {
          double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i][i];
  return eig;
}

inline std::vector<std::vector<double>> dense_matrix(const spex::Graph& g,
                                                     double diag_alpha,
                                                     double off_beta) {
  int n = g.vertex_count();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (int v = 0; v < n; ++v) a[v][v] = diag_alpha * g.degree(v);
  for (auto [u, v] : spex::edge_list(g)) a[u][v] = a[v][u] = off_beta;
  return a;
}

inline double max_eigenvalue(const std::vector<std::vector<double>>& a) {
  if (a.empty()) return 0.0;
  auto eig = jacobi_eigenvalues(a);
  return *std::max_element(eig.begin(), eig.end());
}

inline double adjacency_radius(const spex::Graph& g) {
  return max_eigenvalue(dense_matrix(g, 0.0, 1.0));
}

inline double signless_radius(const spex::Graph& g) {
  return max_eigenvalue(dense_matrix(g, 1.0, 1.0));
}

inline double a_alpha_radius(const spex::Graph& g, double alpha) {
  return max_eigenvalue(dense_matrix(g, alpha, 1.0 - alpha));
}

// Faddeev-LeVerrier over exact integers: p(x) = x^n + c_1 x^{n-1} + ... + c_n.
inline spex::Polynomial charpoly_int(
    const std::vector<std::vector<spex::BigInt>>& a) {
  using spex::BigInt;
  int n = static_cast<int>(a.size());
  std::vector<BigInt> c(n + 1);
  c[0] = 1;
  std::vector<std::vector<BigInt>> mk = a;
  for (int k = 1; k <= n; ++k) {
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += mk[i][i];
    assert(tr % k == 0);
    c[k] = -tr / k;
    if (k == n) break;
    for (int i = 0; i < n; ++i) mk[i][i] += c[k];
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (int j = 0; j < n; ++j) next[i][j] += a[i][l] * mk[l][j];
      }
    mk = std::move(next);
  }
  std::vector<BigInt> ascending(n + 1);
  for (int k = 0; k <= n; ++k) ascending[n - k] = c[k];
  return spex::Polynomial(std::move(ascending));
}

inline std::vector<std::vector<spex::BigInt>> int_matrix(const spex::Graph& g,
                                                         int diag_degree_scale,
                                                         int off_value) {
  int n = g.vertex_count();
  std::vector<std::vector<spex::BigInt>> a(n, std::vector<spex::BigInt>(n, 0));
  for (int v = 0; v < n; ++v) a[v][v] = diag_degree_scale * g.degree(v);
  for (auto [u, v] : spex::edge_list(g)) a[u][v] = a[v][u] = off_value;
  return a;
}

inline spex::Polynomial adjacency_charpoly(const spex::Graph& g) {
  return charpoly_int(int_matrix(g, 0, 1));
}

inline spex::Polynomial signless_charpoly(const spex::Graph& g) {
  return charpoly_int(int_matrix(g, 1, 1));
}

inline double p_objective(const spex::Graph& g,
                          const std::vector<std::pair<int, int>>& edges,
                          const std::vector<double>& t, double p) {
  double norm = 0.0;
  for (double x : t) norm += std::pow(x, p);
  if (norm <= 0.0) return 0.0;
  double s = 0.0;
  for (auto [u, v] : edges) s += t[u] * t[v];
  return 2.0 * s / std::pow(norm, 2.0 / p);
}

// Global maximum of 2 sum x_u x_v over the nonnegative p-sphere, for n <= 4:
// coarse lattice scan keeps a beam of starts, each refined by pattern search.
inline double p_radius_grid(const spex::Graph& g, double p) {
  int n = g.vertex_count();
  auto edges = spex::edge_list(g);
  if (edges.empty()) return 0.0;
  assert(n <= 4);

  const int steps = 8;
  std::vector<std::pair<double, std::vector<double>>> beam;
  std::vector<int> idx(n, 0);
  for (;;) {
    std::vector<double> t(n);
    for (int v = 0; v < n; ++v) t[v] = double(idx[v]) / steps;
    double val = p_objective(g, edges, t, p);
    beam.emplace_back(val, t);
    int i = 0;
    while (i < n && idx[i] == steps) idx[i++] = 0;
    if (i == n) break;
    ++idx[i];
  }
  std::sort(beam.begin(), beam.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  if (beam.size() > 24) beam.resize(24);

  double best = 0.0;
  for (auto& [val, t] : beam) {
    double step = 1.0 / steps;
    double cur = val;
    while (step > 1e-9) {
      bool improved = false;
      for (int v = 0; v < n; ++v)
        for (double sgn : {1.0, -1.0}) {
          double saved = t[v];
          t[v] += sgn * step;
          if (t[v] < 0.0) {
            t[v] = saved;
            continue;
          }
          double trial = p_objective(g, edges, t, p);
          if (trial > cur + 1e-15) {
            cur = trial;
            improved = true;
          } else {
            t[v] = saved;
          }
        }
      if (!improved) step /= 2;
    }
    best = std::max(best, cur);
  }
  return best;
}

}  // namespace naive
