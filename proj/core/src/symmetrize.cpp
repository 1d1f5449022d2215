#include "spex/symmetrize.hpp"

#include <cmath>
#include <cstdlib>

#include "spex/invariants.hpp"
#include "spex/spectral.hpp"

namespace spex {

namespace {
constexpr double kSTolerance = 1e-9;
constexpr double kPerronTolerance = 1e-12;
}  // namespace

budget_error::budget_error(const std::string& msg, SymmetrizationTrace p)
    : std::runtime_error(msg), partial(std::move(p)) {}

Graph zykov_shift(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("zykov_shift: u and v must differ");
  if (g.has_edge(u, v))
    throw std::invalid_argument("zykov_shift: u and v must be non-adjacent");
  Graph h = g;
  uint64_t target = g.neighbors(v);
  h.clear_vertex(u);
  for_each_bit(target, [&](int w) { h.add_edge(u, w); });
  return h;
}

std::optional<std::pair<Graph, std::pair<int, int>>> spectral_zykov_step(
    const Graph& g, std::span<const double> x) {
  int n = g.vertex_count();
  std::vector<double> s(n);
  for (int v = 0; v < n; ++v) s[v] = neighbor_weight_sum(g, x, v);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      double gap = s[i] - s[j];
      if (std::abs(gap) > kSTolerance) {
        int loser = gap > 0 ? j : i;
        int winner = gap > 0 ? i : j;
        return std::pair{zykov_shift(g, loser, winner), std::pair{loser, winner}};
      }
      if (g.neighbors(i) != g.neighbors(j))
        return std::pair{zykov_shift(g, j, i), std::pair{j, i}};
    }
  return std::nullopt;
}

SymmetrizationTrace symmetrize_to_multipartite(const Graph& g, int max_steps) {
  if (!is_connected(g))
    throw std::invalid_argument("symmetrize_to_multipartite: graph must be connected");
  int n = g.vertex_count();
  if (max_steps <= 0) max_steps = n * n;
  SymmetrizationTrace trace;
  Graph cur = g;
  SpectralResult perron = adjacency_radius(cur, kPerronTolerance);
  for (int step = 0; step < max_steps; ++step) {
    auto next = spectral_zykov_step(cur, perron.vector);
    if (!next) {
      trace.final_graph = cur;
      if (is_complete_multipartite(cur)) {
        std::vector<int> parts = multipartite_parts(cur);
        if (parts.size() >= 2) trace.final_parts = PartSizes(parts);
      }
      return trace;
    }
    auto& [h, pair] = *next;
    double s_u = neighbor_weight_sum(cur, perron.vector, pair.first);
    double s_v = neighbor_weight_sum(cur, perron.vector, pair.second);
    SpectralResult after = adjacency_radius(h, kPerronTolerance);
    trace.steps.push_back({std::abs(s_u - s_v) > kSTolerance ? "shift" : "tie_twin",
                           pair.first, pair.second, perron.value, after.value});
    cur = std::move(h);
    perron = std::move(after);
  }
  trace.final_graph = cur;
  throw budget_error("symmetrize_to_multipartite: step budget exhausted",
                     std::move(trace));
}

std::pair<Graph, int> erdos_majorization_step(const Graph& g,
                                              std::span<const double> x,
                                              uint64_t active_set) {
  if (active_set == 0)
    throw std::invalid_argument("erdos_majorization_step: empty active set");
  int pivot = -1;
  double best = -1.0;
  for_each_bit(active_set, [&](int v) {
    double s = neighbor_weight_sum(g, x, v);
    if (s > best) {
      best = s;
      pivot = v;
    }
  });
  Graph h = g;
  uint64_t in_nbrs = g.neighbors(pivot) & active_set;
  uint64_t rest = active_set & ~in_nbrs & ~(uint64_t{1} << pivot);
  for_each_bit(rest, [&](int w) {
    uint64_t drop = h.neighbors(w) & active_set;
    for_each_bit(drop, [&](int z) { h.remove_edge(w, z); });
  });
  uint64_t far_side = active_set & ~in_nbrs;  // pivot and its in-set non-neighbors
  for_each_bit(in_nbrs, [&](int a) {
    for_each_bit(far_side, [&](int b) { h.add_edge(a, b); });
  });
  return {h, pivot};
}

Graph erdos_majorize(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("erdos_majorize: graph must be connected");
  SpectralResult perron = adjacency_radius(g, kPerronTolerance);
  Graph cur = g;
  uint64_t active = g.vertex_mask();
  while (popcount64(active) > 1) {
    auto [h, pivot] = erdos_majorization_step(cur, perron.vector, active);
    active = h.neighbors(pivot) & active;
    cur = std::move(h);
  }
  return cur;
}

}  // namespace spex
