#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spex/families.hpp"
#include "spex/graph.hpp"

namespace spex {

struct SymmetrizationStep {
  std::string op;  // "shift" or "tie_twin"
  int u = -1;      // overwritten vertex
  int v = -1;      // vertex whose neighborhood u copies
  double lambda_before = 0.0;
  double lambda_after = 0.0;
};

struct SymmetrizationTrace {
  std::vector<SymmetrizationStep> steps;
  Graph final_graph;
  std::optional<PartSizes> final_parts;  // set when final_graph is complete multipartite
};

struct budget_error : std::runtime_error {
  budget_error(const std::string& msg, SymmetrizationTrace partial);
  SymmetrizationTrace partial;
};

// Z_{u,v}(G): u becomes a twin of v.  Requires u != v and u, v non-adjacent.
Graph zykov_shift(const Graph& g, int u, int v);

// One spectral Zykov step under the Perron vector x.  Scans non-adjacent pairs
// (i, j), i < j, in lexicographic order.  The first pair with s_G values apart
// by more than 1e-9 is resolved by overwriting the smaller-s vertex; an
// equal-s pair with different neighborhoods makes j a twin of i.  Returns the
// new graph and the (overwritten, copied) pair, or nothing when the graph is
// already complete multipartite.
std::optional<std::pair<Graph, std::pair<int, int>>> spectral_zykov_step(
    const Graph& g, std::span<const double> x);

// Iterates spectral_zykov_step with the Perron vector re-solved after every
// mutation.  Requires a connected input.  max_steps <= 0 means n^2.
SymmetrizationTrace symmetrize_to_multipartite(const Graph& g, int max_steps = 0);

// One Erdos majorization pass on the induced subgraph on active_set: the
// non-neighbors (within the set) of the vertex maximizing s_G(., x) lose their
// in-set edges and are joined completely to its in-set neighborhood.  Edges
// leaving active_set are untouched.  Returns the modified graph and the pivot.
std::pair<Graph, int> erdos_majorization_step(const Graph& g,
                                              std::span<const double> x,
                                              uint64_t active_set);

// Full pipeline: active set descends through pivot neighborhoods until empty,
// with x fixed to the Perron vector of the input.  Requires a connected input.
Graph erdos_majorize(const Graph& g);

}  // namespace spex
