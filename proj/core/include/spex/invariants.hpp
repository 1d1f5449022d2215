#pragma once

#include <cstdint>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

bool is_connected(const Graph& g);  // true for n <= 1
uint64_t component_of(const Graph& g, int v);
std::vector<uint64_t> components(const Graph& g);  // ordered by lowest vertex

int clique_number(const Graph& g);
bool has_clique(const Graph& g, int k);
// Does the subgraph induced on `mask` contain a k-clique?
bool has_clique_in_mask(const Graph& g, uint64_t mask, int k);

bool colorable(const Graph& g, int k);
int chromatic_number(const Graph& g);
bool is_r_partite(const Graph& g, int r);

bool is_complete_multipartite(const Graph& g);
// Part sizes (non-decreasing) if g is complete multipartite; throws otherwise.
std::vector<int> multipartite_parts(const Graph& g);
// Nosal equality shape: complete bipartite together with isolated vertices.
bool is_complete_bipartite_plus_isolated(const Graph& g);

}  // namespace spex
