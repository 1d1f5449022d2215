#pragma once

#include <initializer_list>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

// Ordered positive part sizes, at least two parts, total at most 63.  Order is
// significant for pinched_multipartite, where the first two parts carry the
// special vertices; order-insensitive constructions treat it as a multiset.
struct PartSizes {
  std::vector<int> sizes;

  PartSizes(std::initializer_list<int> s);
  explicit PartSizes(std::vector<int> s);

  int count() const { return static_cast<int>(sizes.size()); }
  int total() const;
  PartSizes sorted() const;  // non-decreasing copy
  bool operator==(const PartSizes&) const = default;
};

Graph complete_multipartite(const PartSizes& parts);

// Turan part sizes for n vertices, r parts, listed non-decreasing.
PartSizes turan_parts(int n, int r);
Graph turan_graph(int n, int r);
long turan_edge_count(int n, int r);

// Complete bipartite K_{a,b} with one edge subdivided; n = a + b + 1.
Graph sk_graph(int a, int b);

// Complete multipartite K_{b_1,...,b_r} with one edge vw between the first two
// parts replaced by a path v-u-w through a new vertex u, which is also joined
// to every part beyond the second.  Parts sum to n - 1.  For r = 2 this is
// sk_graph(b_1, b_2).
Graph pinched_multipartite(const PartSizes& parts);

// Balanced pinched graph on n vertices: pinched_multipartite(turan_parts(n-1, r)).
// Defined for n >= 2r + 1 so every part has size at least 2.
Graph y_graph(int n, int r);

// Triangle-free non-bipartite graph with floor((n-1)^2/4) + 1 edges: parts X
// (size floor(n/2), split into X1 of size x1 and X2) and Y (size ceil(n/2))
// with u, v in Y adjacent, X joined to Y minus {u, v}, u joined to X1, v to X2.
// Both splits must be non-empty: 1 <= x1 <= floor(n/2) - 1.
Graph erdos_family_graph(int n, int x1);

// Split graph: clique on k vertices joined to an independent set of n - k,
// 1 <= k < n.
Graph split_graph(int n, int k);

}  // namespace spex
