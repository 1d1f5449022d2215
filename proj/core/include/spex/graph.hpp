#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace spex {

// Simple undirected graph on at most 64 vertices, one neighbor bitmask per
// vertex.  Vertices are 0-based.  No loops, no multi-edges.
class Graph {
 public:
  static constexpr int max_vertices = 64;

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const;

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void clear_vertex(int v);  // drop every edge at v

  uint64_t neighbors(int v) const;
  int degree(int v) const;
  int max_degree() const;
  uint64_t vertex_mask() const;  // all n vertices as a bitmask

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<uint64_t> adj_;
};

std::vector<std::pair<int, int>> edge_list(const Graph& g);

// Iterate set bits low to high.
template <class F>
inline void for_each_bit(uint64_t mask, F&& f) {
  while (mask) {
    int v = __builtin_ctzll(mask);
    mask &= mask - 1;
    f(v);
  }
}

inline int popcount64(uint64_t mask) { return __builtin_popcountll(mask); }

}  // namespace spex
