#include "spex/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spex {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > max_vertices)
    throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
  adj_.assign(static_cast<size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex out of range: " + std::to_string(v));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (uint64_t row : adj_) total += popcount64(row);
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop edge rejected");
  adj_[u] |= uint64_t{1} << v;
  adj_[v] |= uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(uint64_t{1} << v);
  adj_[v] &= ~(uint64_t{1} << u);
}

void Graph::clear_vertex(int v) {
  check_vertex(v);
  for_each_bit(adj_[v], [&](int u) { adj_[u] &= ~(uint64_t{1} << v); });
  adj_[v] = 0;
}

uint64_t Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return popcount64(adj_[v]);
}

int Graph::max_degree() const {
  int d = 0;
  for (uint64_t row : adj_) d = std::max(d, popcount64(row));
  return d;
}

uint64_t Graph::vertex_mask() const {
  return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < g.vertex_count(); ++v)
    for_each_bit(g.neighbors(v) & ((uint64_t{1} << v) - 1),
                 [&](int u) { edges.emplace_back(u, v); });
  return edges;
}

}  // namespace spex
