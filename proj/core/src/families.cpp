#include "spex/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spex {

namespace {

void validate_parts(const std::vector<int>& sizes) {
  if (sizes.size() < 2) throw std::invalid_argument("need at least two parts");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("part sizes must be positive");
  long total = std::accumulate(sizes.begin(), sizes.end(), 0L);
  if (total > 63) throw std::invalid_argument("part sizes sum beyond 63");
}

}  // namespace

PartSizes::PartSizes(std::initializer_list<int> s) : sizes(s) { validate_parts(sizes); }

PartSizes::PartSizes(std::vector<int> s) : sizes(std::move(s)) { validate_parts(sizes); }

int PartSizes::total() const {
  return static_cast<int>(std::accumulate(sizes.begin(), sizes.end(), 0L));
}

PartSizes PartSizes::sorted() const {
  PartSizes out = *this;
  std::sort(out.sizes.begin(), out.sizes.end());
  return out;
}

Graph complete_multipartite(const PartSizes& parts) {
  int n = parts.total();
  Graph g(n);
  std::vector<int> block(n);
  int v = 0;
  for (int b = 0; b < parts.count(); ++b)
    for (int i = 0; i < parts.sizes[b]; ++i) block[v++] = b;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (block[u] != block[w]) g.add_edge(u, w);
  return g;
}

PartSizes turan_parts(int n, int r) {
  if (r < 2) throw std::invalid_argument("turan graph needs r >= 2");
  if (n < r) throw std::invalid_argument("turan graph needs n >= r");
  if (n > 63) throw std::invalid_argument("turan graph limited to 63 vertices");
  std::vector<int> sizes;
  int q = n / r, rem = n % r;
  for (int i = 0; i < r - rem; ++i) sizes.push_back(q);
  for (int i = 0; i < rem; ++i) sizes.push_back(q + 1);
  return PartSizes(sizes);
}

Graph turan_graph(int n, int r) { return complete_multipartite(turan_parts(n, r)); }

long turan_edge_count(int n, int r) {
  PartSizes parts = turan_parts(n, r);
  long sq = 0;
  for (int s : parts.sizes) sq += long(s) * s;
  return (long(n) * n - sq) / 2;
}

Graph sk_graph(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("sk graph needs a, b >= 1");
  if (a + b + 1 > 64) throw std::invalid_argument("sk graph limited to 64 vertices");
  // sides [0,a) and [a,a+b); edge (0,a) subdivided through z = a+b
  int z = a + b;
  Graph g(z + 1);
  for (int i = 0; i < a; ++i)
    for (int j = a; j < z; ++j)
      if (!(i == 0 && j == a)) g.add_edge(i, j);
  g.add_edge(0, z);
  g.add_edge(a, z);
  return g;
}

Graph pinched_multipartite(const PartSizes& parts) {
  int m = parts.total();
  int r = parts.count();
  int n = m + 1;
  Graph g = complete_multipartite(parts);
  Graph out(n);
  for (auto [u, w] : edge_list(g)) out.add_edge(u, w);
  int v = 0;                       // first vertex of part 1
  int w = parts.sizes[0];          // first vertex of part 2
  int u = n - 1;                   // the new vertex
  out.remove_edge(v, w);
  out.add_edge(u, v);
  out.add_edge(u, w);
  for (int t = parts.sizes[0] + parts.sizes[1]; t < m; ++t) out.add_edge(u, t);
  return out;
}

Graph y_graph(int n, int r) {
  if (r < 2) throw std::invalid_argument("y graph needs r >= 2");
  if (n < 2 * r + 1)
    throw std::domain_error("y graph defined for n >= 2r + 1");
  return pinched_multipartite(turan_parts(n - 1, r));
}

Graph erdos_family_graph(int n, int x1) {
  if (n < 5) throw std::invalid_argument("erdos family graph needs n >= 5");
  if (n > 64) throw std::invalid_argument("erdos family graph limited to 64 vertices");
  int xsize = n / 2;
  if (x1 < 1 || x1 > xsize - 1)
    throw std::invalid_argument("x1 must satisfy 1 <= x1 <= floor(n/2) - 1");
  // X = [0, xsize) with X1 = [0, x1); Y = [xsize, n) with u = n-2, v = n-1
  int u = n - 2, v = n - 1;
  Graph g(n);
  for (int x = 0; x < xsize; ++x)
    for (int y = xsize; y < u; ++y) g.add_edge(x, y);
  g.add_edge(u, v);
  for (int x = 0; x < x1; ++x) g.add_edge(u, x);
  for (int x = x1; x < xsize; ++x) g.add_edge(v, x);
  return g;
}

Graph split_graph(int n, int k) {
  if (n < 1 || n > 64) throw std::invalid_argument("vertex count out of range");
  if (k < 1 || k >= n) throw std::invalid_argument("clique size out of range");
  Graph g(n);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace spex
