#include "spex/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace spex {

uint64_t component_of(const Graph& g, int v) {
  uint64_t comp = uint64_t{1} << v;
  uint64_t frontier = comp;
  while (frontier) {
    uint64_t next = 0;
    for_each_bit(frontier, [&](int u) { next |= g.neighbors(u); });
    next &= ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

std::vector<uint64_t> components(const Graph& g) {
  std::vector<uint64_t> comps;
  uint64_t left = g.vertex_mask();
  while (left) {
    uint64_t comp = component_of(g, __builtin_ctzll(left));
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return component_of(g, 0) == g.vertex_mask();
}

namespace {

// Max-clique branch and bound with a greedy coloring bound.  With target > 0
// the search stops as soon as a clique of that size exists.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, int target) : g_(g), target_(target) {}

  int run(uint64_t cand) {
    best_ = 0;
    found_ = false;
    expand(0, cand);
    return best_;
  }
  bool found() const { return found_; }

 private:
  void expand(int size, uint64_t cand) {
    if (target_ > 0 && size >= target_) {
      found_ = true;
      best_ = std::max(best_, size);
      return;
    }
    if (!cand) {
      best_ = std::max(best_, size);
      return;
    }
    int order[Graph::max_vertices], color[Graph::max_vertices], m = 0;
    uint64_t rest = cand;
    for (int c = 1; rest; ++c) {
      uint64_t avail = rest;
      while (avail) {
        int v = __builtin_ctzll(avail);
        uint64_t bit = uint64_t{1} << v;
        avail &= ~(g_.neighbors(v) | bit);
        rest &= ~bit;
        order[m] = v;
        color[m] = c;
        ++m;
      }
    }
    for (int i = m - 1; i >= 0; --i) {
      if (found_) return;
      int goal = target_ > 0 ? target_ : best_ + 1;
      if (size + color[i] < goal) return;  // colors ascend, nothing left can reach
      expand(size + 1, cand & g_.neighbors(order[i]));
      cand &= ~(uint64_t{1} << order[i]);
    }
  }

  const Graph& g_;
  int target_;
  int best_ = 0;
  bool found_ = false;
};

bool bipartite_on_mask(const Graph& g, uint64_t mask) {
  uint64_t left = mask, side0 = 0, side1 = 0;
  while (left) {
    int start = __builtin_ctzll(left);
    uint64_t f0 = uint64_t{1} << start;
    side0 |= f0;
    uint64_t frontier = f0;
    bool even = true;
    while (frontier) {
      uint64_t next = 0;
      for_each_bit(frontier, [&](int u) { next |= g.neighbors(u); });
      next &= mask & ~(side0 | side1);
      if (even)
        side1 |= next;
      else
        side0 |= next;
      even = !even;
      frontier = next;
    }
    left = mask & ~(side0 | side1);
  }
  bool ok = true;
  for_each_bit(side0, [&](int v) {
    if (g.neighbors(v) & side0) ok = false;
  });
  for_each_bit(side1, [&](int v) {
    if (g.neighbors(v) & side1) ok = false;
  });
  return ok;
}

bool greedy_colorable(const Graph& g, int k) {
  int n = g.vertex_count();
  uint64_t used[Graph::max_vertices] = {};
  for (int v = 0; v < n; ++v) {
    int c = __builtin_ctzll(~used[v]);
    if (c >= k) return false;
    uint64_t above = v == 63 ? 0 : ~((uint64_t{2} << v) - 1);
    for_each_bit(g.neighbors(v) & above, [&](int u) { used[u] |= uint64_t{1} << c; });
  }
  return true;
}

// Exact 3-colorability: some independent set containing `anchor` whose
// removal leaves a bipartite graph.  Anchoring at a max-degree vertex keeps
// the subset space small: the rest of its class avoids its neighborhood.
bool three_colorable_exact(const Graph& g, uint64_t mask) {
  if (!mask) return true;
  int anchor = -1, bestdeg = -1;
  for_each_bit(mask, [&](int v) {
    int d = popcount64(g.neighbors(v) & mask);
    if (d > bestdeg) {
      bestdeg = d;
      anchor = v;
    }
  });
  uint64_t others = mask & ~g.neighbors(anchor) & ~(uint64_t{1} << anchor);
  uint64_t sub = 0;
  while (true) {
    uint64_t cls = sub | (uint64_t{1} << anchor);
    bool independent = true;
    for_each_bit(sub, [&](int v) {
      if (g.neighbors(v) & cls) independent = false;
    });
    if (independent && bipartite_on_mask(g, mask & ~cls)) return true;
    if (sub == others) return false;
    sub = (sub - others) & others;  // next subset of others
  }
}

bool backtrack_color_rec(const Graph& g, const std::vector<int>& order,
                         std::vector<int>& color, size_t idx, int k, int max_used) {
  if (idx == order.size()) return true;
  int v = order[idx];
  // cap the first fresh color to kill color-permutation symmetry
  int cap = std::min(k - 1, max_used + 1);
  for (int c = 0; c <= cap; ++c) {
    bool ok = true;
    for_each_bit(g.neighbors(v), [&](int u) {
      if (color[u] == c) ok = false;
    });
    if (!ok) continue;
    color[v] = c;
    if (backtrack_color_rec(g, order, color, idx + 1, k, std::max(max_used, c)))
      return true;
    color[v] = -1;
  }
  return false;
}

bool backtrack_colorable(const Graph& g, int k) {
  int n = g.vertex_count();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(n, -1);
  return backtrack_color_rec(g, order, color, 0, k, -1);
}

}  // namespace

int clique_number(const Graph& g) {
  CliqueSearch search(g, 0);
  return search.run(g.vertex_mask());
}

bool has_clique(const Graph& g, int k) {
  if (k <= 0) return true;
  if (k > g.vertex_count()) return false;
  CliqueSearch search(g, k);
  search.run(g.vertex_mask());
  return search.found();
}

bool has_clique_in_mask(const Graph& g, uint64_t mask, int k) {
  if (k <= 0) return true;
  if (k > popcount64(mask)) return false;
  CliqueSearch search(g, k);
  search.run(mask);
  return search.found();
}

bool colorable(const Graph& g, int k) {
  int n = g.vertex_count();
  if (k < 0) throw std::invalid_argument("negative color count");
  if (n == 0) return true;
  if (k == 0) return false;
  if (k >= n) return true;
  if (k == 1) return g.edge_count() == 0;
  if (k == 2) return bipartite_on_mask(g, g.vertex_mask());
  if (greedy_colorable(g, k)) return true;
  if (k == 3) return three_colorable_exact(g, g.vertex_mask());
  return backtrack_colorable(g, k);
}

int chromatic_number(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  for (int k = clique_number(g); k <= g.vertex_count(); ++k)
    if (colorable(g, k)) return k;
  return g.vertex_count();
}

bool is_r_partite(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("part count must be positive");
  return colorable(g, r);
}

bool is_complete_multipartite(const Graph& g) {
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && g.neighbors(u) != g.neighbors(v)) return false;
  return true;
}

std::vector<int> multipartite_parts(const Graph& g) {
  if (!is_complete_multipartite(g))
    throw std::invalid_argument("graph is not complete multipartite");
  int n = g.vertex_count();
  std::vector<int> parts;
  uint64_t seen = 0;
  for (int v = 0; v < n; ++v) {
    if ((seen >> v) & 1) continue;
    uint64_t cls = uint64_t{1} << v;
    for (int u = v + 1; u < n; ++u)
      if (g.neighbors(u) == g.neighbors(v)) cls |= uint64_t{1} << u;
    seen |= cls;
    parts.push_back(popcount64(cls));
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

bool is_complete_bipartite_plus_isolated(const Graph& g) {
  uint64_t ni = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) ni |= uint64_t{1} << v;
  if (!ni) return true;
  int v0 = __builtin_ctzll(ni);
  uint64_t b = g.neighbors(v0);
  uint64_t a = ni & ~b;
  bool ok = true;
  for_each_bit(a, [&](int v) {
    if (g.neighbors(v) != b) ok = false;
  });
  for_each_bit(b, [&](int v) {
    if (g.neighbors(v) != a) ok = false;
  });
  return ok;
}

}  // namespace spex
