#include "spex/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "spex/graph6.hpp"

namespace spex {

namespace {

struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> want_degree;     // degree required at each position
  std::vector<uint32_t> best_cols;  // column bits of the best relabeling
  std::vector<int> best_perm;
  std::vector<uint32_t> cols;
  std::vector<int> perm;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
    want_degree.resize(n);
    for (int v = 0; v < n; ++v) want_degree[v] = g.degree(v);
    std::sort(want_degree.begin(), want_degree.end());
    cols.resize(n);
    perm.resize(n);
  }

  // rel: 0 while equal to best prefix, -1 once strictly below it
  void place(int pos, uint64_t used, int rel) {
    if (pos == n) {
      // full compare: `rel` alone is stale once best changed inside a sibling
      if (!have_best || std::lexicographical_compare(cols.begin(), cols.end(),
                                                     best_cols.begin(), best_cols.end())) {
        best_cols = cols;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      if (g.degree(v) != want_degree[pos]) continue;
      uint32_t col = 0;
      for (int i = 0; i < pos; ++i)
        col = (col << 1) | ((g.neighbors(v) >> perm[i]) & 1);
      int nrel = rel;
      if (have_best && nrel == 0) {
        if (col > best_cols[pos]) continue;
        if (col < best_cols[pos]) nrel = -1;
      }
      cols[pos] = col;
      perm[pos] = v;
      place(pos + 1, used | (uint64_t{1} << v), nrel);
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n > 10) throw std::domain_error("canonical form limited to 10 vertices");
  if (n <= 1) return g;
  CanonSearch search(g);
  search.place(0, 0, 0);
  Graph out(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.has_edge(search.best_perm[i], search.best_perm[j])) out.add_edge(i, j);
  return out;
}

CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{graph6_encode(canonical_graph(g))};
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace spex
