#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "naive.hpp"
#include "spex/families.hpp"
#include "spex/graph.hpp"
#include "spex/invariants.hpp"

using spex::Graph;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);        // outer cycle
    g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    g.add_edge(v, 5 + v);
  }
  return g;
}

template <class F>
void for_all_graphs(int n, F&& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  for (uint64_t mask = 0; mask < (uint64_t(1) << pairs.size()); ++mask) {
    Graph g(n);
    for (size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    f(g);
  }
}

Graph random_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("connectivity") {
  CHECK(spex::is_connected(Graph(0)));
  CHECK(spex::is_connected(Graph(1)));
  CHECK_FALSE(spex::is_connected(Graph(2)));
  CHECK(spex::is_connected(cycle(6)));

  Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}});
  CHECK_FALSE(spex::is_connected(g));
  CHECK(spex::component_of(g, 0) == 0b00011);
  CHECK(spex::component_of(g, 3) == 0b01100);
  auto comps = spex::components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == 0b00011);
  CHECK(comps[1] == 0b01100);
  CHECK(comps[2] == 0b10000);
}

TEST_CASE("clique and coloring agree with the oracles on all graphs n <= 5") {
  for (int n = 0; n <= 5; ++n)
    for_all_graphs(n, [&](const Graph& g) {
      int omega = naive::clique_number(g);
      REQUIRE(spex::clique_number(g) == omega);
      for (int k = std::max(1, omega - 1); k <= omega + 1; ++k)
        REQUIRE(spex::has_clique(g, k) == (omega >= k));
      int chi = naive::chromatic_number(g);
      REQUIRE(spex::chromatic_number(g) == chi);
      for (int k = 0; k <= n + 1; ++k)
        REQUIRE(spex::colorable(g, k) == naive::colorable(g, k));
    });
}

TEST_CASE("clique and coloring agree with the oracles on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 6 + int(rng() % 3);  // 6..8
    Graph g = random_graph(n, rng);
    CHECK(spex::clique_number(g) == naive::clique_number(g));
    CHECK(spex::colorable(g, 3) == naive::colorable(g, 3));
    CHECK(spex::colorable(g, 4) == naive::colorable(g, 4));
    if (n == 6) CHECK(spex::chromatic_number(g) == naive::chromatic_number(g));
  }
}

TEST_CASE("has_clique_in_mask restricts to the induced subgraph") {
  Graph g = spex::turan_graph(6, 3);
  CHECK(spex::has_clique_in_mask(g, g.vertex_mask(), 3));
  // one part and one extra vertex: largest clique is an edge
  uint64_t mask = 0b000111;
  CHECK(spex::has_clique_in_mask(g, mask, 2));
  CHECK_FALSE(spex::has_clique_in_mask(g, mask, 3));
  CHECK(spex::has_clique_in_mask(g, 0, 0));
}

TEST_CASE("named graphs") {
  Graph p = petersen();
  CHECK(spex::clique_number(p) == 2);
  CHECK(spex::chromatic_number(p) == 3);
  CHECK(spex::is_r_partite(p, 3));
  CHECK_FALSE(spex::is_r_partite(p, 2));

  Graph w5(6);  // 5-wheel
  for (int v = 0; v < 5; ++v) {
    w5.add_edge(v, (v + 1) % 5);
    w5.add_edge(v, 5);
  }
  CHECK(spex::clique_number(w5) == 3);
  CHECK(spex::chromatic_number(w5) == 4);
}

TEST_CASE("is_r_partite validates r") {
  CHECK_THROWS_AS(spex::is_r_partite(Graph(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(spex::colorable(Graph(3), -1), std::invalid_argument);
}

TEST_CASE("complete multipartite recognition") {
  CHECK(spex::is_complete_multipartite(spex::turan_graph(7, 3)));
  CHECK(spex::multipartite_parts(spex::turan_graph(7, 3)) ==
        std::vector<int>{2, 2, 3});
  CHECK(spex::is_complete_multipartite(Graph(3)));  // single part
  CHECK(spex::multipartite_parts(Graph(3)) == std::vector<int>{3});
  CHECK(spex::is_complete_multipartite(cycle(4)));  // K_{2,2}
  CHECK_FALSE(spex::is_complete_multipartite(cycle(5)));
  CHECK_FALSE(spex::is_complete_multipartite(spex::sk_graph(2, 3)));
  CHECK_THROWS_AS(spex::multipartite_parts(cycle(5)), std::invalid_argument);
}

TEST_CASE("Nosal equality shape recognition") {
  Graph kb = spex::complete_multipartite(spex::PartSizes{2, 3});
  CHECK(spex::is_complete_bipartite_plus_isolated(kb));
  Graph kb_iso(7);
  for (int u = 0; u < 2; ++u)
    for (int v = 2; v < 5; ++v) kb_iso.add_edge(u, v);
  CHECK(spex::is_complete_bipartite_plus_isolated(kb_iso));
  CHECK(spex::is_complete_bipartite_plus_isolated(Graph(4)));  // no edges
  CHECK_FALSE(spex::is_complete_bipartite_plus_isolated(cycle(5)));
  Graph near = kb_iso;
  near.remove_edge(0, 2);
  CHECK_FALSE(spex::is_complete_bipartite_plus_isolated(near));
}
