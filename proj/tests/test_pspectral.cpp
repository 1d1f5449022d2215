#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "naive.hpp"
#include "spex/families.hpp"
#include "spex/graph.hpp"
#include "spex/spectral.hpp"

using spex::Graph;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
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

double p_radius(const Graph& g, double p, int restarts = 8) {
  spex::PSpectralOptions opt;
  opt.p = p;
  opt.restarts = restarts;
  return spex::p_spectral_radius(g, opt).value;
}

}  // namespace

TEST_CASE("K_2 closed form 2^(1-2/p)") {
  for (double p : {1.5, 2.0, 3.0, 4.0, 8.0, 64.0}) {
    Graph k2 = complete(2);
    CHECK(p_radius(k2, p) ==
          doctest::Approx(std::pow(2.0, 1.0 - 2.0 / p)).epsilon(1e-8));
  }
}

TEST_CASE("p = 2 recovers the spectral radius, all graphs n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for_all_graphs(n, [](const Graph& g) {
      REQUIRE(p_radius(g, 2.0) ==
              doctest::Approx(spex::adjacency_radius(g).value).epsilon(1e-8));
    });
}

TEST_CASE("balanced multipartite uniform optimum for p >= 2") {
  // r | n makes the uniform vector optimal: (1 - 1/r) n^(2 - 2/p)
  for (double p : {2.0, 3.0, 8.0}) {
    CHECK(p_radius(spex::turan_graph(6, 3), p) ==
          doctest::Approx((2.0 / 3.0) * std::pow(6.0, 2.0 - 2.0 / p)).epsilon(1e-7));
    CHECK(p_radius(complete(3), p) ==
          doctest::Approx(2.0 * std::pow(3.0, 1.0 - 2.0 / p)).epsilon(1e-7));
  }
}

TEST_CASE("grid oracle agreement for n <= 4") {
  for (double p : {1.2, 1.5, 2.0, 3.0}) {
    for_all_graphs(4, [&](const Graph& g) {
      double grid = naive::p_radius_grid(g, p);
      double solved = p_radius(g, p, 16);
      REQUIRE(solved >= grid - 1e-5);
      REQUIRE(solved <= grid + 1e-5);
    });
  }
}

TEST_CASE("p near 1 approaches the Lagrangian") {
  // lambda^(1)(K_3) = 1 - 1/3; at p = 1.01 the value is still near 2/3
  Graph k3 = complete(3);
  double val = p_radius(k3, 1.01, 16);
  CHECK(val == doctest::Approx(naive::p_radius_grid(k3, 1.01)).epsilon(1e-5));
  CHECK(std::fabs(val - 2.0 / 3.0) < 0.02);
}

TEST_CASE("edgeless and tiny inputs") {
  auto res = spex::p_spectral_radius(Graph(3), spex::PSpectralOptions{});
  CHECK(res.value == 0.0);
  CHECK(res.vector == std::vector<double>(3, 0.0));
  CHECK_THROWS_AS(spex::p_spectral_radius(Graph(0), spex::PSpectralOptions{}),
                  std::invalid_argument);
  spex::PSpectralOptions bad;
  bad.p = 1.0;
  CHECK_THROWS_AS(spex::p_spectral_radius(complete(3), bad), std::domain_error);
}

TEST_CASE("stationarity residual and Rayleigh consistency") {
  Graph g = spex::sk_graph(2, 3);
  spex::PSpectralOptions opt;
  opt.p = 3.0;
  auto res = spex::p_spectral_radius(g, opt);
  CHECK(res.residual <= opt.tolerance);
  double norm = 0.0, s = 0.0;
  for (double x : res.vector) norm += std::pow(std::fabs(x), opt.p);
  for (auto [u, v] : spex::edge_list(g)) s += res.vector[u] * res.vector[v];
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(2.0 * s == doctest::Approx(res.value).epsilon(1e-8));
}

TEST_CASE("heuristic-global flag marks p < 2") {
  Graph g = spex::sk_graph(2, 2);
  spex::PSpectralOptions opt;
  opt.p = 1.5;
  CHECK(spex::p_spectral_radius(g, opt).heuristic_global);
  opt.p = 2.5;
  CHECK_FALSE(spex::p_spectral_radius(g, opt).heuristic_global);
}

TEST_CASE("determinism under a fixed seed") {
  Graph g = spex::sk_graph(3, 3);
  spex::PSpectralOptions opt;
  opt.p = 1.5;
  opt.seed = 42;
  auto a = spex::p_spectral_radius(g, opt);
  auto b = spex::p_spectral_radius(g, opt);
  CHECK(a.value == b.value);
  CHECK(a.vector == b.vector);
}
