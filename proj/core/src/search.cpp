#include "spex/search.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <thread>

#include "spex/canonical.hpp"
#include "spex/invariants.hpp"
#include "spex/spectral.hpp"

namespace spex {

bool Predicate::matches(const Graph& g) const {
  if (clique_free && has_clique(g, *clique_free)) return false;
  if (connected_only && !is_connected(g)) return false;
  if (max_chromatic && !colorable(g, *max_chromatic)) return false;
  if (min_chromatic && colorable(g, *min_chromatic - 1)) return false;
  return true;
}

Objective Objective::edges() { return {ObjectiveKind::edge_count}; }
Objective Objective::adjacency() { return {ObjectiveKind::adjacency_radius}; }
Objective Objective::signless() { return {ObjectiveKind::signless_radius}; }
Objective Objective::a_alpha(double alpha) {
  return {ObjectiveKind::a_alpha_radius, alpha};
}
Objective Objective::p_spectral(double p) {
  Objective o{ObjectiveKind::p_radius};
  o.p = p;
  return o;
}

double Objective::evaluate(const Graph& g, int restarts, uint64_t seed) const {
  switch (kind) {
    case ObjectiveKind::edge_count:
      return g.edge_count();
    case ObjectiveKind::adjacency_radius:
      return adjacency_radius(g).value;
    case ObjectiveKind::signless_radius:
      return signless_laplacian_radius(g).value;
    case ObjectiveKind::a_alpha_radius:
      return a_alpha_radius(g, alpha).value;
    case ObjectiveKind::p_radius: {
      PSpectralOptions opt;
      opt.p = p;
      opt.restarts = restarts;
      opt.seed = seed;
      return p_spectral_radius(g, opt).value;
    }
  }
  throw std::logic_error("unreachable");
}

std::string Objective::describe() const {
  switch (kind) {
    case ObjectiveKind::edge_count:
      return "edges";
    case ObjectiveKind::adjacency_radius:
      return "lambda";
    case ObjectiveKind::signless_radius:
      return "q";
    case ObjectiveKind::a_alpha_radius:
      return "a_alpha(" + std::to_string(alpha) + ")";
    case ObjectiveKind::p_radius:
      return "p_radius(" + std::to_string(p) + ")";
  }
  throw std::logic_error("unreachable");
}

namespace {

constexpr int kShardDepth = 16;

struct Enumerator {
  const Predicate& pred;
  const std::function<void(const Graph&)>& visit;
  std::vector<std::pair<int, int>> pairs;
  Graph g;
  size_t depth;      // sharding decision depth
  int clique_k = 0;  // 0 = unconstrained
  int shard = 0, shards = 1;

  Enumerator(int n, const Predicate& p, const std::function<void(const Graph&)>& v)
      : pred(p), visit(v), g(n) {
    for (int b = 1; b < n; ++b)
      for (int a = 0; a < b; ++a) pairs.emplace_back(a, b);
    depth = std::min<size_t>(kShardDepth, pairs.size());
    if (pred.clique_free) clique_k = *pred.clique_free;
  }

  void leaf() {
    if (pred.connected_only && !is_connected(g)) return;
    if (pred.max_chromatic && !colorable(g, *pred.max_chromatic)) return;
    if (pred.min_chromatic && colorable(g, *pred.min_chromatic - 1)) return;
    assert(!clique_k || !has_clique(g, clique_k));
    visit(g);
  }

  void rec(size_t idx, uint64_t prefix) {
    if (idx == depth && shards > 1 && prefix % shards != uint64_t(shard)) return;
    if (idx == pairs.size()) {
      leaf();
      return;
    }
    auto [a, b] = pairs[idx];
    rec(idx + 1, prefix << 1);
    if (clique_k &&
        has_clique_in_mask(g, g.neighbors(a) & g.neighbors(b), clique_k - 2))
      return;  // the edge ab would complete a forbidden clique
    g.add_edge(a, b);
    rec(idx + 1, (prefix << 1) | 1);
    g.remove_edge(a, b);
  }

  void run() { rec(0, 0); }
};

void check_enumerable(int n) {
  if (n < 3 || n > 8)
    throw std::domain_error("enumeration supports 3 <= n <= 8 vertices");
}

}  // namespace

void enumerate(int n, const Predicate& pred,
               const std::function<void(const Graph&)>& visit) {
  check_enumerable(n);
  Enumerator e(n, pred, visit);
  e.run();
}

long count_graphs(int n, const Predicate& pred) {
  long count = 0;
  enumerate(n, pred, [&](const Graph&) { ++count; });
  return count;
}

namespace {

struct Candidate {
  double value;
  Graph graph;
};

struct WorkerState {
  double best = -1.0;
  std::vector<Candidate> cands;
};

void scan_worker(int n, const Predicate& pred, const Objective& obj, double band,
                 uint64_t seed, int shard, int shards, WorkerState& out) {
  std::function<void(const Graph&)> visit = [&](const Graph& g) {
    double val = obj.evaluate(g, 8, seed);
    if (val > out.best) out.best = val;
    if (val >= out.best - band) {
      out.cands.push_back({val, g});
      if (out.cands.size() > 8192) {
        std::erase_if(out.cands,
                      [&](const Candidate& c) { return c.value < out.best - band; });
      }
    }
  };
  Enumerator e(n, pred, visit);
  e.shard = shard;
  e.shards = shards;
  e.run();
}

}  // namespace

ArgmaxResult argmax(int n, const Predicate& pred, const Objective& obj, int jobs,
                    uint64_t seed) {
  check_enumerable(n);
  if (jobs < 1) jobs = 1;
  double band = obj.kind == ObjectiveKind::p_radius ? 1e-6 : 1e-9;

  std::vector<WorkerState> states(jobs);
  if (jobs == 1) {
    scan_worker(n, pred, obj, band, seed, 0, 1, states[0]);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w)
      threads.emplace_back(scan_worker, n, std::cref(pred), std::cref(obj), band,
                           seed, w, jobs, std::ref(states[w]));
    for (auto& t : threads) t.join();
  }

  double best = -1.0;
  bool any = false;
  for (const WorkerState& st : states) {
    if (!st.cands.empty()) any = true;
    best = std::max(best, st.best);
  }
  if (!any) throw empty_class_error("no graph satisfies the predicate");

  std::vector<Candidate> pool;
  for (WorkerState& st : states)
    for (Candidate& c : st.cands)
      if (c.value >= best - band) pool.push_back(std::move(c));

  if (obj.kind == ObjectiveKind::p_radius) {
    for (Candidate& c : pool)
      c.value = std::max(c.value, obj.evaluate(c.graph, 32, seed));
    for (const Candidate& c : pool) best = std::max(best, c.value);
  }

  std::map<std::string, Graph> by_canon;
  for (const Candidate& c : pool)
    if (c.value >= best - 1e-9) by_canon.emplace(canonical_form(c.graph).g6, c.graph);

  ArgmaxResult result;
  result.value = best;
  for (auto& [g6, g] : by_canon) {
    result.witnesses.push_back(g6);
    result.witness_graphs.push_back(g);
  }
  return result;
}

}  // namespace spex
