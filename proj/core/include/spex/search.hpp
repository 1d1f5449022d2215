#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

// Conjunction of constraints on enumerated graphs.
struct Predicate {
  std::optional<int> clique_free;    // require omega(G) < value
  std::optional<int> min_chromatic;  // require chi(G) >= value
  std::optional<int> max_chromatic;  // require chi(G) <= value
  bool connected_only = false;

  bool matches(const Graph& g) const;
};

enum class ObjectiveKind {
  edge_count,
  adjacency_radius,
  signless_radius,
  a_alpha_radius,
  p_radius
};

struct Objective {
  ObjectiveKind kind = ObjectiveKind::edge_count;
  double alpha = 0.0;  // a_alpha_radius only
  double p = 2.0;      // p_radius only

  static Objective edges();
  static Objective adjacency();
  static Objective signless();
  static Objective a_alpha(double alpha);
  static Objective p_spectral(double p);

  double evaluate(const Graph& g, int restarts = 8, uint64_t seed = 1) const;
  std::string describe() const;
};

struct empty_class_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Visit every labeled graph on n vertices satisfying pred, 3 <= n <= 8.
// Clique freeness prunes the generation tree; the other constraints are
// checked at the leaves.
void enumerate(int n, const Predicate& pred,
               const std::function<void(const Graph&)>& visit);

long count_graphs(int n, const Predicate& pred);

struct ArgmaxResult {
  double value = 0.0;
  std::vector<std::string> witnesses;  // canonical graph6, sorted
  std::vector<Graph> witness_graphs;   // one representative per witness
};

// Maximum of obj over the predicate class, witnesses within 1e-9 of the
// maximum deduplicated by canonical form.  For the p objective, everything
// within 1e-6 of the running maximum is re-solved with 32 restarts first.
ArgmaxResult argmax(int n, const Predicate& pred, const Objective& obj,
                    int jobs = 1, uint64_t seed = 1);

}  // namespace spex
