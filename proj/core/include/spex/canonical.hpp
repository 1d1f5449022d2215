#pragma once

#include <compare>
#include <string>

#include "spex/graph.hpp"

namespace spex {

// Complete isomorphism invariant for n <= 10: the graph6 string of the
// relabeling whose upper-triangle bit string is lexicographically least
// among all relabelings that list vertices in non-decreasing degree order.
struct CanonicalForm {
  std::string g6;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace spex
