#pragma once

#include <string>
#include <vector>

#include "spex/families.hpp"
#include "spex/graph.hpp"
#include "spex/polynomial.hpp"

namespace spex {

// Quintic whose largest root is the spectral radius of sk_graph(a, b), i.e.
// of pinched_multipartite({a, b}).
Polynomial sk_radius_poly(long a, long b);

// Correction quintic in the pinched-family recurrence, two equivalent routes.
Polynomial pinch_correction_poly(long b1, long b2);
Polynomial pinch_correction_det(long b1, long b2);  // 5x5 determinant form

// Degree r+3 polynomial whose largest root is the spectral radius of
// pinched_multipartite(parts).  The first two parts are the special ones.
Polynomial pinch_radius_poly(const PartSizes& parts);

// Rebalancing moves on a three-part pinched graph (b1, b2, b3):
//   special_pair:          (b1, b2, b3) -> (b1+1, b2-1, b3)
//   into_first_special:    (b1, b2, b3) -> (b1+1, b2, b3-1)
//   out_of_first_special:  (b1, b2, b3) -> (b1-1, b2, b3+1)
enum class RebalanceMove { special_pair, into_first_special, out_of_first_special };

// pinch_radius_poly(after) - pinch_radius_poly(before)
Polynomial rebalance_difference(RebalanceMove mv, long b1, long b2, long b3);
// the same difference from its published closed form
Polynomial rebalance_difference_closed_form(RebalanceMove mv, long b1, long b2, long b3);

// Full characteristic polynomials of complete multipartite graphs.
Polynomial multipartite_charpoly_adjacency(const PartSizes& parts);
Polynomial multipartite_charpoly_signless(const PartSizes& parts);

// Exact characteristic polynomials for small graphs (n <= 12), via traces and
// Newton's identities.
Polynomial adjacency_charpoly(const Graph& g);
Polynomial signless_charpoly(const Graph& g);

struct IdentityCheck {
  std::string name;
  long b1, b2, b3;
  bool pass;
};

// Exact polynomial identities tying the quintics, their shifts, and the
// rebalancing differences together, on a parameter grid.
std::vector<IdentityCheck> run_identity_grid(int max_part);

// Integer points x in [x_from, x_to] where the rebalancing difference fails
// to be negative.
std::vector<long> rebalance_nonnegative_points(RebalanceMove mv, long b1, long b2,
                                               long b3, long x_from, long x_to);

}  // namespace spex
