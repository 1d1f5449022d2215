#pragma once

#include "spex/polynomial.hpp"

namespace spex {

// Exact real-root machinery: Sturm chains over rationals, bisection on dyadic
// points.  Intended for the modest degrees (<= 16) this project produces.

int count_real_roots(const Polynomial& p);                       // distinct roots
int count_real_roots_above(const Polynomial& p, const BigRat& a);  // in (a, +inf)

// Largest real root, absolute error below `tolerance`.  Throws
// std::domain_error when p has no real root or is constant/zero.
double largest_real_root(const Polynomial& p, double tolerance = 1e-12);

}  // namespace spex
