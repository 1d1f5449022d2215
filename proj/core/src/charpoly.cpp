#include "spex/charpoly.hpp"

#include <array>
#include <stdexcept>

namespace spex {

namespace {

Polynomial x_plus(const BigInt& c) { return Polynomial::linear(c, 1); }

Polynomial det_rec(const std::vector<std::vector<Polynomial>>& m,
                   std::vector<int> cols, int row) {
  if (cols.size() == 1) return m[row][cols[0]];
  Polynomial acc;
  for (size_t k = 0; k < cols.size(); ++k) {
    if (m[row][cols[k]].is_zero()) continue;
    std::vector<int> rest;
    for (size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    Polynomial minor = det_rec(m, rest, row + 1);
    Polynomial term = m[row][cols[k]] * minor;
    if (k % 2 == 1) term = -term;
    acc = acc + term;
  }
  return acc;
}

Polynomial det(const std::vector<std::vector<Polynomial>>& m) {
  std::vector<int> cols;
  for (size_t i = 0; i < m.size(); ++i) cols.push_back(int(i));
  return det_rec(m, cols, 0);
}

void check_part(long b, const char* which) {
  if (b < 1)
    throw std::invalid_argument(std::string(which) + " part size must be positive");
}

}  // namespace

Polynomial sk_radius_poly(long a, long b) {
  check_part(a, "first");
  check_part(b, "second");
  BigInt A(a), B(b);
  return Polynomial({-2 * A * B + 2 * A + 2 * B - 2, 3 * A * B - 2 * A - 2 * B + 1,
                     0, -(A * B + 1), 0, 1});
}

Polynomial pinch_correction_poly(long b1, long b2) {
  check_part(b1, "first");
  check_part(b2, "second");
  BigInt A(b1), B(b2);
  return Polynomial({3 * (A - 1) * (B - 1), 2 * A + 2 * B - 3 * A * B - 1,
                     -(A * B + A + B - 3), A * B + 1, A + B + 1, 1});
}

Polynomial pinch_correction_det(long b1, long b2) {
  check_part(b1, "first");
  check_part(b2, "second");
  Polynomial one = Polynomial::constant(1);
  Polynomial zero;
  Polynomial a1 = Polynomial::constant(BigInt(b1 - 1));
  Polynomial a2 = Polynomial::constant(BigInt(b2 - 1));
  std::vector<std::vector<Polynomial>> m = {
      {x_plus(1), one, zero, a1, zero},
      {one, x_plus(1), zero, zero, a2},
      {zero, zero, x_plus(1), a1, a2},
      {one, zero, one, x_plus(BigInt(b1 - 1)), zero},
      {zero, one, one, zero, x_plus(BigInt(b2 - 1))}};
  return det(m);
}

Polynomial pinch_radius_poly(const PartSizes& parts) {
  const std::vector<int>& b = parts.sizes;
  int r = parts.count();
  Polynomial f = sk_radius_poly(b[0], b[1]);
  if (r == 2) return f;
  Polynomial corr = pinch_correction_poly(b[0], b[1]);
  for (int k = 3; k <= r; ++k) {
    Polynomial prod = Polynomial::constant(1);  // (x+b_3)...(x+b_{k-1})
    for (int i = 3; i < k; ++i) prod = prod * x_plus(b[i - 1]);
    BigInt bk(b[k - 1]);
    f = x_plus(bk) * f - (prod * corr) * bk;
  }
  return f;
}

Polynomial rebalance_difference(RebalanceMove mv, long b1, long b2, long b3) {
  long a1 = b1, a2 = b2, a3 = b3;
  switch (mv) {
    case RebalanceMove::special_pair:
      a1 = b1 + 1;
      a2 = b2 - 1;
      break;
    case RebalanceMove::into_first_special:
      a1 = b1 + 1;
      a3 = b3 - 1;
      break;
    case RebalanceMove::out_of_first_special:
      a1 = b1 - 1;
      a3 = b3 + 1;
      break;
  }
  if (a1 < 1 || a2 < 1 || a3 < 1)
    throw std::domain_error("rebalancing move would empty a part");
  PartSizes before({int(b1), int(b2), int(b3)});
  PartSizes after({int(a1), int(a2), int(a3)});
  return pinch_radius_poly(after) - pinch_radius_poly(before);
}

Polynomial rebalance_difference_closed_form(RebalanceMove mv, long b1, long b2,
                                            long b3) {
  BigInt A(b1), B(b2), C(b3);
  switch (mv) {
    case RebalanceMove::special_pair: {
      // (b1-b2+1)(x-1)((x-1)(x+2)(x+b3) + b3(x^2-3))
      Polynomial inner =
          x_plus(-1) * x_plus(2) * x_plus(C) + Polynomial({-3, 0, 1}) * C;
      return (x_plus(-1) * inner) * (A - B + 1);
    }
    case RebalanceMove::into_first_special:
      return Polynomial({5 * A * B - 5 * A - 5 * B * C + 5 * C,
                         6 * B * C - 6 * A * B + 4 * A - 4 * B - 4 * C + 4,
                         B * C - A * B - A + B + C, 2 * (B * (A - C + 1) + 1),
                         A - C + 2});
    case RebalanceMove::out_of_first_special:
      return Polynomial({-5 * A * B + 5 * A + 5 * B * C + 10 * B - 5 * C - 10,
                         6 * A * B - 6 * B * C - 4 * A - 8 * B + 4 * C + 4,
                         A * B - B * C + A - C - 3 * B - 2, 2 * B * (C - A + 1) - 2,
                         C - A});
  }
  throw std::logic_error("unreachable");
}

Polynomial multipartite_charpoly_adjacency(const PartSizes& parts) {
  int n = parts.total();
  int r = parts.count();
  Polynomial sum;
  Polynomial prod = Polynomial::constant(1);
  for (int i = 0; i < r; ++i) {
    Polynomial exclude = Polynomial::constant(BigInt(parts.sizes[i]));
    for (int j = 0; j < r; ++j)
      if (j != i) exclude = exclude * x_plus(parts.sizes[j]);
    sum = sum + exclude;
    prod = prod * x_plus(parts.sizes[i]);
  }
  return Polynomial::x_power(n - r) * (prod - sum);
}

Polynomial multipartite_charpoly_signless(const PartSizes& parts) {
  int n = parts.total();
  int r = parts.count();
  Polynomial head = Polynomial::constant(1);
  for (int i = 0; i < r; ++i) {
    Polynomial lin = x_plus(BigInt(parts.sizes[i]) - n);
    for (int k = 0; k < parts.sizes[i] - 1; ++k) head = head * lin;
  }
  Polynomial sum;
  Polynomial prod = Polynomial::constant(1);
  for (int i = 0; i < r; ++i) {
    Polynomial exclude = Polynomial::constant(BigInt(parts.sizes[i]));
    for (int j = 0; j < r; ++j)
      if (j != i) exclude = exclude * x_plus(BigInt(2) * parts.sizes[j] - n);
    sum = sum + exclude;
    prod = prod * x_plus(BigInt(2) * parts.sizes[i] - n);
  }
  return head * (prod - sum);
}

namespace {

Polynomial charpoly_from_traces(const std::vector<std::vector<BigInt>>& m) {
  int n = static_cast<int>(m.size());
  if (n > 12) throw std::domain_error("exact charpoly limited to 12 vertices");
  std::vector<BigInt> p(n + 1, 0);  // power sums of eigenvalues
  std::vector<std::vector<BigInt>> pw = m;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      std::vector<std::vector<BigInt>> nx(n, std::vector<BigInt>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
          if (pw[i][l] == 0) continue;
          for (int j = 0; j < n; ++j) nx[i][j] += pw[i][l] * m[l][j];
        }
      pw = std::move(nx);
    }
    for (int i = 0; i < n; ++i) p[k] += pw[i][i];
  }
  std::vector<BigInt> e(n + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) {
      BigInt term = e[k - i] * p[i];
      acc += (i % 2 == 1) ? term : -term;
    }
    if (acc % k != 0) throw std::logic_error("newton identity division failed");
    e[k] = acc / k;
  }
  std::vector<BigInt> c(n + 1, 0);
  for (int k = 0; k <= n; ++k) c[n - k] = (k % 2 == 0) ? e[k] : -e[k];
  return Polynomial(std::move(c));
}

}  // namespace

Polynomial adjacency_charpoly(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (auto [u, v] : edge_list(g)) m[u][v] = m[v][u] = 1;
  return charpoly_from_traces(m);
}

Polynomial signless_charpoly(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (auto [u, v] : edge_list(g)) m[u][v] = m[v][u] = 1;
  for (int v = 0; v < n; ++v) m[v][v] = g.degree(v);
  return charpoly_from_traces(m);
}

std::vector<IdentityCheck> run_identity_grid(int max_part) {
  std::vector<IdentityCheck> out;
  auto push = [&](const std::string& name, long b1, long b2, long b3, bool pass) {
    out.push_back({name, b1, b2, b3, pass});
  };

  for (long b1 = 1; b1 <= max_part; ++b1)
    for (long b2 = 2; b2 <= max_part; ++b2) {
      Polynomial lhs = sk_radius_poly(b1 + 1, b2 - 1) - sk_radius_poly(b1, b2);
      Polynomial rhs =
          (x_plus(-1) * x_plus(-1) * x_plus(2)) * BigInt(b1 - b2 + 1);
      push("sk_shift", b1, b2, 0, lhs == rhs);
    }

  for (long s = 0; s + 2 <= max_part; ++s)
    for (long t = 0; t + 3 <= max_part; ++t) {
      Polynomial lhs = sk_radius_poly(s + 2, t + 2) - sk_radius_poly(s + 1, t + 3);
      Polynomial rhs =
          (x_plus(-1) * x_plus(-1) * x_plus(2)) * BigInt(-(t - s + 1));
      push("sk_shift_two_step", s, t, 0, lhs == rhs);
    }

  for (long b1 = 1; b1 <= max_part; ++b1)
    for (long b2 = 2; b2 <= max_part; ++b2) {
      Polynomial lhs =
          pinch_correction_poly(b1 + 1, b2 - 1) - pinch_correction_poly(b1, b2);
      Polynomial rhs = (x_plus(-1) * Polynomial({-3, 0, 1})) * BigInt(-(b1 - b2 + 1));
      push("correction_shift", b1, b2, 0, lhs == rhs);
    }

  for (long b1 = 1; b1 <= max_part; ++b1)
    for (long b2 = 1; b2 <= max_part; ++b2)
      push("correction_det", b1, b2, 0,
           pinch_correction_poly(b1, b2) == pinch_correction_det(b1, b2));

  for (long b1 = 1; b1 <= max_part; ++b1)
    for (long b2 = 1; b2 <= max_part; ++b2)
      for (long b3 = 1; b3 <= max_part; ++b3) {
        if (b2 >= 2)
          push("rebalance_special_pair", b1, b2, b3,
               rebalance_difference(RebalanceMove::special_pair, b1, b2, b3) ==
                   rebalance_difference_closed_form(RebalanceMove::special_pair, b1,
                                                    b2, b3));
        if (b3 >= 2)
          push("rebalance_into_first", b1, b2, b3,
               rebalance_difference(RebalanceMove::into_first_special, b1, b2, b3) ==
                   rebalance_difference_closed_form(RebalanceMove::into_first_special,
                                                    b1, b2, b3));
        if (b1 >= 2)
          push("rebalance_out_of_first", b1, b2, b3,
               rebalance_difference(RebalanceMove::out_of_first_special, b1, b2,
                                    b3) ==
                   rebalance_difference_closed_form(
                       RebalanceMove::out_of_first_special, b1, b2, b3));
      }

  return out;
}

std::vector<long> rebalance_nonnegative_points(RebalanceMove mv, long b1, long b2,
                                               long b3, long x_from, long x_to) {
  Polynomial diff = rebalance_difference(mv, b1, b2, b3);
  std::vector<long> bad;
  for (long x = x_from; x <= x_to; ++x)
    if (diff.evaluate_int(BigInt(x)) >= 0) bad.push_back(x);
  return bad;
}

}  // namespace spex
