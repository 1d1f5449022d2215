#include "spex/roots.hpp"

#include <stdexcept>
#include <vector>

namespace spex {

namespace {

// polynomials with rational coefficients, ascending, for the Sturm chain
using RatPoly = std::vector<BigRat>;

RatPoly to_rat(const Polynomial& p) {
  RatPoly out;
  for (const BigInt& c : p.coeffs()) out.push_back(BigRat(c));
  return out;
}

void rat_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_derivative(const RatPoly& p) {
  RatPoly out;
  for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * BigRat(BigInt(i)));
  return out;
}

// remainder of a / b
RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    BigRat q = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
    a.pop_back();
    rat_trim(a);
  }
  return a;
}

BigRat rat_eval(const RatPoly& p, const BigRat& x) {
  BigRat acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

int sign_of(const BigRat& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

struct Sturm {
  std::vector<RatPoly> chain;

  explicit Sturm(const Polynomial& square_free) {
    RatPoly p0 = to_rat(square_free);
    RatPoly p1 = rat_derivative(p0);
    chain.push_back(p0);
    if (!p1.empty()) chain.push_back(p1);
    while (chain.back().size() > 1) {
      RatPoly r = rat_rem(chain[chain.size() - 2], chain.back());
      if (r.empty()) break;
      for (BigRat& c : r) c = -c;
      chain.push_back(std::move(r));
    }
  }

  int variations_at(const BigRat& x) const {
    int var = 0, prev = 0;
    for (const RatPoly& p : chain) {
      int s = sign_of(rat_eval(p, x));
      if (s != 0) {
        if (prev != 0 && s != prev) ++var;
        prev = s;
      }
    }
    return var;
  }

  int variations_at_pos_inf() const {
    int var = 0, prev = 0;
    for (const RatPoly& p : chain) {
      if (p.empty()) continue;
      int s = sign_of(p.back());
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  }

  int variations_at_neg_inf() const {
    int var = 0, prev = 0;
    for (const RatPoly& p : chain) {
      if (p.empty()) continue;
      int s = sign_of(p.back());
      if ((p.size() - 1) % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  }
};

// gcd of p and p' via rational Euclid, returned as a primitive integer poly
Polynomial square_free_part(const Polynomial& p) {
  RatPoly a = to_rat(p), b = rat_derivative(a);
  while (!b.empty()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  // a = gcd(p, p'); divide p by it
  if (a.size() <= 1) return p;
  RatPoly q;  // quotient of p / a
  RatPoly rem = to_rat(p);
  q.assign(rem.size() - a.size() + 1, BigRat(0));
  while (rem.size() >= a.size() && !rem.empty()) {
    BigRat f = rem.back() / a.back();
    q[rem.size() - a.size()] = f;
    size_t off = rem.size() - a.size();
    for (size_t i = 0; i < a.size(); ++i) rem[off + i] -= f * a[i];
    rem.pop_back();
    rat_trim(rem);
  }
  // clear denominators, make primitive
  BigInt lcm = 1;
  for (const BigRat& c : q) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  std::vector<BigInt> ic;
  for (const BigRat& c : q) ic.push_back(BigInt(numerator(c) * (lcm / denominator(c))));
  BigInt g = 0;
  for (const BigInt& c : ic) g = boost::multiprecision::gcd(g, c);
  if (g > 1)
    for (BigInt& c : ic) c /= g;
  if (!ic.empty() && ic.back() < 0)
    for (BigInt& c : ic) c = -c;
  return Polynomial(std::move(ic));
}

// integer B with all real roots of p inside (-B, B)
BigInt cauchy_bound(const Polynomial& p) {
  BigInt lead = abs(p.leading());
  BigInt maxc = 0;
  for (const BigInt& c : p.coeffs()) maxc = std::max(maxc, BigInt(abs(c)));
  return 2 + maxc / lead;  // 1 + max|c|/|lead| rounded up, padded
}

}  // namespace

int count_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  Polynomial sf = square_free_part(p);
  if (sf.degree() < 1) return 0;
  Sturm st(sf);
  return st.variations_at_neg_inf() - st.variations_at_pos_inf();
}

int count_real_roots_above(const Polynomial& p, const BigRat& a) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  Polynomial sf = square_free_part(p);
  if (sf.degree() < 1) return 0;
  Sturm st(sf);
  // nudge off a root of sf: Sturm counts roots in (a, +inf) for non-root a;
  // if a is a root the count in the open interval is unchanged
  return st.variations_at(a) - st.variations_at_pos_inf();
}

double largest_real_root(const Polynomial& p, double tolerance) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no largest root");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  Polynomial sf = square_free_part(p);
  if (sf.degree() < 1) throw std::domain_error("polynomial has no real root");
  Sturm st(sf);
  int vpos = st.variations_at_pos_inf();
  if (st.variations_at_neg_inf() - vpos == 0)
    throw std::domain_error("polynomial has no real root");

  BigInt bound = cauchy_bound(sf);
  BigRat lo(-bound), hi(bound);
  // invariant: at least one root in (lo, hi], none above hi
  RatPoly sf_rat = to_rat(sf);
  BigRat width = hi - lo;
  BigRat tol_rat(tolerance);
  while (width > tol_rat) {
    BigRat mid = (lo + hi) / 2;
    if (rat_eval(sf_rat, mid) == 0 && st.variations_at(mid) - vpos == 0)
      return mid.convert_to<double>();  // mid is the largest root exactly
    if (st.variations_at(mid) - vpos >= 1)
      lo = mid;
    else
      hi = mid;
    width = hi - lo;
  }
  return ((lo + hi) / 2).convert_to<double>();
}

}  // namespace spex
