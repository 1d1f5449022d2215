#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <vector>

namespace spex {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Dense univariate polynomial with exact integer coefficients, stored in
// ascending order with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<BigInt> ascending);
  explicit Polynomial(std::vector<BigInt> ascending);

  static Polynomial x_power(int k);
  static Polynomial constant(const BigInt& c);
  static Polynomial linear(const BigInt& c0, const BigInt& c1);  // c0 + c1*x

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const BigInt& coeff(int k) const;  // zero beyond the degree
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const BigInt& k) const;

  Polynomial derivative() const;
  Polynomial shifted_arg(const BigInt& c) const;  // P(x + c)

  BigInt evaluate_int(const BigInt& x) const;
  BigRat evaluate(const BigRat& x) const;
  // exact sign of P(num/den), den > 0
  int sign_at(const BigInt& num, const BigInt& den) const;

  bool operator==(const Polynomial&) const = default;
  std::string to_string() const;  // descending powers

 private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace spex
