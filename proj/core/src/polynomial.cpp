#include "spex/polynomial.hpp"

#include <stdexcept>

namespace spex {

namespace {
const BigInt big_zero = 0;
}

Polynomial::Polynomial(std::initializer_list<BigInt> ascending) : c_(ascending) { trim(); }
Polynomial::Polynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::x_power(int k) {
  std::vector<BigInt> c(k + 1, 0);
  c[k] = 1;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::constant(const BigInt& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const BigInt& c0, const BigInt& c1) {
  return Polynomial({c0, c1});
}

const BigInt& Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return big_zero;
  return c_[k];
}

const BigInt& Polynomial::leading() const {
  if (c_.empty()) return big_zero;
  return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<BigInt> out = c_;
  for (BigInt& v : out) v = -v;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (c_.empty() || o.c_.empty()) return Polynomial();
  std::vector<BigInt> out(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const BigInt& k) const {
  std::vector<BigInt> out = c_;
  for (BigInt& v : out) v *= k;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<BigInt> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * BigInt(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted_arg(const BigInt& c) const {
  // Horner on the polynomial ring: P(x + c)
  Polynomial out;
  Polynomial xc = Polynomial::linear(c, 1);
  for (int i = degree(); i >= 0; --i) out = out * xc + Polynomial::constant(c_[i]);
  return out;
}

BigInt Polynomial::evaluate_int(const BigInt& x) const {
  BigInt acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

BigRat Polynomial::evaluate(const BigRat& x) const {
  BigRat acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + BigRat(c_[i]);
  return acc;
}

int Polynomial::sign_at(const BigInt& num, const BigInt& den) const {
  if (den <= 0) throw std::invalid_argument("denominator must be positive");
  // sum c_k num^k den^(deg-k), exact
  BigInt acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * num + c_[i] * pow(den, degree() - i);
  return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    BigInt a = c_[i];
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    BigInt mag = abs(a);
    if (mag != 1 || i == 0) out += mag.str();
    if (i > 0) {
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace spex
