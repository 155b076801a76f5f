#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ellrank/algebra/integer.hpp"

namespace ellrank {

/// Dense univariate polynomial; coefficient i multiplies x^i. The leading
/// coefficient is nonzero unless the polynomial is zero (empty vector).
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coefficients) : c_(coefficients) { trim(); }
  Polynomial(const Coeff& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) c_.push_back(constant);
  }
  Polynomial(int constant) : Polynomial(Coeff(constant)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial monomial(const Coeff& coefficient, std::size_t degree) {
    std::vector<Coeff> c(degree + 1, Coeff(0));
    c[degree] = coefficient;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(Coeff(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const Coeff& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  std::span<const Coeff> coefficients() const { return c_; }

  template <class X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Lexicographic by degree then coefficients from the top; a total order
  /// used to make factor lists deterministic.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

RatPoly to_rational(const IntPoly& p);

/// Scales p by the lcm of its denominators; returns the integer polynomial
/// and that multiplier.
std::pair<IntPoly, Integer> clear_denominators(const RatPoly& p);

/// gcd of the coefficients, nonnegative; content(0) = 0.
Integer content(const IntPoly& p);

/// p / content(p) with a positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// Quotient and remainder over the rationals; deg(rem) < deg(divisor).
std::pair<RatPoly, RatPoly> divrem(const RatPoly& p, const RatPoly& divisor);

/// Exact division in Z[x]; throws std::domain_error when not exact.
IntPoly exact_div(const IntPoly& p, const IntPoly& divisor);

/// True when divisor divides p in Q[x].
bool divides(const IntPoly& divisor, const IntPoly& p);

template <class Coeff>
Polynomial<Coeff> derivative(const Polynomial<Coeff>& p) {
  if (p.degree() < 1) return {};
  std::vector<Coeff> c(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) c[i - 1] = p[i] * Coeff(static_cast<long>(i));
  return Polynomial<Coeff>(std::move(c));
}

/// p(q(x)).
template <class Coeff>
Polynomial<Coeff> compose(const Polynomial<Coeff>& p, const Polynomial<Coeff>& q) {
  Polynomial<Coeff> acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + Polynomial<Coeff>(p[static_cast<std::size_t>(i)]);
  return acc;
}

template <class Coeff>
Polynomial<Coeff> power(const Polynomial<Coeff>& p, unsigned e) {
  Polynomial<Coeff> r(Coeff(1)), b = p;
  while (e != 0) {
    if ((e & 1U) != 0) r *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return r;
}

/// x^n p(1/x); requires n >= deg p.
template <class Coeff>
Polynomial<Coeff> reverse(const Polynomial<Coeff>& p, int n) {
  if (n < p.degree()) throw std::invalid_argument("reverse: n below degree");
  if (p.is_zero()) return {};
  std::vector<Coeff> c(static_cast<std::size_t>(n) + 1, Coeff(0));
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(n - i)] = p[static_cast<std::size_t>(i)];
  return Polynomial<Coeff>(std::move(c));
}

Rational evaluate(const IntPoly& p, const Rational& x);

/// Multiplicity of divisor in p (divisor nonconstant, p nonzero).
int multiplicity(const IntPoly& p, const IntPoly& divisor);

/// Primitive gcd with positive leading coefficient; gcd(p, 0) = pp(p).
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

/// Resultant over Z via the Sylvester-free Euclidean route over Q.
Rational resultant(const IntPoly& p, const IntPoly& q);

/// Yun's algorithm: primitive, pairwise coprime squarefree factors with
/// multiplicities, product equal to p up to a rational constant.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

/// Irreducible factorization over Q (Zassenhaus). Factors are primitive with
/// positive leading coefficient, sorted. Throws ResourceBound past degree 64.
std::vector<std::pair<IntPoly, int>> factor_over_Q(const IntPoly& p);

/// Given P(x) = c * prod(1 - a_i x), returns prod(1 - a_i^n x).
/// Throws std::domain_error if P(0) = 0 or the result is not integral.
IntPoly roots_power_poly(const IntPoly& p, unsigned n);

/// Power sums s_1..s_count of the reciprocal roots of c * prod(1 - a_i x).
std::vector<Rational> reciprocal_power_sums(const IntPoly& p, std::size_t count);

/// Inverse of reciprocal_power_sums for a polynomial with P(0) = 1.
RatPoly from_reciprocal_power_sums(std::span<const Rational> sums);

std::string to_string(const IntPoly& p, const std::string& var = "t");
std::string to_string(const RatPoly& p, const std::string& var = "t");

}  // namespace ellrank
