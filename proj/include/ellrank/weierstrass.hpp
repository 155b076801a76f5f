#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellrank/algebra/integer.hpp"
#include "ellrank/algebra/polynomial.hpp"

namespace ellrank {

/// A closed point of P^1 over Q: an irreducible primitive polynomial with
/// positive leading coefficient, or the point at infinity.
class Place {
 public:
  static Place finite(const IntPoly& f);
  static Place infinity() { return Place(); }

  bool is_infinity() const { return infinity_; }
  const IntPoly& polynomial() const { return poly_; }
  int degree() const { return infinity_ ? 1 : poly_.degree(); }
  /// The root t0 of a degree-one place.
  Rational root() const;

  friend bool operator==(const Place& a, const Place& b) { return a.infinity_ == b.infinity_ && a.poly_ == b.poly_; }
  friend bool operator<(const Place& a, const Place& b);

 private:
  Place() = default;
  bool infinity_ = true;
  IntPoly poly_;
};

std::string to_string(const Place& p, const std::string& var = "t");

/// y^2 = x^3 + A(t) x + B(t) with integer polynomial coefficients.
class WeierstrassModel {
 public:
  /// Throws DegenerateModel when 4A^3 + 27B^2 vanishes identically.
  WeierstrassModel(IntPoly a, IntPoly b);
  /// Clears denominators by the admissible scaling u = common denominator.
  static WeierstrassModel from_rational(const RatPoly& a, const RatPoly& b);

  const IntPoly& A() const { return a_; }
  const IntPoly& B() const { return b_; }

  /// Smallest k >= 0 with deg A <= 4k and deg B <= 6k.
  int weight() const;

  friend bool operator==(const WeierstrassModel&, const WeierstrassModel&) = default;

 private:
  IntPoly a_, b_;
};

std::string to_string(const WeierstrassModel& m, const std::string& var = "t");

struct Invariants {
  IntPoly c4, c6, delta;
  /// j = j_num / j_den in lowest terms (j_den primitive, positive leading coefficient).
  IntPoly j_num, j_den;
};

Invariants invariants(const WeierstrassModel& m);

/// (s^{4k} A(1/s), s^{6k} B(1/s)) with k = m.weight(): the model near t = infinity.
WeierstrassModel infinity_chart(const WeierstrassModel& m);

/// Order of vanishing of a nonzero polynomial at a place; at infinity -deg f.
int valuation(const IntPoly& f, const Place& p);
/// v(num) - v(den).
int valuation(const IntPoly& num, const IntPoly& den, const Place& p);

struct LocalValuations {
  int c4 = 0, c6 = 0, delta = 0;  // c4/c6 valuations are large sentinels when identically zero
};
constexpr int kInfiniteValuation = 1 << 20;

/// Valuations of c4, c6, Delta of the model at p; infinity uses the chart.
LocalValuations local_valuations(const WeierstrassModel& m, const Place& p);

/// (f^2 A, f^3 B) after replacing f by its square-free class (square factors
/// and square parts of the constant removed). Throws BadParameters for f = 0.
WeierstrassModel quadratic_twist(const WeierstrassModel& m, const IntPoly& f);

struct MinimalizationStep {
  Place place;
  int count = 0;
};

/// Removes (P^4, P^6) from (A, B) at every finite place P. The chart at
/// infinity uses the minimal weight, so infinity needs no step.
std::pair<WeierstrassModel, std::vector<MinimalizationStep>> minimalize(const WeierstrassModel& m);

/// Removes integer constant factors u with u^4 | A and u^6 | B; returns u.
std::pair<WeierstrassModel, Integer> reduce_constants(const WeierstrassModel& m);

/// Twist by the product of the finite places; infinity is a twist point iff
/// the total degree is odd. Result minimalized.
WeierstrassModel twist_by_points(const WeierstrassModel& m, const std::vector<Place>& points);

/// g(s) = num(s) / den(s).
struct RationalFunction {
  IntPoly num, den;
  int degree() const { return std::max(num.degree(), den.degree()); }
};

/// Substitutes t = g(s) and clears denominators by u = den^k, then minimalizes.
WeierstrassModel base_change(const WeierstrassModel& m, const RationalFunction& g);

/// A2 = u^4 A1, B2 = u^6 B1 over Q(u) with u^2 = u_squared rational.
struct IsomorphismWitness {
  Rational u_squared;
  std::optional<Rational> u;  // set when u_squared is a rational square (u > 0)
};

/// Compares minimalized models up to (u^4, u^6) scaling.
std::optional<IsomorphismWitness> is_isomorphic(const WeierstrassModel& m1, const WeierstrassModel& m2);

/// A = 4a^3b^3((b-a)c s^8 + (2ac+2bc+4ab)s^4 + (b-a)c),
/// B = 16a^5b^5 s^2((b-a)s^8 + 2(b+a)s^4 + (b-a)).
WeierstrassModel family_E_abc(const Rational& a, const Rational& b, const Rational& c);

/// A = t^3(t-c), B = t^5.
WeierstrassModel auxiliary_E_prime_c(const Rational& c);

/// 4ab s / ((a-b)s^2 - 2(a+b)s + a-b).
RationalFunction f_ab_map(const Rational& a, const Rational& b);

/// Values of g at the zeros of g'; only rational critical points are returned
/// (degree-two maps over Q with split critical points).
std::vector<Rational> critical_values(const RationalFunction& g);

/// m(1/t) as a model: same as infinity_chart.
WeierstrassModel invert_parameter(const WeierstrassModel& m);
/// m(t + t0) (t0 rational, cleared by admissible scaling).
WeierstrassModel translate_parameter(const WeierstrassModel& m, const Rational& t0);
/// m(lambda * t).
WeierstrassModel scale_parameter(const WeierstrassModel& m, const Rational& lambda);

/// (a, b, c) with m isomorphic (geometrically, no reparametrization) to family_E_abc(a, b, c).
struct FamilyParameters {
  Rational a, b, c;
};
std::optional<FamilyParameters> recognize_family_member(const WeierstrassModel& m);

/// A model that, after moving its III* fiber to t = 0, is the twist of
/// E'_c by (t - a)(t - b) up to scaling.
struct TwistedAuxiliary {
  Rational c, a, b;
  /// "t -> 1/t", "t -> t + t0" or "identity".
  std::string reparametrization;
  /// The model after the reparametrization, minimalized.
  WeierstrassModel normalized{IntPoly(), IntPoly(1)};
};
std::optional<TwistedAuxiliary> recognize_twisted_auxiliary(const WeierstrassModel& m);

}  // namespace ellrank
