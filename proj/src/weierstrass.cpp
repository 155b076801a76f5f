#include "ellrank/weierstrass.hpp"

#include <algorithm>
#include <stdexcept>

#include "ellrank/algebra/square_class.hpp"
#include "ellrank/errors.hpp"

namespace ellrank {

namespace {

RatPoly scaled(const IntPoly& f, const Rational& s) { return to_rational(f) * s; }

IntPoly to_integral(const RatPoly& f) {
  std::vector<Integer> c;
  for (const auto& v : f.coefficients()) {
    if (v.get_den() != 1) throw std::logic_error("expected an integral polynomial");
    c.emplace_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

IntPoly delta_of(const IntPoly& a, const IntPoly& b) {
  return IntPoly(Integer(-16)) * (IntPoly(Integer(4)) * a * a * a + IntPoly(Integer(27)) * b * b);
}

int vpoly(const IntPoly& f, const IntPoly& place) {
  if (f.is_zero()) return kInfiniteValuation;
  return multiplicity(f, place);
}

IntPoly divide_power(const IntPoly& f, const IntPoly& p, int e) {
  if (f.is_zero()) return f;
  return exact_div(f, power(p, static_cast<unsigned>(e)));
}

bool rational_root(const Rational& x, unsigned n, Rational& root) {
  Integer num = x.get_num(), den = x.get_den();
  const bool negative = num < 0;
  if (negative && n % 2 == 0) return false;
  num = abs(num);
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return false;
  root = make_rational(negative ? Integer(-rn) : rn, rd);
  return true;
}

// Ratio lambda with f2 = lambda * f1, if it exists (both nonzero).
std::optional<Rational> constant_ratio(const IntPoly& f1, const IntPoly& f2) {
  if (f1.degree() != f2.degree()) return std::nullopt;
  const Rational lambda = make_rational(f2.leading(), f1.leading());
  if (!(scaled(f1, lambda) == to_rational(f2))) return std::nullopt;
  return lambda;
}

}  // namespace

// ------------------------------------------------------------------ Place

Place Place::finite(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("a finite place needs a nonconstant polynomial");
  Place p;
  p.infinity_ = false;
  p.poly_ = primitive_part(f);
  return p;
}

Rational Place::root() const {
  if (infinity_ || poly_.degree() != 1) throw std::logic_error("root() needs a degree-one finite place");
  return make_rational(-poly_[0], poly_[1]);
}

bool operator<(const Place& a, const Place& b) {
  if (a.infinity_ != b.infinity_) return b.infinity_;
  return a.poly_ < b.poly_;
}

std::string to_string(const Place& p, const std::string& var) {
  if (p.is_infinity()) return "inf";
  return to_string(p.polynomial(), var);
}

// --------------------------------------------------------------- models

WeierstrassModel::WeierstrassModel(IntPoly a, IntPoly b) : a_(std::move(a)), b_(std::move(b)) {
  if (delta_of(a_, b_).is_zero()) throw DegenerateModel("discriminant vanishes identically");
}

WeierstrassModel WeierstrassModel::from_rational(const RatPoly& a, const RatPoly& b) {
  Integer l = 1;
  for (const auto* f : {&a, &b}) {
    for (const auto& v : f->coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  const Rational u(l);
  return WeierstrassModel(to_integral(a * (u * u * u * u)), to_integral(b * (u * u * u * u * u * u)));
}

int WeierstrassModel::weight() const {
  int k = 0;
  while (a_.degree() > 4 * k || b_.degree() > 6 * k) ++k;
  return k;
}

std::string to_string(const WeierstrassModel& m, const std::string& var) {
  return "A = " + to_string(m.A(), var) + "\nB = " + to_string(m.B(), var) + "\n";
}

Invariants invariants(const WeierstrassModel& m) {
  Invariants inv;
  inv.c4 = IntPoly(Integer(-48)) * m.A();
  inv.c6 = IntPoly(Integer(-864)) * m.B();
  inv.delta = delta_of(m.A(), m.B());
  if (inv.c4.is_zero()) {
    inv.j_num = IntPoly();
    inv.j_den = IntPoly(Integer(1));
    return inv;
  }
  IntPoly num = inv.c4 * inv.c4 * inv.c4;
  IntPoly den = inv.delta;
  const IntPoly g = poly_gcd(num, den);
  num = exact_div(num, g);
  den = exact_div(den, g);
  Integer c;
  mpz_gcd(c.get_mpz_t(), content(num).get_mpz_t(), content(den).get_mpz_t());
  if (den.leading() < 0) c = -c;
  inv.j_num = exact_div(num, IntPoly(c));
  inv.j_den = exact_div(den, IntPoly(c));
  return inv;
}

WeierstrassModel infinity_chart(const WeierstrassModel& m) {
  const int k = m.weight();
  return WeierstrassModel(reverse(m.A(), 4 * k), reverse(m.B(), 6 * k));
}

WeierstrassModel invert_parameter(const WeierstrassModel& m) { return infinity_chart(m); }

WeierstrassModel translate_parameter(const WeierstrassModel& m, const Rational& t0) {
  const RatPoly shift{t0, Rational(1)};
  return WeierstrassModel::from_rational(compose(to_rational(m.A()), shift), compose(to_rational(m.B()), shift));
}

WeierstrassModel scale_parameter(const WeierstrassModel& m, const Rational& lambda) {
  const RatPoly s{Rational(0), lambda};
  return WeierstrassModel::from_rational(compose(to_rational(m.A()), s), compose(to_rational(m.B()), s));
}

int valuation(const IntPoly& f, const Place& p) {
  if (f.is_zero()) throw std::domain_error("valuation of zero");
  if (p.is_infinity()) return -f.degree();
  return multiplicity(f, p.polynomial());
}

int valuation(const IntPoly& num, const IntPoly& den, const Place& p) { return valuation(num, p) - valuation(den, p); }

LocalValuations local_valuations(const WeierstrassModel& m, const Place& p) {
  if (p.is_infinity()) return local_valuations(infinity_chart(m), Place::finite(IntPoly::x()));
  const Invariants inv = invariants(m);
  LocalValuations v;
  v.c4 = vpoly(inv.c4, p.polynomial());
  v.c6 = vpoly(inv.c6, p.polynomial());
  v.delta = vpoly(inv.delta, p.polynomial());
  return v;
}

// --------------------------------------------------------------- twists

WeierstrassModel quadratic_twist(const WeierstrassModel& m, const IntPoly& f) {
  if (f.is_zero()) throw BadParameters("twist by the zero polynomial");
  IntPoly g(Integer(1));
  Integer constant = content(f);
  if (f.leading() < 0) constant = -constant;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    if (mult % 2 == 1) g = g * part;
  }
  g = g * IntPoly(square_class(Rational(constant)).representative());
  return WeierstrassModel(g * g * m.A(), g * g * g * m.B());
}

WeierstrassModel twist_by_points(const WeierstrassModel& m, const std::vector<Place>& points) {
  IntPoly f(Integer(1));
  bool with_infinity = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i] == points[j]) throw BadParameters("twist points must be distinct");
    }
    if (points[i].is_infinity()) {
      with_infinity = true;
    } else {
      f = f * points[i].polynomial();
    }
  }
  if ((f.degree() % 2 == 1) != with_infinity) {
    throw BadParameters("twist points of odd total degree cannot be balanced at infinity");
  }
  return minimalize(quadratic_twist(m, f)).first;
}

std::pair<WeierstrassModel, std::vector<MinimalizationStep>> minimalize(const WeierstrassModel& m) {
  IntPoly common;
  if (m.A().is_zero()) {
    common = m.B();
  } else if (m.B().is_zero()) {
    common = m.A();
  } else {
    common = poly_gcd(m.A(), m.B());
  }
  std::vector<MinimalizationStep> log;
  IntPoly a = m.A(), b = m.B();
  if (common.degree() < 1) return {m, log};
  for (const auto& [place, mult] : factor_over_Q(common)) {
    const int n = std::min(vpoly(a, place) / 4, vpoly(b, place) / 6);
    if (n <= 0) continue;
    a = divide_power(a, place, 4 * n);
    b = divide_power(b, place, 6 * n);
    log.push_back({Place::finite(place), n});
  }
  return {WeierstrassModel(a, b), log};
}

std::pair<WeierstrassModel, Integer> reduce_constants(const WeierstrassModel& m) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), content(m.A()).get_mpz_t(), content(m.B()).get_mpz_t());
  Integer u = 1;
  if (g > 1) {
    const Integer ca = content(m.A()), cb = content(m.B());
    for (const auto& pp : factor_integer(g)) {
      unsigned ea = 0, eb = 0;
      Integer x = ca, y = cb;
      while (x != 0 && mpz_divisible_p(x.get_mpz_t(), pp.prime.get_mpz_t()) != 0) {
        x /= pp.prime;
        ++ea;
      }
      while (y != 0 && mpz_divisible_p(y.get_mpz_t(), pp.prime.get_mpz_t()) != 0) {
        y /= pp.prime;
        ++eb;
      }
      unsigned n = std::min(ca == 0 ? eb / 6 : ea / 4, cb == 0 ? ea / 4 : eb / 6);
      u *= ipow(pp.prime, n);
    }
  }
  if (u == 1) return {m, u};
  const Rational inv4 = make_rational(1, ipow(u, 4)), inv6 = make_rational(1, ipow(u, 6));
  return {WeierstrassModel(to_integral(scaled(m.A(), inv4)), to_integral(scaled(m.B(), inv6))), u};
}

// ---------------------------------------------------------- base change

WeierstrassModel base_change(const WeierstrassModel& m, const RationalFunction& g) {
  if (g.den.is_zero()) throw BadParameters("base change by a map with zero denominator");
  if (g.degree() < 1 || (g.num.degree() <= 0 && g.den.degree() <= 0)) {
    throw BadParameters("base change needs a nonconstant map");
  }
  const int k = m.weight();
  auto substitute = [&](const IntPoly& f, int w) {
    IntPoly acc;
    for (int i = 0; i <= f.degree(); ++i) {
      if (f[static_cast<std::size_t>(i)] == 0) continue;
      acc += IntPoly(f[static_cast<std::size_t>(i)]) * power(g.num, static_cast<unsigned>(i)) *
             power(g.den, static_cast<unsigned>(w - i));
    }
    return acc;
  };
  return minimalize(WeierstrassModel(substitute(m.A(), 4 * k), substitute(m.B(), 6 * k))).first;
}

std::optional<IsomorphismWitness> is_isomorphic(const WeierstrassModel& m1, const WeierstrassModel& m2) {
  const WeierstrassModel a = minimalize(m1).first, b = minimalize(m2).first;
  if (a.A().is_zero() != b.A().is_zero() || a.B().is_zero() != b.B().is_zero()) return std::nullopt;
  Rational w;
  if (!a.A().is_zero() && !a.B().is_zero()) {
    auto lambda = constant_ratio(a.A(), b.A());
    auto mu = constant_ratio(a.B(), b.B());
    if (!lambda || !mu) return std::nullopt;
    w = *mu / *lambda;
    if (w * w != *lambda) return std::nullopt;
  } else if (a.A().is_zero()) {
    auto mu = constant_ratio(a.B(), b.B());
    if (!mu || !rational_root(*mu, 3, w)) return std::nullopt;
  } else {
    auto lambda = constant_ratio(a.A(), b.A());
    if (!lambda || !rational_root(*lambda, 2, w)) return std::nullopt;
  }
  IsomorphismWitness wit{w, std::nullopt};
  Rational u;
  if (rational_root(w, 2, u)) wit.u = u;
  return wit;
}

// ------------------------------------------------------------- families

WeierstrassModel family_E_abc(const Rational& a, const Rational& b, const Rational& c) {
  if (a == b) throw BadParameters("family parameters need a != b");
  if (a == 0 || b == 0) throw BadParameters("family parameters need ab != 0");
  const Rational k = 4 * a * a * a * b * b * b;
  const Rational l = 16 * a * a * a * a * a * b * b * b * b * b;
  std::vector<Rational> ac(9, Rational(0)), bc(11, Rational(0));
  ac[8] = k * (b - a) * c;
  ac[4] = k * (2 * a * c + 2 * b * c + 4 * a * b);
  ac[0] = k * (b - a) * c;
  bc[10] = l * (b - a);
  bc[6] = l * 2 * (b + a);
  bc[2] = l * (b - a);
  try {
    return WeierstrassModel::from_rational(RatPoly(std::move(ac)), RatPoly(std::move(bc)));
  } catch (const DegenerateModel&) {
    throw BadParameters("family parameters give a degenerate model");
  }
}

WeierstrassModel auxiliary_E_prime_c(const Rational& c) {
  if (c * c == -1) throw BadParameters("E'_c needs c^2 != -1");
  return WeierstrassModel::from_rational(RatPoly{Rational(0), Rational(0), Rational(0), -c, Rational(1)},
                                         RatPoly::monomial(Rational(1), 5));
}

RationalFunction f_ab_map(const Rational& a, const Rational& b) {
  if (a == b || a == 0 || b == 0) throw BadParameters("f_ab needs a != b and ab != 0");
  const RatPoly num{Rational(0), 4 * a * b};
  const RatPoly den{a - b, -2 * (a + b), a - b};
  Integer l = 1;
  for (const auto* f : {&num, &den}) {
    for (const auto& v : f->coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return {to_integral(num * Rational(l)), to_integral(den * Rational(l))};
}

std::vector<Rational> critical_values(const RationalFunction& g) {
  const IntPoly w = derivative(g.num) * g.den - g.num * derivative(g.den);
  std::vector<Rational> out;
  if (w.is_zero()) return out;
  for (const auto& [f, mult] : factor_over_Q(w)) {
    if (f.degree() != 1) continue;
    const Rational s0 = make_rational(-f[0], f[1]);
    const Rational d = evaluate(g.den, s0);
    if (d == 0) continue;
    out.push_back(evaluate(g.num, s0) / d);
  }
  const int d = g.degree();
  if (w.degree() < 2 * d - 2 && g.num.degree() <= g.den.degree()) {
    out.push_back(g.num.degree() == g.den.degree() ? make_rational(g.num.leading(), g.den.leading()) : Rational(0));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<FamilyParameters> recognize_family_member(const WeierstrassModel& m) {
  const IntPoly& A = m.A();
  const IntPoly& B = m.B();
  if (B.degree() != 10 || A.degree() > 8) return std::nullopt;
  for (int i = 0; i <= A.degree(); ++i) {
    if (i % 4 != 0 && A[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  for (int i = 0; i <= B.degree(); ++i) {
    if (i % 4 != 2 && B[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  if (A[0] != A[8] || B[2] != B[10]) return std::nullopt;
  const Rational r = make_rational(B[6], B[10]);
  if (r == 2) return std::nullopt;
  const Rational rho = (r + 2) / (r - 2);  // b / a
  if (rho == 1 || rho == 0) return std::nullopt;
  Rational kappa = 0;  // c / a
  Rational a;
  if (A[8] != 0) {
    const Rational q = make_rational(A[4], A[8]);
    const Rational lhs = q * (rho - 1) - 2 * (1 + rho);
    if (lhs == 0) return std::nullopt;
    kappa = 4 * rho / lhs;
    const Rational a2 = 4 * rho * Rational(A[8] * A[8] * A[8]) / (Rational(B[10] * B[10]) * (rho - 1) * kappa * kappa * kappa);
    if (!rational_root(a2, 2, a)) return std::nullopt;
  } else {
    if (A[4] == 0) return std::nullopt;
    const Rational a4 =
        Rational(A[4] * A[4] * A[4]) * (rho - 1) * (rho - 1) / (16 * rho * rho * Rational(B[10] * B[10]));
    if (!rational_root(a4, 4, a)) return std::nullopt;
  }
  if (a == 0) return std::nullopt;
  FamilyParameters params{a, rho * a, kappa * a};
  try {
    if (!is_isomorphic(family_E_abc(params.a, params.b, params.c), m)) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  return params;
}

std::optional<TwistedAuxiliary> recognize_twisted_auxiliary(const WeierstrassModel& m0) {
  const WeierstrassModel m = minimalize(m0).first;
  const IntPoly delta = invariants(m).delta;
  std::vector<Rational> iii_star;
  bool at_infinity = false;
  auto is_iii_star = [](const LocalValuations& v) { return v.delta == 9 && v.c4 == 3; };
  if (is_iii_star(local_valuations(m, Place::infinity()))) at_infinity = true;
  for (const auto& [f, mult] : factor_over_Q(delta)) {
    if (mult != 9 || f.degree() != 1) continue;
    if (is_iii_star(local_valuations(m, Place::finite(f)))) iii_star.push_back(make_rational(-f[0], f[1]));
  }
  if (static_cast<int>(iii_star.size()) + (at_infinity ? 1 : 0) != 1) return std::nullopt;
  TwistedAuxiliary out;
  WeierstrassModel moved = m;
  if (at_infinity) {
    moved = invert_parameter(m);
    out.reparametrization = "t -> 1/t";
  } else if (iii_star[0] != 0) {
    moved = translate_parameter(m, iii_star[0]);
    out.reparametrization = "t -> t + " + to_string(iii_star[0]);
  } else {
    out.reparametrization = "identity";
  }
  moved = minimalize(moved).first;
  std::vector<Rational> i0_star;
  for (const auto& [f, mult] : factor_over_Q(invariants(moved).delta)) {
    if (mult != 6) continue;
    const auto v = local_valuations(moved, Place::finite(f));
    if (v.c4 < 2 || v.c6 < 3) continue;
    if (f.degree() != 1) return std::nullopt;
    i0_star.push_back(make_rational(-f[0], f[1]));
  }
  if (i0_star.size() != 2) return std::nullopt;
  std::sort(i0_star.begin(), i0_star.end());
  const Rational a = i0_star[0], b = i0_star[1];
  const RatPoly t = RatPoly::x();
  const RatPoly ta = t - RatPoly(a), tb = t - RatPoly(b);
  const RatPoly da = power(t, 3) * ta * ta * tb * tb;
  const RatPoly db = power(t, 5) * ta * ta * ta * tb * tb * tb;
  auto [qa, ra] = divrem(to_rational(moved.A()), da);
  auto [qb, rb] = divrem(to_rational(moved.B()), db);
  if (!ra.is_zero() || !rb.is_zero() || qa.degree() != 1 || qb.degree() != 0) return std::nullopt;
  const Rational alpha = qa[1], beta = qb[0];
  if (alpha * alpha * alpha != beta * beta) return std::nullopt;
  out.c = -qa[0] / alpha;
  out.a = a;
  out.b = b;
  out.normalized = moved;
  return out;
}

}  // namespace ellrank
