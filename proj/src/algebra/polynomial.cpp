#include "ellrank/algebra/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace ellrank {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

std::pair<IntPoly, Integer> clear_denominators(const RatPoly& p) {
  Integer l = 1;
  for (const auto& v : p.coefficients()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) {
    Rational scaled = v * Rational(l);
    c.emplace_back(scaled.get_num());
  }
  return {IntPoly(std::move(c)), l};
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& v : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) c.emplace_back(v / g);
  return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& p, const RatPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const int dd = divisor.degree();
  if (p.degree() < dd) return {RatPoly(), p};
  std::vector<Rational> rem(p.coefficients().begin(), p.coefficients().end());
  std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - dd + 1));
  const Rational lead = divisor.leading();
  for (int i = p.degree(); i >= dd; --i) {
    Rational f = rem[static_cast<std::size_t>(i)] / lead;
    quo[static_cast<std::size_t>(i - dd)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

namespace {

// Division in Z[x]; returns false when the quotient leaves Z or a remainder.
bool try_exact_div(const IntPoly& p, const IntPoly& divisor, IntPoly& out) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.is_zero()) {
    out = IntPoly();
    return true;
  }
  const int dd = divisor.degree();
  if (p.degree() < dd) return false;
  std::vector<Integer> rem(p.coefficients().begin(), p.coefficients().end());
  std::vector<Integer> quo(static_cast<std::size_t>(p.degree() - dd + 1));
  const Integer& lead = divisor.leading();
  for (int i = p.degree(); i >= dd; --i) {
    const Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()) == 0) return false;
    Integer f = top / lead;
    quo[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor[static_cast<std::size_t>(j)];
    }
  }
  for (int i = 0; i < dd; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  }
  out = IntPoly(std::move(quo));
  return true;
}

}  // namespace

IntPoly exact_div(const IntPoly& p, const IntPoly& divisor) {
  IntPoly q;
  if (!try_exact_div(p, divisor, q)) throw std::domain_error("exact_div: division not exact");
  return q;
}

bool divides(const IntPoly& divisor, const IntPoly& p) {
  auto [q, r] = divrem(to_rational(p), to_rational(divisor));
  return r.is_zero();
}

Rational evaluate(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + Rational(p[static_cast<std::size_t>(i)]);
  return acc;
}

int multiplicity(const IntPoly& p, const IntPoly& divisor) {
  if (p.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  if (divisor.degree() < 1) throw std::invalid_argument("multiplicity of a constant");
  RatPoly cur = to_rational(p);
  const RatPoly d = to_rational(divisor);
  int m = 0;
  for (;;) {
    auto [q, r] = divrem(cur, d);
    if (!r.is_zero()) return m;
    cur = std::move(q);
    ++m;
  }
}

namespace {

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  const int db = b.degree();
  const Integer& lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    Integer lr = r.leading();
    r = r * lb - IntPoly::monomial(lr, static_cast<std::size_t>(shift)) * b;
  }
  return r;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  IntPoly a = primitive_part(p), b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

Rational resultant(const IntPoly& p, const IntPoly& q) {
  // Euclidean algorithm with the standard sign/leading-coefficient bookkeeping.
  if (p.is_zero() || q.is_zero()) return 0;
  RatPoly a = to_rational(p), b = to_rational(q);
  Rational res = 1;
  while (b.degree() > 0) {
    auto [quo, r] = divrem(a, b);
    if (r.is_zero()) return 0;
    const int da = a.degree(), db = b.degree(), dr = r.degree();
    if ((da % 2 == 1) && (db % 2 == 1)) res = -res;
    Rational lb = b.leading();
    Rational f = 1;
    for (int i = 0; i < da - dr; ++i) f *= lb;
    res *= f;
    a = std::move(b);
    b = std::move(r);
  }
  // b is a nonzero constant.
  Rational f = 1;
  for (int i = 0; i < a.degree(); ++i) f *= b[0];
  return res * f;
}

namespace {

RatPoly monic(const RatPoly& p) {
  RatPoly r = p;
  r *= Rational(1) / p.leading();
  return r;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : monic(a);
}

IntPoly to_primitive(const RatPoly& p) { return primitive_part(clear_denominators(p).first); }

}  // namespace

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() == 0) return out;
  const RatPoly f = monic(to_rational(p));
  const RatPoly fp = derivative(f);
  RatPoly g = rat_gcd(f, fp);
  RatPoly c = divrem(f, g).first;
  RatPoly d = divrem(fp, g).first - derivative(c);
  for (int i = 1; c.degree() > 0; ++i) {
    RatPoly a = rat_gcd(c, d);
    if (a.degree() > 0) out.emplace_back(to_primitive(a), i);
    RatPoly cn = divrem(c, a).first;
    d = divrem(d, a).first - derivative(cn);
    c = std::move(cn);
  }
  return out;
}

std::vector<Rational> reciprocal_power_sums(const IntPoly& p, std::size_t count) {
  if (p.is_zero() || p[0] == 0) throw std::domain_error("reciprocal power sums need P(0) != 0");
  // e_i = (-1)^i c_i / c_0 are the elementary symmetric functions of the a_i.
  const int d = p.degree();
  std::vector<Rational> e(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    Rational v = make_rational(p[static_cast<std::size_t>(i)], p[0]);
    e[static_cast<std::size_t>(i)] = (i % 2 == 0) ? v : Rational(-v);
  }
  std::vector<Rational> s(count + 1, Rational(0));
  for (std::size_t k = 1; k <= count; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i < k && i <= static_cast<std::size_t>(d); ++i) {
      Rational term = e[i] * s[k - i];
      acc += (i % 2 == 1) ? term : Rational(-term);
    }
    if (k <= static_cast<std::size_t>(d)) {
      Rational term = e[k] * Rational(static_cast<long>(k));
      acc += (k % 2 == 1) ? term : Rational(-term);
    }
    s[k] = acc;
  }
  s.erase(s.begin());
  return s;
}

RatPoly from_reciprocal_power_sums(std::span<const Rational> sums) {
  const std::size_t d = sums.size();
  std::vector<Rational> e(d + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      Rational term = e[k - i] * sums[i - 1];
      acc += (i % 2 == 1) ? term : Rational(-term);
    }
    e[k] = acc / Rational(static_cast<long>(k));
  }
  std::vector<Rational> c(d + 1);
  for (std::size_t i = 0; i <= d; ++i) c[i] = (i % 2 == 0) ? e[i] : Rational(-e[i]);
  return RatPoly(std::move(c));
}

IntPoly roots_power_poly(const IntPoly& p, unsigned n) {
  if (n == 0) throw std::invalid_argument("roots_power_poly: n must be positive");
  if (p.is_zero() || p[0] == 0) throw std::domain_error("roots_power_poly: P(0) must be nonzero");
  const std::size_t d = static_cast<std::size_t>(p.degree());
  if (d == 0) return IntPoly(Integer(1));
  const auto s = reciprocal_power_sums(p, d * n);
  std::vector<Rational> t(d);
  for (std::size_t j = 1; j <= d; ++j) t[j - 1] = s[j * n - 1];
  const RatPoly r = from_reciprocal_power_sums(t);
  std::vector<Integer> c;
  for (const auto& v : r.coefficients()) {
    if (v.get_den() != 1) throw std::domain_error("roots_power_poly: result is not integral");
    c.emplace_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

namespace {

template <class Coeff>
std::string render(const Polynomial<Coeff>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Coeff c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    Coeff mag = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var) { return render(p, var); }
std::string to_string(const RatPoly& p, const std::string& var) { return render(p, var); }

}  // namespace ellrank
