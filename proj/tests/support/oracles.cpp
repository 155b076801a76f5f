#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

namespace {

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e != 0) {
    if ((e & 1) != 0) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 reduce(const Integer& n, u64 p) {
  Integer r = n % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

// Binomial coefficients mod p up to n.
std::vector<std::vector<u64>> pascal(int n, u64 p) {
  std::vector<std::vector<u64>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(static_cast<std::size_t>(i) + 1, 1 % p);
    for (int j = 1; j < i; ++j) c[i][j] = (c[i - 1][j - 1] + c[i - 1][j]) % p;
  }
  return c;
}

// f(v + e).
MPoly translate(const MPoly& f, const std::array<u64, 3>& e) {
  int top = 0;
  for (const auto& [m, c] : f.terms) top = std::max({top, m[0], m[1], m[2]});
  const auto binom = pascal(top, f.p);
  MPoly out;
  out.p = f.p;
  for (const auto& [m, c] : f.terms) {
    // expand prod_j (v_j + e_j)^{m_j}
    for (int i0 = 0; i0 <= m[0]; ++i0) {
      const u64 c0 = mulmod(binom[m[0]][i0], powmod(e[0], m[0] - i0, f.p), f.p);
      if (c0 == 0) continue;
      for (int i1 = 0; i1 <= m[1]; ++i1) {
        const u64 c1 = mulmod(c0, mulmod(binom[m[1]][i1], powmod(e[1], m[1] - i1, f.p), f.p), f.p);
        if (c1 == 0) continue;
        for (int i2 = 0; i2 <= m[2]; ++i2) {
          const u64 c2 = mulmod(c1, mulmod(binom[m[2]][i2], powmod(e[2], m[2] - i2, f.p), f.p), f.p);
          if (c2 != 0) out.add({i0, i1, i2}, mulmod(c2, c, f.p));
        }
      }
    }
  }
  return out;
}

// Strict transform in the chart where coordinate c is kept: u_j = v_c v_j.
MPoly chart(const MPoly& f, int c, int m) {
  MPoly out;
  out.p = f.p;
  for (const auto& [e, coef] : f.terms) {
    std::array<int, 3> n = e;
    n[c] = e[0] + e[1] + e[2] - m;
    out.add(n, coef);
  }
  return out;
}

// F_{p^2} = F_p[w]/(w^2 - n) with n the least non-residue; elements (a, b) = a + b w.
struct Fp2 {
  u64 p, n;
  using E = std::pair<u64, u64>;
  E add(E x, E y) const { return {(x.first + y.first) % p, (x.second + y.second) % p}; }
  E mul(E x, E y) const {
    return {(x.first * y.first + x.second * y.second % p * n) % p, (x.first * y.second + x.second * y.first) % p};
  }
};

}  // namespace

void MPoly::add(const std::array<int, 3>& e, u64 c) {
  c %= p;
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
    return;
  }
  it->second = (it->second + c) % p;
  if (it->second == 0) terms.erase(it);
}

int MPoly::order() const {
  int best = 1 << 20;
  for (const auto& [e, c] : terms) best = std::min(best, e[0] + e[1] + e[2]);
  return best;
}

u64 MPoly::eval(const std::array<u64, 3>& pt) const {
  u64 s = 0;
  for (const auto& [e, c] : terms) {
    u64 v = c;
    for (int j = 0; j < 3; ++j) v = mulmod(v, powmod(pt[j], static_cast<u64>(e[j]), p), p);
    s = (s + v) % p;
  }
  return s;
}

MPoly weierstrass_surface(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
  MPoly f;
  f.p = p;
  f.add({0, 2, 0}, 1);
  f.add({3, 0, 0}, p - 1);
  for (std::size_t i = 0; i < a.size(); ++i) f.add({1, 0, static_cast<int>(i)}, (p - a[i] % p) % p);
  for (std::size_t i = 0; i < b.size(); ++i) f.add({0, 0, static_cast<int>(i)}, (p - b[i] % p) % p);
  return f;
}

long long points_above_singularity(const MPoly& f, int depth) {
  if (depth > 12) throw std::runtime_error("blow-up oracle: resolution too deep");
  const int m = f.order();
  const u64 p = f.p;
  long long total = 0;
  for (int c = 0; c < 3; ++c) {
    const MPoly g = chart(f, c, m);
    // exceptional points [U] with U_c = 1 and U_j = 0 for j < c
    const int free = 2 - c;
    u64 count = 1;
    for (int i = 0; i < free; ++i) count *= p;
    for (u64 idx = 0; idx < count; ++idx) {
      std::array<u64, 3> pt{0, 0, 0};
      u64 r = idx;
      for (int j = c + 1; j < 3; ++j) {
        pt[j] = r % p;
        r /= p;
      }
      if (g.eval(pt) != 0) continue;
      const MPoly h = translate(g, pt);
      total += h.order() >= 2 ? points_above_singularity(h, depth + 1) : 1;
    }
  }
  return total;
}

long long fiber_resolution_correction(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
  const MPoly f = weierstrass_surface(a, b, p);
  long long total = 0;
  for (u64 x = 0; x < p; ++x) {
    for (u64 y = 0; y < p; ++y) {
      if (f.eval({x, y, 0}) != 0) continue;
      const MPoly h = translate(f, {x, y, 0});
      if (h.order() >= 2) total += points_above_singularity(h) - 1;
    }
  }
  return total;
}

Integer brute_force_weierstrass_count(const IntPoly& A, const IntPoly& B, u64 p, int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("brute force counts over F_p and F_p^2 only");
  u64 n = 2;
  while (powmod(n, (p - 1) / 2, p) == 1) ++n;
  const Fp2 F{p, n};
  using E = Fp2::E;
  const u64 q = k == 1 ? p : p * p;
  auto elem = [&](u64 i) -> E { return {i % p, k == 1 ? 0 : i / p}; };
  auto index = [&](E e) { return e.first + (k == 1 ? 0 : e.second * p); };

  std::vector<u64> roots_of(q, 0);  // #{y : y^2 = v}
  for (u64 i = 0; i < q; ++i) {
    const E y = elem(i);
    ++roots_of[index(F.mul(y, y))];
  }

  int w = 0;
  while (A.degree() > 4 * w || B.degree() > 6 * w) ++w;
  std::vector<u64> a(static_cast<std::size_t>(4 * w) + 1, 0), b(static_cast<std::size_t>(6 * w) + 1, 0);
  std::vector<u64> ai(a.size(), 0), bi(b.size(), 0);
  for (int i = 0; i <= A.degree(); ++i) {
    a[i] = reduce(A[i], p);
    ai[4 * w - i] = a[i];
  }
  for (int i = 0; i <= B.degree(); ++i) {
    b[i] = reduce(B[i], p);
    bi[6 * w - i] = b[i];
  }
  auto eval = [&](const std::vector<u64>& c, E t) {
    E acc{0, 0};
    for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, t), E{c[i], 0});
    return acc;
  };
  auto fiber = [&](const std::vector<u64>& ca, const std::vector<u64>& cb, E t) {
    const E at = eval(ca, t), bt = eval(cb, t);
    u64 pts = 1;
    for (u64 i = 0; i < q; ++i) {
      const E x = elem(i);
      const E rhs = F.add(F.add(F.mul(F.mul(x, x), x), F.mul(at, x)), bt);
      pts += roots_of[index(rhs)];
    }
    return pts;
  };
  Integer total = 0;
  for (u64 i = 0; i < q; ++i) total += static_cast<unsigned long>(fiber(a, b, elem(i)));
  total += static_cast<unsigned long>(fiber(ai, bi, E{0, 0}));
  return total;
}

ClosedForm closed_form_family(long a, long b, long c) {
  const Integer A3B3 = 4 * ellrank::ipow(a, 3) * ellrank::ipow(b, 3);
  const Integer A5B5 = 16 * ellrank::ipow(a, 5) * ellrank::ipow(b, 5);
  IntPoly inner_a = IntPoly::monomial(Integer((b - a) * c), 8) +
                    IntPoly::monomial(Integer(2 * a * c + 2 * b * c + 4 * a * b), 4) + IntPoly(Integer((b - a) * c));
  IntPoly inner_b = IntPoly::monomial(Integer(b - a), 10) + IntPoly::monomial(Integer(2 * (b + a)), 6) +
                    IntPoly::monomial(Integer(b - a), 2);
  return {inner_a * A3B3, inner_b * A5B5};
}

ClosedForm substituted_family(long a, long b, long c) {
  const IntPoly N = IntPoly::monomial(Integer(4 * a * b), 4);
  const IntPoly D = IntPoly::monomial(Integer(a - b), 8) + IntPoly::monomial(Integer(-2 * (a + b)), 4) +
                    IntPoly(Integer(a - b));
  // t^3 (t - c) x + t^5 at t = N/D, scaled by D^4 and D^6
  const IntPoly A = N * N * N * (N - D * Integer(c));
  const IntPoly B = N * N * N * N * N * D;
  return {A, B};
}

bool scaling_related(const ClosedForm& m1, const ClosedForm& m2) {
  // w = (B2 A1) / (A2 B1); need A2 = w^2 A1, B2 = w^3 B1 and w a constant times a square.
  const IntPoly num = m2.B * m1.A, den = m2.A * m1.B;
  if (num.is_zero() || den.is_zero()) return false;
  if (!(m2.A * den * den == num * num * m1.A)) return false;
  if (!(m2.B * den * den * den == num * num * num * m1.B)) return false;
  const IntPoly g = ellrank::poly_gcd(num, den);
  const IntPoly nd = ellrank::exact_div(ellrank::primitive_part(num), g) * ellrank::exact_div(ellrank::primitive_part(den), g);
  for (const auto& [f, e] : ellrank::squarefree_decomposition(nd)) {
    if (f.degree() > 0 && e % 2 != 0) return false;
  }
  return true;
}

}  // namespace oracle
