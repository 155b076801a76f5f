// Zassenhaus factorization over Q: factor modulo a good prime, lift the
// factors with linear Hensel steps, recombine by subsets.
#include <algorithm>
#include <cmath>
#include <functional>

#include "ellrank/algebra/polynomial.hpp"
#include "ellrank/errors.hpp"
#include "ellrank/finite_field.hpp"

namespace ellrank {

namespace {

constexpr int kMaxDegree = 64;

Integer mod_sym(const Integer& v, const Integer& m) {
  Integer r = v % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

Integer mod_pos(const Integer& v, const Integer& m) {
  Integer r = v % m;
  if (r < 0) r += m;
  return r;
}

IntPoly reduce_sym(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c;
  for (const auto& v : f.coefficients()) c.push_back(mod_sym(v, m));
  return IntPoly(std::move(c));
}

IntPoly lift_poly(const PolyFp& f) {
  std::vector<Integer> c;
  for (auto v : f.coefficients()) c.emplace_back(static_cast<unsigned long>(v));
  return IntPoly(std::move(c));
}

// Exact division of integer polynomials; false if not exact over Z.
bool divide_exactly(const IntPoly& f, const IntPoly& g, IntPoly& q) {
  auto [qr, r] = divrem(to_rational(f), to_rational(g));
  if (!r.is_zero()) return false;
  std::vector<Integer> c;
  for (const auto& v : qr.coefficients()) {
    if (v.get_den() != 1) return false;
    c.emplace_back(v.get_num());
  }
  q = IntPoly(std::move(c));
  return true;
}

// Lifts f = g*h (mod p), g monic, to the same identity mod p^k.
void hensel_lift(const IntPoly& f, IntPoly& g, IntPoly& h, u64 p, unsigned k) {
  const Integer P(static_cast<unsigned long>(p));
  PolyFp gp = PolyFp::reduce(g, p), hp = PolyFp::reduce(h, p), d, s, t;
  xgcd(gp, hp, d, s, t);
  if (!d.is_one()) throw std::logic_error("hensel_lift: factors not coprime mod p");
  Integer pj = P;
  for (unsigned j = 1; j < k; ++j) {
    const Integer next = pj * P;
    IntPoly diff = reduce_sym(f - g * h, next);
    std::vector<Integer> ec;
    for (const auto& v : diff.coefficients()) ec.push_back(v / pj);
    PolyFp e = PolyFp::reduce(IntPoly(std::move(ec)), p);
    PolyFp dg = divrem(t * e, gp).second;
    PolyFp dh = divrem(e - dg * hp, gp).first;
    g = reduce_sym(g + lift_poly(dg) * pj, next);
    h = reduce_sym(h + lift_poly(dh) * pj, next);
    pj = next;
  }
}

Integer norm2_ceiling(const IntPoly& f) {
  Integer s = 0;
  for (const auto& v : f.coefficients()) s += v * v;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

void for_each_subset(std::size_t n, std::size_t size, std::vector<std::size_t>& cur, std::size_t start,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit, bool& stop) {
  if (stop) return;
  if (cur.size() == size) {
    stop = visit(cur);
    return;
  }
  for (std::size_t i = start; i < n && !stop; ++i) {
    cur.push_back(i);
    for_each_subset(n, size, cur, i + 1, visit, stop);
    cur.pop_back();
  }
}

// f squarefree, primitive, positive leading coefficient, degree >= 1, f(0) != 0.
std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
  if (f.degree() == 1) return {f};
  const IntPoly df = derivative(f);
  u64 best_p = 0;
  std::vector<std::pair<PolyFp, int>> best;
  int tried = 0;
  for (std::uint32_t p : small_primes(2000)) {
    if (p < 3) continue;
    if (f.leading() % p == 0) continue;
    PolyFp fp = PolyFp::reduce(f, p);
    if (gcd(fp, PolyFp::reduce(df, p)).degree() > 0) continue;
    auto fac = factor_mod_p(fp);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1 || ++tried >= 12) break;
  }
  if (best_p == 0) throw std::logic_error("factor_over_Q: no good prime found");
  if (best.size() == 1) return {f};

  const Integer P(static_cast<unsigned long>(best_p));
  const Integer lc = f.leading();
  const Integer bound = 2 * abs(lc) * ipow(Integer(2), static_cast<unsigned long>(f.degree())) * norm2_ceiling(f);
  unsigned k = 1;
  Integer pk = P;
  while (pk <= 2 * bound) {
    pk *= P;
    ++k;
  }

  // Peel off one lifted factor at a time.
  std::vector<IntPoly> lifted;
  IntPoly rest = f;
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    IntPoly g = lift_poly(best[i].first);
    PolyFp others = PolyFp::constant(best_p, 1);
    for (std::size_t j = i + 1; j < best.size(); ++j) others = others * best[j].first;
    const u64 lcp = mod_pos(rest.leading(), P).get_ui();
    IntPoly h = lift_poly(others * lcp);
    hensel_lift(rest, g, h, best_p, k);
    lifted.push_back(g);
    rest = h;
  }
  {
    // The last factor made monic mod p^k.
    Integer inv;
    Integer l = mod_pos(rest.leading(), pk);
    mpz_invert(inv.get_mpz_t(), l.get_mpz_t(), pk.get_mpz_t());
    lifted.push_back(reduce_sym(rest * inv, pk));
  }

  std::vector<IntPoly> found;
  IntPoly F = f;
  std::vector<IntPoly> pool = lifted;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool stop = false;
    std::vector<std::size_t> cur;
    std::vector<std::size_t> hit;
    IntPoly hit_factor, hit_quotient;
    for_each_subset(pool.size(), size, cur, 0, [&](const std::vector<std::size_t>& s) {
      IntPoly g(F.leading());
      for (auto i : s) g = reduce_sym(g * pool[i], pk);
      g = primitive_part(g);
      IntPoly q;
      if (g.degree() > 0 && divide_exactly(F, g, q)) {
        hit = s;
        hit_factor = g;
        hit_quotient = q;
        return true;
      }
      return false;
    }, stop);
    if (!stop) {
      ++size;
      continue;
    }
    found.push_back(hit_factor);
    F = hit_quotient;
    std::vector<IntPoly> next;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (std::find(hit.begin(), hit.end(), i) == hit.end()) next.push_back(pool[i]);
    }
    pool = std::move(next);
  }
  if (F.degree() > 0) found.push_back(primitive_part(F));
  return found;
}

}  // namespace

std::vector<std::pair<IntPoly, int>> factor_over_Q(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("factor_over_Q of zero");
  if (p.degree() > kMaxDegree) {
    throw ResourceBound("factor_over_Q: degree " + std::to_string(p.degree()) + " exceeds " +
                        std::to_string(kMaxDegree));
  }
  std::vector<std::pair<IntPoly, int>> out;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    IntPoly f = part;
    if (f[0] == 0) {
      out.emplace_back(IntPoly::x(), mult);
      f = exact_div(f, IntPoly::x());
      if (f.degree() < 1) continue;
    }
    for (auto& g : factor_squarefree(primitive_part(f))) out.emplace_back(std::move(g), mult);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ellrank
