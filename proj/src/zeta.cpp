#include "ellrank/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <thread>

#include "ellrank/errors.hpp"

namespace ellrank {

namespace {

using Elem = LogTableField::Elem;

constexpr int kInf = 1 << 20;

int val_or_inf(const PolyFp& f, const PolyFp& place) { return f.is_zero() ? kInf : valuation(f, place); }

int low_order(const PolyFp& f) {
  if (f.is_zero()) return kInf;
  int v = 0;
  while (f[static_cast<std::size_t>(v)] == 0) ++v;
  return v;
}

KodairaType classify_mod_p(int va, int vb, int vd, const std::string& where) {
  try {
    return classify_valuations(va, vb, vd);
  } catch (const BadParameters&) {
    throw BadReduction("model is not minimal modulo p at " + where);
  } catch (const InconsistencyError&) {
    throw BadReduction("unclassifiable fiber modulo p at " + where);
  }
}

using Signature = std::map<std::pair<KodairaType, int>, int>;

Integer q_of(u64 p, int k) { return ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(k)); }

LogTableField make_field(const SurfaceModP& s, int k, const CountOptions& options) {
  if (k < 1) throw BadParameters("extension degree must be positive");
  const Integer q = q_of(s.p, k);
  if (q > Integer(static_cast<unsigned long>(std::min<u64>(options.max_field_size, LogTableField::kMaxOrder)))) {
    throw ResourceBound("field of size " + q.get_str() + " exceeds the enumeration bound " +
                        std::to_string(options.max_field_size));
  }
  return LogTableField(FieldDescriptor::make(s.p, k));
}

// Coefficients of the 2-torsion cubic x^3 + a2 x + b3 of an I0* fiber at t0.
std::pair<Elem, Elem> local_cubic(const SurfaceModP& s, const LogTableField& F, const FiberModP& f, Elem t0) {
  if (f.infinity) {
    return {F.from_integer(static_cast<long long>(s.A_inf[2])), F.from_integer(static_cast<long long>(s.B_inf[3]))};
  }
  const PolyFp a2 = derivative(derivative(s.A));
  const PolyFp b3 = derivative(derivative(derivative(s.B)));
  const Elem inv2 = F.from_integer(static_cast<long long>(mod_inv(2, s.p)));
  const Elem inv6 = F.from_integer(static_cast<long long>(mod_inv(6, s.p)));
  return {F.mul(F.eval(a2, t0), inv2), F.mul(F.eval(b3, t0), inv6)};
}

int cubic_roots(const LogTableField& F, Elem a, Elem b) {
  int r = 0;
  for (u64 i = 0; i < F.q(); ++i) {
    const Elem x = F.element(i);
    if (F.add(F.add(F.pow(x, 3), F.mul(a, x)), b) == LogTableField::kZero) ++r;
  }
  return r;
}

std::vector<Elem> roots_in(const LogTableField& F, const PolyFp& f) {
  std::vector<Elem> out;
  for (u64 i = 0; i < F.q(); ++i) {
    if (F.eval(f, F.element(i)) == LogTableField::kZero) out.push_back(F.element(i));
  }
  return out;
}

void check_supported(const KodairaType& t) {
  if (t.family == FiberFamily::I && t.nu <= 1) return;
  if (t == KodairaType::I_star_n(0) || t == KodairaType::of(FiberFamily::III_star)) return;
  throw Unsupported("fiber type " + t.name() + " is unsupported for counting");
}

Integer correction_in(const SurfaceModP& s, const LogTableField& F, int k) {
  const Integer q(static_cast<unsigned long>(F.q()));
  Integer total = 0;
  for (const auto& f : s.fibers) {
    check_supported(f.type);
    if (f.type.family == FiberFamily::I) continue;
    if (k % f.degree != 0) continue;
    if (f.infinity) {
      auto [a, b] = local_cubic(s, F, f, LogTableField::kZero);
      total += fiber_point_correction(f.type, q, f.type == KodairaType::I_star_n(0) ? cubic_roots(F, a, b) : 0);
      continue;
    }
    const auto roots = roots_in(F, f.place);
    if (static_cast<int>(roots.size()) != f.degree) {
      throw InconsistencyError("place " + to_string(f.place) + " does not split over F_" + q.get_str());
    }
    for (Elem t0 : roots) {
      int r = 0;
      if (f.type == KodairaType::I_star_n(0)) {
        auto [a, b] = local_cubic(s, F, f, t0);
        r = cubic_roots(F, a, b);
      }
      total += fiber_point_correction(f.type, q, r);
    }
  }
  return total;
}

Integer count_in(const SurfaceModP& s, const LogTableField& F, unsigned threads) {
  const u64 q = F.q();
  std::vector<Elem> xs(q), cubes(q);
  for (u64 i = 0; i < q; ++i) {
    xs[i] = F.element(i);
    cubes[i] = F.pow(xs[i], 3);
  }
  auto fiber_sum = [&](Elem a, Elem b) {
    long long acc = 0;
    for (u64 i = 0; i < q; ++i) acc += F.chi(F.add(F.add(cubes[i], F.mul(a, xs[i])), b));
    return acc;
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<u64>(threads, q));
  std::vector<long long> partial(threads, 0);
  auto work = [&](unsigned w) {
    const u64 lo = q * w / threads, hi = q * (w + 1) / threads;
    long long acc = 0;
    for (u64 i = lo; i < hi; ++i) acc += fiber_sum(F.eval(s.A, xs[i]), F.eval(s.B, xs[i]));
    partial[w] = acc;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  long long chi_sum = fiber_sum(F.from_integer(static_cast<long long>(s.A_inf[0])),
                                F.from_integer(static_cast<long long>(s.B_inf[0])));
  for (long long v : partial) chi_sum += v;
  const Integer qq(static_cast<unsigned long>(q));
  return (qq + 1) * (qq + 1) + Integer(static_cast<long>(chi_sum));
}

}  // namespace

SurfaceModP reduce_mod_p(const WeierstrassModel& m, u64 p) {
  if (p < 5) throw BadReduction("characteristic " + std::to_string(p) + " is excluded");
  if (p > 0xffffffffULL || !is_probable_prime(Integer(static_cast<unsigned long>(p)))) {
    throw BadParameters(std::to_string(p) + " is not a prime below 2^32");
  }
  SurfaceModP s;
  s.p = p;
  s.model = minimalize(m).first;
  s.weight = s.model.weight();
  s.char0 = fiber_configuration(s.model);
  if (s.char0.total_euler == 0) throw Unsupported("no singular fibers: H^1 of a constant family is not covered by the counts");
  const WeierstrassModel chart = infinity_chart(s.model);
  s.A = PolyFp::reduce(s.model.A(), p);
  s.B = PolyFp::reduce(s.model.B(), p);
  s.A_inf = PolyFp::reduce(chart.A(), p);
  s.B_inf = PolyFp::reduce(chart.B(), p);

  const PolyFp delta = PolyFp::reduce(invariants(s.model).delta, p);
  const PolyFp delta_inf = PolyFp::reduce(invariants(chart).delta, p);
  if (delta.is_zero() || delta_inf.is_zero()) throw BadReduction("discriminant vanishes modulo " + std::to_string(p));

  Signature got, want;
  if (delta.degree() > 0) {
    for (const auto& [f, e] : factor_mod_p(delta)) {
      FiberModP fm;
      fm.place = f;
      fm.degree = f.degree();
      fm.type = classify_mod_p(val_or_inf(s.A, f), val_or_inf(s.B, f), e, to_string(f));
      s.fibers.push_back(fm);
      got[{fm.type, e}] += fm.degree;
    }
  }
  const int v_inf = low_order(delta_inf);
  if (v_inf > 0) {
    FiberModP fm;
    fm.infinity = true;
    fm.type = classify_mod_p(low_order(s.A_inf), low_order(s.B_inf), v_inf, "inf");
    s.fibers.push_back(fm);
    got[{fm.type, v_inf}] += 1;
  }
  for (const auto& f : s.char0.fibers) want[{f.type, f.v_delta}] += f.degree;

  std::map<KodairaType, int> got_types;
  for (const auto& [key, n] : got) got_types[key.first] += n;
  if (got != want) {
    throw BadReduction("fiber configuration changes modulo " + std::to_string(p) + ": " + summary(s.char0) + " becomes " +
                       summary(got_types));
  }
  s.good_reduction = true;
  s.evidence = "configuration " + summary(got_types) + " over F_" + std::to_string(p) + " matches characteristic 0";
  return s;
}

Integer count_weierstrass_points(const SurfaceModP& s, int k, const CountOptions& options) {
  const LogTableField F = make_field(s, k, options);
  return count_in(s, F, options.threads);
}

Integer fiber_point_correction(const KodairaType& type, const Integer& q, int cubic_roots) {
  check_supported(type);
  if (type.family == FiberFamily::I) return 0;
  if (type.family == FiberFamily::III_star) return 7 * q;
  if (cubic_roots != 0 && cubic_roots != 1 && cubic_roots != 3) {
    throw InconsistencyError("a separable cubic has 0, 1 or 3 roots, not " + std::to_string(cubic_roots));
  }
  return q * (1 + cubic_roots);
}

Integer smooth_model_correction(const SurfaceModP& s, int k, const CountOptions& options) {
  const LogTableField F = make_field(s, k, options);
  return correction_in(s, F, k);
}

TraceData count_smooth_points(const SurfaceModP& s, int k, const CountOptions& options) {
  for (const auto& f : s.fibers) check_supported(f.type);
  const LogTableField F = make_field(s, k, options);
  TraceData t;
  t.k = k;
  t.q = q_of(s.p, k);
  t.weierstrass_count = count_in(s, F, options.threads);
  t.correction = correction_in(s, F, k);
  t.point_count = t.weierstrass_count + t.correction;
  t.t2 = t.point_count - 1 - t.q * t.q;
  if (abs(t.t2) > s.b2() * t.q) {
    throw InconsistencyError("trace " + t.t2.get_str() + " over F_" + t.q.get_str() + " violates the Weil bound");
  }
  return t;
}

namespace {

using Complex = std::complex<long double>;

// Aberth-Ehrlich iteration on a monic polynomial (coefficients low to high).
std::vector<Complex> polynomial_roots(const std::vector<Complex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    z[static_cast<std::size_t>(i)] = std::polar(1.0L, 2.0L * 3.14159265358979323846L * (i + 0.25L) / n) * 1.1L;
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double step = 0;
    for (int i = 0; i < n; ++i) {
      Complex& zi = z[static_cast<std::size_t>(i)];
      Complex f = c[static_cast<std::size_t>(n)], df = 0;
      for (int j = n - 1; j >= 0; --j) {
        df = df * zi + f;
        f = f * zi + c[static_cast<std::size_t>(j)];
      }
      if (std::abs(f) == 0) continue;
      const Complex ratio = f / df;
      Complex sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += 1.0L / (zi - z[static_cast<std::size_t>(j)]);
      }
      const Complex w = ratio / (1.0L - ratio * sum);
      zi -= w;
      step = std::max(step, std::abs(w));
    }
    if (step < 1e-30L) break;
  }
  return z;
}

}  // namespace

long double weil_deviation(const WeilFactor& f) {
  if (f.poly.is_zero() || f.poly[0] != 1) throw BadParameters("Weil factor must have constant term 1");
  if (f.poly.degree() == 0) return 0;
  // |alpha| = q^(w/2); with alpha = 1/x the roots of P(z / q^(w/2)) lie on the unit circle.
  const long double scale = std::pow(static_cast<long double>(f.q.get_d()), f.weight / 2.0L);
  long double worst = 0;
  for (const auto& [g, mult] : squarefree_decomposition(f.poly)) {
    if (g.degree() < 1) continue;
    std::vector<Complex> c;
    const int n = g.degree();
    for (int i = 0; i <= n; ++i) {
      const Rational ci(g[static_cast<std::size_t>(i)], g.leading());
      c.emplace_back(static_cast<long double>(ci.get_d()) * std::pow(scale, static_cast<long double>(n - i)));
    }
    // g(z / scale) made monic in z.
    for (const Complex& z : polynomial_roots(c)) worst = std::max(worst, std::fabs(std::abs(z) - 1.0L));
  }
  return worst;
}

bool satisfies_weil(const WeilFactor& f, long double rel_tol) { return weil_deviation(f) <= rel_tol; }

std::vector<int> component_orbits(const SurfaceModP& s) {
  std::vector<int> out;
  for (const auto& f : s.fibers) {
    check_supported(f.type);
    const int d = f.degree;
    if (f.type.family == FiberFamily::I) continue;
    if (f.type.family == FiberFamily::III_star) {
      out.insert(out.end(), 7, d);
      continue;
    }
    out.push_back(d);  // central component of I0*
    std::vector<int> cubic;
    if (d == 1) {
      u64 a2, b3;
      if (f.infinity) {
        a2 = s.A_inf[2];
        b3 = s.B_inf[3];
      } else {
        const u64 t0 = (s.p - f.place[0]) % s.p;
        a2 = mod_mul(derivative(derivative(s.A))(t0), mod_inv(2, s.p), s.p);
        b3 = mod_mul(derivative(derivative(derivative(s.B)))(t0), mod_inv(6, s.p), s.p);
      }
      cubic = factor_degrees_squarefree(PolyFp(s.p, {b3, a2, 0, 1}));
    } else {
      const LogTableField F(FieldDescriptor::make(s.p, d));
      const auto roots = roots_in(F, f.place);
      if (roots.empty()) throw InconsistencyError("place " + to_string(f.place) + " has no root in its residue field");
      auto [a, b] = local_cubic(s, F, f, roots.front());
      switch (cubic_roots(F, a, b)) {
        case 0:
          cubic = {3};
          break;
        case 1:
          cubic = {1, 2};
          break;
        case 3:
          cubic = {1, 1, 1};
          break;
        default:
          throw InconsistencyError("2-torsion cubic is not separable");
      }
    }
    for (int e : cubic) out.push_back(d * e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeilFactor algebraic_factor(const SurfaceModP& s) {
  const Integer p(static_cast<unsigned long>(s.p));
  IntPoly poly = power(IntPoly{Integer(1), Integer(-p)}, 2);
  for (int d : component_orbits(s)) {
    poly *= IntPoly(Integer(1)) - IntPoly::monomial(ipow(p, static_cast<unsigned long>(d)), static_cast<std::size_t>(d));
  }
  return {poly, p, 2};
}

Integer trace_of_power(const IntPoly& p, int k) {
  if (p.degree() <= 0) return 0;
  const Rational s = reciprocal_power_sums(p, static_cast<std::size_t>(k)).back();
  if (s.get_den() != 1) throw InconsistencyError("non-integral power sum");
  return s.get_num();
}

WeilFactor full_charpoly(const WeilFactor& algebraic, const WeilFactor& transcendental) {
  if (algebraic.q != transcendental.q) throw BadParameters("factors over different fields");
  return {algebraic.poly * transcendental.poly, algebraic.q, 2};
}

Reconstruction reconstruct_transcendental(const SurfaceModP& s, std::vector<TraceData> traces,
                                          const WeilFactor& algebraic, const CountOptions& options) {
  const Integer p(static_cast<unsigned long>(s.p));
  const int n = s.b2() - algebraic.poly.degree();
  if (n < 0) throw InconsistencyError("algebraic factor exceeds the second Betti number");
  const int r = n / 2;

  std::map<int, TraceData> by_k;
  for (auto& t : traces) by_k[t.k] = t;
  auto trace = [&](int k) -> const TraceData& {
    auto it = by_k.find(k);
    if (it == by_k.end()) it = by_k.emplace(k, count_smooth_points(s, k, options)).first;
    return it->second;
  };

  std::vector<Rational> g(static_cast<std::size_t>(r));
  for (int k = 1; k <= r; ++k) g[static_cast<std::size_t>(k - 1)] = trace(k).t2 - trace_of_power(algebraic.poly, k);

  Reconstruction out;
  const std::vector<int> eps_choices = n % 2 == 1 ? std::vector<int>{1, -1} : std::vector<int>{0};
  for (int eps : eps_choices) {
    for (int eta : {1, -1}) {
      std::vector<Rational> sums = g;
      for (int k = 1; k <= r; ++k) {
        if (eps != 0) sums[static_cast<std::size_t>(k - 1)] -= Rational(ipow(Integer(eps) * p, static_cast<unsigned long>(k)));
      }
      const RatPoly low = from_reciprocal_power_sums(sums);
      std::vector<Integer> a(static_cast<std::size_t>(2 * r) + 1, Integer(0));
      bool ok = true;
      for (int i = 0; i <= r; ++i) {
        const Rational v = low[static_cast<std::size_t>(i)];
        if (v.get_den() != 1) ok = false;
        a[static_cast<std::size_t>(i)] = v.get_num();
      }
      if (!ok) continue;
      if (eta == -1 && a[static_cast<std::size_t>(r)] != 0) continue;
      for (int i = 0; i < r; ++i) {
        a[static_cast<std::size_t>(2 * r - i)] = eta * ipow(p, static_cast<unsigned long>(2 * r - 2 * i)) * a[static_cast<std::size_t>(i)];
      }
      ReconstructionCandidate c;
      c.epsilon = eps;
      c.eta = eta;
      c.linear = eps == 0 ? IntPoly(Integer(1)) : IntPoly{Integer(1), Integer(-eps * p)};
      c.even_part = IntPoly(std::move(a));
      c.complement = c.linear * c.even_part;
      if (c.complement.degree() != n) continue;
      if (!satisfies_weil({c.complement, p, 2})) continue;
      // (1 - px) G1 = (1 + px) G2 when each quartic carries the other linear factor.
      if (std::any_of(out.candidates.begin(), out.candidates.end(),
                      [&](const ReconstructionCandidate& d) { return d.complement == c.complement; })) {
        continue;
      }
      out.candidates.push_back(c);
    }
  }

  auto consistent = [&](const ReconstructionCandidate& c, const TraceData& t) {
    return trace_of_power(algebraic.poly * c.complement, t.k) == t.t2;
  };
  auto filter = [&](const TraceData& t) {
    std::erase_if(out.candidates, [&](const ReconstructionCandidate& c) { return !consistent(c, t); });
  };
  // Counts already at hand beyond k = r overdetermine the solution.
  for (const auto& [k, t] : by_k) {
    if (k > r) filter(t);
  }
  // Distinct candidates with P(0) = 1 differ in some power sum s_k with k <= n.
  int next = r + 1;
  while (out.candidates.size() > 1 && next <= n) {
    if (by_k.count(next) == 0) {
      out.tiebreak_used = true;
      filter(trace(next));
    }
    ++next;
  }
  if (out.candidates.empty()) {
    throw InconsistencyError("no sign choice reproduces the counts over F_" + std::to_string(s.p) +
                             "; the point counts are inconsistent");
  }
  if (out.candidates.size() > 1) {
    std::string list;
    for (const auto& c : out.candidates) list += (list.empty() ? "" : ", ") + to_string(c.complement, "x");
    throw InconsistencyError("sign choices remain ambiguous after counting over F_" + std::to_string(s.p) + "^" +
                             std::to_string(next - 1) + ": " + list);
  }
  out.chosen = out.candidates.front();
  out.complement = {out.chosen.complement, p, 2};
  for (const auto& [k, t] : by_k) out.traces.push_back(t);
  return out;
}

}  // namespace ellrank
