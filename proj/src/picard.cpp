#include "ellrank/picard.hpp"

#include <algorithm>
#include <numeric>

#include "ellrank/errors.hpp"

namespace ellrank {

namespace {

int euler_phi(int n) {
  int r = n;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    while (n % d == 0) n /= d;
    r -= r / d;
  }
  if (n > 1) r -= r / n;
  return r;
}

int moebius(int n) {
  int m = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

IntPoly x_power_minus_one(int d) { return IntPoly::monomial(Integer(1), static_cast<std::size_t>(d)) - IntPoly(Integer(1)); }

template <class F>
auto with_stage(const std::string& stage, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), stage + ": " + e.what());
  }
}

}  // namespace

IntPoly cyclotomic(int n) {
  if (n < 1) throw BadParameters("cyclotomic index must be positive");
  IntPoly num(Integer(1)), den(Integer(1));
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(n / d);
    if (mu == 1) num *= x_power_minus_one(d);
    if (mu == -1) den *= x_power_minus_one(d);
  }
  return exact_div(num, den);
}

TateCount count_tate_roots(const WeilFactor& f) {
  TateCount out;
  const int d = f.poly.degree();
  if (d < 1) return out;
  for (int n = 1; n <= 2 * d * d; ++n) {
    const int phi = euler_phi(n);
    if (phi > d) continue;
    // Reciprocal root q*zeta means a root x = 1/(q*zeta) of f, i.e. Phi_n(qx) = 0.
    const IntPoly c = cyclotomic(n);
    std::vector<Integer> scaled;
    Integer qi = 1;
    for (int i = 0; i <= c.degree(); ++i) {
      scaled.push_back(c[static_cast<std::size_t>(i)] * qi);
      qi *= f.q;
    }
    const int mult = multiplicity(f.poly, IntPoly(std::move(scaled)));
    if (mult == 0) continue;
    out.multiplicities[n] = mult;
    out.count += phi * mult;
    out.stabilizing_degree = std::lcm(out.stabilizing_degree, n);
  }
  return out;
}

bool parity_check(int rho, int b2) { return (rho - b2) % 2 == 0; }

WeilFactor extend_base_field(const WeilFactor& f, int n) {
  if (n < 1) throw BadParameters("extension degree must be positive");
  return {roots_power_poly(f.poly, static_cast<unsigned>(n)), ipow(f.q, static_cast<unsigned long>(n)), f.weight};
}

SquareClass artin_tate_square_class(const WeilFactor& f, int rho_prime, const FactorOptions& options) {
  Integer root;
  if (!exact_sqrt(f.q, root)) throw BadParameters("q = " + f.q.get_str() + " is not a perfect square");
  const TateCount tc = count_tate_roots(f);
  if (tc.count != rho_prime || tc.stabilizing_degree != 1) {
    throw BadParameters("Tate roots are not all equal to q (count " + std::to_string(tc.count) + ", expected " +
                        std::to_string(rho_prime) + ")");
  }
  IntPoly r;
  try {
    r = exact_div(f.poly, power(IntPoly{Integer(1), Integer(-f.q)}, static_cast<unsigned>(rho_prime)));
  } catch (const std::domain_error&) {
    throw InconsistencyError("(1 - qx)^" + std::to_string(rho_prime) + " does not divide the factor");
  }
  if (r.degree() < 1) throw BadParameters("no transcendental part left: R is constant");
  const Rational v = evaluate(r, Rational(Integer(1), f.q));
  if (v == 0) throw BadParameters("R(1/q) vanishes: the Tate roots were undercounted");
  return square_class(Rational(-v), options);
}

PicardReport picard_report(const WeierstrassModel& m, u64 p, const CertifyOptions& options) {
  const std::string at = " at p = " + std::to_string(p);
  PicardReport r;
  r.p = p;
  const SurfaceModP s = with_stage("reduction" + at, [&] { return reduce_mod_p(m, p); });
  r.reduction_evidence = s.evidence;
  r.component_orbits = with_stage("algebraic factor" + at, [&] { return component_orbits(s); });
  r.algebraic = with_stage("algebraic factor" + at, [&] { return algebraic_factor(s); });
  std::vector<TraceData> traces = with_stage("point count" + at, [&] {
    return std::vector<TraceData>{count_smooth_points(s, 1, options.count), count_smooth_points(s, 2, options.count)};
  });
  r.reconstruction = with_stage("reconstruction" + at, [&] {
    return reconstruct_transcendental(s, traces, r.algebraic, options.count);
  });
  r.traces = r.reconstruction.traces;
  r.charpoly = full_charpoly(r.algebraic, r.reconstruction.complement);

  const TateCount tc = count_tate_roots(r.charpoly);
  r.rho_bar = tc.count;
  r.stabilizing_degree = tc.stabilizing_degree;
  r.tate_roots_in_complement = count_tate_roots({r.reconstruction.chosen.even_part, r.charpoly.q, 2}).count;
  r.parity_ok = parity_check(r.rho_bar, s.b2());
  if (!r.parity_ok) {
    throw InconsistencyError("Tate count " + std::to_string(r.rho_bar) + at + " has the wrong parity");
  }

  r.extension_degree = std::lcm(r.stabilizing_degree, 2);
  r.extended = extend_base_field(r.charpoly, r.extension_degree);
  try {
    r.square_class = with_stage("Artin-Tate" + at, [&] {
      return artin_tate_square_class(r.extended, r.rho_bar, options.factor);
    });
  } catch (const Error& e) {
    if (e.code() != ErrorCode::resource_bound) throw;
    r.unresolved = e.what();
  }
  return r;
}

Comparison van_luijk_compare(const PicardReport& r1, const PicardReport& r2) {
  Comparison c;
  if (r1.rho_bar != r2.rho_bar) {
    c.bound = std::min(r1.rho_bar, r2.rho_bar);
    c.verdict = "rho mismatch";
    c.warnings.push_back("Picard numbers of the reductions differ (" + std::to_string(r1.rho_bar) + " vs " +
                         std::to_string(r2.rho_bar) + "); the comparison does not apply");
    return c;
  }
  c.bound = r1.rho_bar;
  if (!r1.square_class || !r2.square_class) {
    c.verdict = "unresolved";
    c.warnings.push_back("a discriminant square class is unresolved; no improvement");
    return c;
  }
  if (*r1.square_class == *r2.square_class) {
    c.verdict = "classes agree";
    return c;
  }
  c.verdict = "classes differ";
  c.bound = r1.rho_bar - 1;
  c.improved = true;
  return c;
}

std::string to_string(const RankInterval& r) {
  return r.pinned() ? std::to_string(r.lo) : "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]";
}

RankCertificate certify_rank(const WeierstrassModel& m, u64 p1, u64 p2, const CertifyOptions& options) {
  RankCertificate cert;
  cert.model = minimalize(m).first;
  cert.configuration = fiber_configuration(cert.model);
  if (cert.configuration.kind != SurfaceKind::k3) {
    throw BadParameters("not K3: the model is " + to_string(cert.configuration.kind) + " (Euler number " +
                        std::to_string(cert.configuration.total_euler) + ")");
  }

  if (auto tw = recognize_twisted_auxiliary(cert.model)) {
    cert.route = "twisted-auxiliary";
    cert.reparametrization = tw->reparametrization;
    // The twist points are the critical values -a, -b of f_ab.
    const FamilyParameters fam{-tw->a, -tw->b, tw->c};
    cert.family = fam;
    cert.ledger = with_stage("construction", [&] { return construction_pipeline(fam.c, fam.a, fam.b); });
    std::vector<Rational> crit = cert.ledger->critical_values, points = {tw->a, tw->b};
    std::sort(crit.begin(), crit.end());
    if (crit != points) throw InconsistencyError("construction: critical values do not match the twist points");
    if (!is_isomorphic(pipeline_twist(fam.c, fam.a, fam.b), tw->normalized)) {
      throw InconsistencyError("construction: model is not isomorphic to the twist left open by the ledger");
    }
    cert.subject = cert.model;
  } else if (auto fam = recognize_family_member(cert.model)) {
    cert.route = "family-member";
    cert.family = *fam;
    cert.ledger = with_stage("construction", [&] { return construction_pipeline(fam->c, fam->a, fam->b); });
    if (!cert.ledger->matches_family) throw InconsistencyError("construction: last pullback is not E_abc");
    cert.subject = pipeline_twist(fam->c, fam->a, fam->b);
  } else {
    cert.route = "direct";
    cert.subject = cert.model;
  }
  if (cert.ledger && cert.ledger->final_expression.symbols != std::map<std::string, int>{{kTwistRankSymbol, 1}}) {
    throw InconsistencyError("construction: final expression is not constant + " + kTwistRankSymbol);
  }

  cert.subject_configuration = fiber_configuration(cert.subject);
  if (cert.subject_configuration.kind != SurfaceKind::k3) throw BadParameters("not K3: certified surface");
  for (u64 p : {p1, p2}) cert.reports.push_back(picard_report(cert.subject, p, options));
  cert.comparison = van_luijk_compare(cert.reports[0], cert.reports[1]);

  const int trivial = 2 + cert.subject_configuration.non_identity_components();
  cert.rho_lower = trivial;
  cert.rho_upper = cert.comparison.bound;
  if (cert.rho_upper < cert.rho_lower) {
    throw InconsistencyError("Picard bounds cross: " + std::to_string(cert.rho_lower) + " > " +
                             std::to_string(cert.rho_upper));
  }
  cert.subject_mw_rank = {0, cert.rho_upper - trivial};
  const RankInterval shifted =
      cert.ledger ? RankInterval{cert.ledger->final_expression.constant + cert.subject_mw_rank.lo,
                                 cert.ledger->final_expression.constant + cert.subject_mw_rank.hi}
                  : cert.subject_mw_rank;
  if (cert.route == "family-member") {
    cert.model_mw_rank = shifted;
  } else {
    cert.model_mw_rank = cert.subject_mw_rank;
    if (cert.route == "twisted-auxiliary") cert.family_mw_rank = shifted;
  }
  return cert;
}

}  // namespace ellrank
