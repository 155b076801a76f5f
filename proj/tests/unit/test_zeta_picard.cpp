#include <doctest.h>

#include "ellrank/errors.hpp"
#include "ellrank/picard.hpp"
#include "oracles.hpp"

using namespace ellrank;

namespace {
const IntPoly t = IntPoly::x();
IntPoly I(long n) { return IntPoly(Integer(n)); }
IntPoly P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

WeierstrassModel example_k3() {
  return WeierstrassModel(-(power(I(2) * t - 1, 3) * power(I(4) * t - 1, 2)),
                          t * power(I(2) * t - 1, 3) * power(I(4) * t - 1, 3));
}
}  // namespace

TEST_CASE("reduction modulo p") {
  const SurfaceModP s = reduce_mod_p(example_k3(), 17);
  CHECK(s.good_reduction);
  CHECK(s.b2() == 22);
  CHECK(reduce_mod_p(example_k3(), 19).good_reduction);
  CHECK_THROWS_AS(reduce_mod_p(example_k3(), 2), BadReduction);
  CHECK_THROWS_AS(reduce_mod_p(example_k3(), 15), BadParameters);
}

TEST_CASE("Weierstrass point counts match enumeration") {
  SurfaceModP constant;
  constant.p = 5;
  constant.A = constant.A_inf = PolyFp::constant(5, 1);
  constant.B = constant.B_inf = PolyFp();
  CHECK(count_weierstrass_points(constant, 1) == 24);
  CHECK(oracle::brute_force_weierstrass_count(I(1), IntPoly(), 5, 1) == 24);

  for (u64 p : {17, 19}) {
    const SurfaceModP s = reduce_mod_p(example_k3(), p);
    for (int k : {1, 2}) {
      CHECK(count_weierstrass_points(s, k) == oracle::brute_force_weierstrass_count(example_k3().A(), example_k3().B(), p, k));
    }
  }
  CountOptions threaded;
  threaded.threads = 4;
  const SurfaceModP s = reduce_mod_p(example_k3(), 17);
  CHECK(count_weierstrass_points(s, 2, threaded) == count_weierstrass_points(s, 2));
  CountOptions tiny;
  tiny.max_field_size = 100;
  CHECK_THROWS_AS(count_weierstrass_points(s, 2, tiny), ResourceBound);
}

TEST_CASE("fiber corrections") {
  CHECK(fiber_point_correction(KodairaType::I_n(1), 17, 0) == 0);
  CHECK(fiber_point_correction(KodairaType::I_star_n(0), 17, 3) == 4 * 17);
  CHECK(fiber_point_correction(KodairaType::I_star_n(0), 17, 0) == 17);
  CHECK(fiber_point_correction(KodairaType::of(FiberFamily::III_star), 17, 0) == 7 * 17);
  CHECK_THROWS_AS(fiber_point_correction(KodairaType::I_n(2), 17, 0), Unsupported);
  CHECK_THROWS_AS(fiber_point_correction(KodairaType::of(FiberFamily::IV), 17, 0), Unsupported);

  const TraceData d = count_smooth_points(reduce_mod_p(example_k3(), 17), 1);
  CHECK(d.weierstrass_count == 324);
  CHECK(d.correction == 170);
  CHECK(d.t2 == 204);
  CHECK(d.point_count == d.weierstrass_count + d.correction);
  CHECK(abs(d.t2) <= 22 * d.q);
}

TEST_CASE("algebraic factor") {
  const SurfaceModP s = reduce_mod_p(example_k3(), 17);
  const WeilFactor alg = algebraic_factor(s);
  CHECK(alg.poly.degree() == 17);
  CHECK(alg.poly[0] == 1);
  CHECK(roots_power_poly(alg.poly, 6) == power(P({1, -24137569}), 17));
  int orbit_total = 0;
  for (int d : component_orbits(s)) orbit_total += d;
  CHECK(orbit_total == 15);
}

TEST_CASE("reconstruction of the transcendental part") {
  const IntPoly quartic17 = P({1, 17, 136, 4913, 83521});
  const IntPoly quartic19 = P({1, -9, -228, -3249, 130321});
  CHECK(quartic17[3] == 17 * 17 * quartic17[1]);
  CHECK(quartic17[4] == ipow(17, 4));

  const SurfaceModP s17 = reduce_mod_p(example_k3(), 17);
  const Reconstruction r17 = reconstruct_transcendental(s17, {}, algebraic_factor(s17));
  CHECK(r17.chosen.linear == P({1, -17}));
  CHECK(r17.chosen.even_part == quartic17);
  CHECK(r17.tiebreak_used);
  CHECK(satisfies_weil(r17.complement));

  const SurfaceModP s19 = reduce_mod_p(example_k3(), 19);
  const Reconstruction r19 = reconstruct_transcendental(s19, {}, algebraic_factor(s19));
  CHECK(r19.chosen.linear == P({1, 19}));
  CHECK(r19.chosen.even_part == quartic19);

  const WeilFactor full = full_charpoly(algebraic_factor(s19), r19.complement);
  CHECK(full.poly.degree() == 22);
  CHECK(full.poly[0] == 1);
  for (const auto& tr : r19.traces) CHECK(trace_of_power(full.poly, tr.k) == tr.t2);
  // the quartics share no reciprocal root with the algebraic part; the linear
  // factors do, through (1 - p^2 x^2) from the orbit of size two
  CHECK(poly_gcd(algebraic_factor(s17).poly, r17.chosen.even_part) == IntPoly(1));
  CHECK(poly_gcd(algebraic_factor(s19).poly, r19.chosen.even_part) == IntPoly(1));
  CHECK(poly_gcd(algebraic_factor(s19).poly, r19.complement.poly) == P({1, 19}));
}

TEST_CASE("Weil deviation") {
  CHECK(weil_deviation({P({1, 17, 136, 4913, 83521}), 17, 2}) < 1e-12L);
  CHECK(!satisfies_weil({P({1, 1, 83521}), 17, 2}));
  CHECK(trace_of_power(P({1, -5, 6}), 2) == 13);
}

TEST_CASE("Tate roots") {
  const TateCount c = count_tate_roots({P({1, -17}) * P({1, -17}) * P({1, 17}), 17, 2});
  CHECK(c.count == 3);
  CHECK(c.stabilizing_degree == 2);
  CHECK(count_tate_roots({P({1, 17, 136, 4913, 83521}), 17, 2}).count == 0);
  CHECK(cyclotomic(6) == P({1, -1, 1}));
  CHECK(parity_check(18, 22));
  CHECK(!parity_check(17, 22));
  CHECK(parity_check(22, 22));

  const WeilFactor ext = extend_base_field({power(P({1, -17}), 17), 17, 2}, 6);
  CHECK(ext.q == ipow(17, 6));
  CHECK(ext.poly == power(P({1, -24137569}), 17));
  CHECK_THROWS(artin_tate_square_class({power(P({1, -289}), 22), 289, 2}, 22));
}

TEST_CASE("Picard reports and the comparison rule") {
  const PicardReport r17 = picard_report(example_k3(), 17);
  CHECK(r17.rho_bar == 18);
  CHECK(r17.tate_roots_in_complement == 0);
  CHECK(r17.parity_ok);
  CHECK(r17.extension_degree % 2 == 0);
  REQUIRE(r17.square_class);

  PicardReport same = r17;
  same.p = 19;
  CHECK(van_luijk_compare(r17, same).bound == 18);
  CHECK(van_luijk_compare(r17, same).verdict == "classes agree");
  PicardReport other = same;
  other.square_class = *r17.square_class * SquareClass{1, {3}};
  CHECK(van_luijk_compare(r17, other).bound == 17);
  PicardReport open = same;
  open.square_class.reset();
  open.unresolved = "timeout";
  const Comparison c = van_luijk_compare(r17, open);
  CHECK(c.bound == 18);
  CHECK(!c.warnings.empty());

  CHECK_THROWS_AS(certify_rank(auxiliary_E_prime_c(2), 17, 19), BadParameters);
}
