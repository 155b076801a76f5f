#include <doctest.h>

#include "ellrank/errors.hpp"
#include "ellrank/kodaira.hpp"
#include "ellrank/weierstrass.hpp"

using namespace ellrank;

namespace {
const IntPoly t = IntPoly::x();
IntPoly I(long n) { return IntPoly(Integer(n)); }

WeierstrassModel rank15_model() {
  return WeierstrassModel(I(2) * (power(t, 8) + I(14) * power(t, 4) + 1),
                          I(4) * t * t * (power(t, 8) + I(6) * power(t, 4) + 1));
}
}  // namespace

TEST_CASE("invariants") {
  const Invariants j0 = invariants(WeierstrassModel(IntPoly(), 1));
  CHECK(j0.delta == I(-432));
  CHECK(j0.j_num.is_zero());
  const Invariants j1728 = invariants(WeierstrassModel(-1, IntPoly()));
  CHECK(j1728.c6.is_zero());
  CHECK(j1728.j_num == I(1728) * j1728.j_den);

  const WeierstrassModel aux = auxiliary_E_prime_c(2);
  const Place zero = Place::finite(t);
  const LocalValuations v = local_valuations(aux, zero);
  CHECK(v.c4 == 3);
  CHECK(v.delta == 9);
  CHECK_THROWS_AS(WeierstrassModel(IntPoly(), IntPoly()), DegenerateModel);
}

TEST_CASE("valuations") {
  CHECK(valuation((t - 1) * (t - 1), t + 1, Place::finite(t - 1)) == 2);
  CHECK(valuation(power(t, 3), Place::infinity()) == -3);
  const WeierstrassModel k3 = rank15_model();
  CHECK(invariants(k3).delta.degree() <= 24);
  CHECK(local_valuations(k3, Place::infinity()).delta == 24 - invariants(k3).delta.degree());
}

TEST_CASE("quadratic twists") {
  const WeierstrassModel aux = auxiliary_E_prime_c(2);
  CHECK(quadratic_twist(aux, 1) == aux);
  const IntPoly f = (t - 5) * (t + 3);
  CHECK(minimalize(quadratic_twist(quadratic_twist(aux, f), f)).first == aux);
  CHECK(invariants(quadratic_twist(aux, f)).delta == power(f, 6) * invariants(aux).delta);
  CHECK_THROWS_AS(quadratic_twist(aux, IntPoly()), BadParameters);

  const WeierstrassModel tw = quadratic_twist(aux, f);
  CHECK(classify_place(tw, Place::finite(t - 5)).type == KodairaType::I_star_n(0));
  CHECK(classify_place(tw, Place::finite(t + 3)).type == KodairaType::I_star_n(0));
  CHECK(twist_by_points(aux, {Place::finite(t - 5), Place::finite(t + 3)}) == minimalize(tw).first);
  CHECK(twist_by_points(aux, {Place::finite(t), Place::infinity()}) == minimalize(quadratic_twist(aux, t)).first);
}

TEST_CASE("base change and minimalization") {
  const WeierstrassModel m(t, IntPoly());
  CHECK(base_change(m, {t, 1}) == m);
  CHECK(base_change(m, {t * t, 1}) == WeierstrassModel(t * t, IntPoly()));

  const WeierstrassModel small(t + 1, t * t + 3);
  const auto [mm, log] = minimalize(WeierstrassModel(power(t, 4) * (t + 1), power(t, 6) * (t * t + 3)));
  CHECK(mm == small);
  REQUIRE(log.size() == 1);
  CHECK(log[0].place == Place::finite(t));
  CHECK(log[0].count == 1);
  CHECK(minimalize(small).second.empty());
}

TEST_CASE("isomorphism witnesses") {
  const WeierstrassModel aux = auxiliary_E_prime_c(3);
  const auto w = is_isomorphic(aux, quadratic_twist(aux, 5));
  REQUIRE(w);
  CHECK(w->u_squared == 5);
  const auto w2 = is_isomorphic(aux, WeierstrassModel(I(81) * aux.A(), I(729) * aux.B()));
  REQUIRE(w2);
  REQUIRE(w2->u);
  CHECK(*w2->u == 3);

  // E'_c and E'_{-c} after t -> -t
  const WeierstrassModel flipped = scale_parameter(auxiliary_E_prime_c(-2), -1);
  CHECK(is_isomorphic(auxiliary_E_prime_c(2), flipped));
}

TEST_CASE("the family E_abc") {
  const WeierstrassModel e = family_E_abc(2, 4, 2);
  CHECK(e.A() == I(2048) * (I(4) * power(t, 8) + I(56) * power(t, 4) + 4));
  CHECK(e.B() == I(524288) * t * t * (I(2) * power(t, 8) + I(12) * power(t, 4) + 2));
  const auto w = is_isomorphic(rank15_model(), minimalize(e).first);
  REQUIRE(w);
  REQUIRE(w->u);
  CHECK(*w->u == 8);
  CHECK(reduce_constants(e).second == 8);
  CHECK(reduce_constants(e).first == rank15_model());
  CHECK_THROWS_AS(family_E_abc(1, 1, 1), BadParameters);

  const FiberConfiguration generic = fiber_configuration(family_E_abc(3, 5, 7));
  CHECK(generic.kind == SurfaceKind::k3);
  CHECK(summary(generic) == "24 I1");
}

TEST_CASE("the auxiliary surface and the map f_ab") {
  CHECK(auxiliary_E_prime_c(2) == WeierstrassModel(power(t, 4) - I(2) * power(t, 3), power(t, 5)));
  const RationalFunction f = f_ab_map(2, 4);
  CHECK(f.num(Rational(0)) == 0);
  // f = -16 s / (s^2 + 6 s + 1); f' vanishes at s = 1 and s = -1
  CHECK(evaluate(f.num, 1) / evaluate(f.den, 1) == -2);
  CHECK(evaluate(f.num, -1) / evaluate(f.den, -1) == -4);
  CHECK(critical_values(f) == std::vector<Rational>{-4, -2});
  const Integer disc = f.den[1] * f.den[1] - 4 * f.den[2] * f.den[0];
  CHECK(disc == 16 * 2 * 4);
}

TEST_CASE("recognizers") {
  const auto fam = recognize_family_member(rank15_model());
  REQUIRE(fam);
  CHECK(is_isomorphic(family_E_abc(fam->a, fam->b, fam->c), rank15_model()));

  const WeierstrassModel x(-(power(I(2) * t - 1, 3) * power(I(4) * t - 1, 2)),
                           t * power(I(2) * t - 1, 3) * power(I(4) * t - 1, 3));
  const auto tw = recognize_twisted_auxiliary(x);
  REQUIRE(tw);
  CHECK(!recognize_family_member(x));
}
