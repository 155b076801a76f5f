#include <doctest.h>

#include <set>

#include "ellrank/errors.hpp"
#include "ellrank/finite_field.hpp"

using namespace ellrank;

TEST_CASE("irreducible moduli") {
  CHECK(find_irreducible(17, 2) == PolyFp(17, {14, 0, 1}));  // x^2 - 3
  CHECK(find_irreducible(5, 1) == PolyFp::x(5));
  const PolyFp m = find_irreducible(19, 2);
  CHECK(m.degree() == 2);
  for (u64 r = 0; r < 19; ++r) CHECK(m(r) != 0);
  for (int k = 1; k <= 6; ++k) CHECK(is_irreducible(find_irreducible(7, k)));
}

TEST_CASE("prime field arithmetic") {
  CHECK(mod_mul(5, 7, 17) == 1);
  CHECK(mod_inv(5, 17) == 7);
  CHECK(legendre(2, 17) == 1);
  CHECK(legendre(2, 5) == -1);
  CHECK(legendre(0, 5) == 0);
}

TEST_CASE("extension field elements") {
  const FieldPtr F = FieldDescriptor::make(5, 2);
  std::set<u64> seen;
  int chi_sum = 0;
  for (const FieldElement& a : FieldRange(F)) {
    seen.insert(a.index());
    chi_sum += quadratic_character(a);
    CHECK(a.pow(25) == a);
    if (a.is_zero()) continue;
    CHECK(a.pow(24) == FieldElement::one(F));
    CHECK(a * a.inverse() == FieldElement::one(F));
    CHECK(quadratic_character(a * a) == 1);
  }
  CHECK(seen.size() == 25);
  CHECK(chi_sum == 0);
  CHECK(primitive_element(F).order() == 24);
  CHECK_THROWS(FieldElement::zero(F).inverse());
  CHECK(FieldRange(FieldDescriptor::make(17, 2)).size() == 289);
  CHECK(FieldRange(FieldDescriptor::make(19, 2)).size() == 361);
  CHECK_THROWS_AS(FieldRange(FieldDescriptor::make(17, 3), 1000), ResourceBound);
}

TEST_CASE("log tables agree with polynomial arithmetic") {
  const FieldPtr F = FieldDescriptor::make(7, 2);
  const LogTableField L(F);
  for (u64 i = 0; i < 49; ++i) {
    for (u64 j = 0; j < 49; j += 5) {
      const FieldElement a = FieldElement::from_index(F, i), b = FieldElement::from_index(F, j);
      CHECK(L.to_index(L.mul(L.element(i), L.element(j))) == (a * b).index());
      CHECK(L.to_index(L.add(L.element(i), L.element(j))) == (a + b).index());
    }
    CHECK(L.chi(L.element(i)) == quadratic_character(FieldElement::from_index(F, i)));
  }
}

TEST_CASE("factorization over F_p") {
  const auto f = factor_mod_p(PolyFp(17, {14, 0, 1}));
  REQUIRE(f.size() == 1);
  CHECK(f[0].first.degree() == 2);

  const auto g = factor_mod_p(PolyFp(5, {0, 4, 0, 1}));  // x^3 - x
  REQUIRE(g.size() == 3);
  CHECK(g[0].first == PolyFp(5, {0, 1}));
  CHECK(g[1].first == PolyFp(5, {1, 1}));
  CHECK(g[2].first == PolyFp(5, {4, 1}));

  // x^(5^4) - x: irreducible factors of every degree dividing 4
  std::vector<u64> c(626, 0);
  c[625] = 1;
  c[1] = 4;
  int total = 0;
  for (const auto& [h, e] : factor_mod_p(PolyFp(5, c))) {
    CHECK(4 % h.degree() == 0);
    CHECK(e == 1);
    total += h.degree();
  }
  CHECK(total == 625);
}
