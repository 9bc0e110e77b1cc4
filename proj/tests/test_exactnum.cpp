/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include "jpcf/algebraic.hpp"
#include "jpcf/lrs.hpp"
#include "test_support.hpp"

using namespace jpcf;
using namespace jpcf::testing;

TEST_CASE("rational canonical form") {
  CHECK(q("6/4") == q(3, 2));
  CHECK(q("6/4").num() == Integer(3));
  CHECK(q("6/4").den() == Integer(2));
  CHECK(q("-0/5").str() == "0");
  CHECK(q("0").den() == Integer(1));
}

TEST_CASE("rational parse errors") {
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
}

TEST_CASE("rational floor uses floor semantics") {
  CHECK(q("-7/2").floor() == Integer(-4));
  CHECK(q("7/2").floor() == Integer(3));
  CHECK(q("-4").floor() == Integer(-4));
  CHECK(q("-7/2").ceil() == Integer(-3));
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(q(1, 3), 5) == "3.3333e-1");
  CHECK(to_decimal(q(-25, 2), 3) == "-1.25e1");
  CHECK(to_decimal(q(1, 1000000), 2) == "1.0e-6");
  CHECK(to_decimal(q(0), 4) == "0");
}

TEST_CASE("exact determinant") {
  IntegerMatrix a(3, 3);
  a << 1, 2, 0, 0, 1, 2, 1, 0, 1;
  CHECK(determinant(a) == Integer(5));
  IntegerMatrix pivot(2, 2);
  pivot << 0, 1, 1, 0;
  CHECK(determinant(pivot) == Integer(-1));
  RationalMatrix r(2, 2);
  r << q(1, 2), q(1, 3), q(1, 4), q(1, 5);
  CHECK(determinant(r) == q(1, 10) - q(1, 12));
}

TEST_CASE("field_add") {
  const auto f = cbrt2_field();
  const auto theta = FieldElement::generator(f);
  CHECK((theta + -theta).is_zero());
  CHECK(elem(f, {1, 1}) + elem(f, {2, 0, 1}) == elem(f, {3, 1, 1}));
  CHECK(elem(f, {0, 0, 1}) + elem(f, {0, 0, 1}) == elem(f, {0, 0, 2}));
}

TEST_CASE("field_mul") {
  const auto f = cbrt2_field();
  const auto theta = FieldElement::generator(f);
  CHECK(field_mul(theta, elem(f, {0, 0, 1})) == elem(f, {2}));
  const auto x = elem(f, {q(3, 7), -2, 5});
  CHECK(x * elem(f, {1}) == x);
  CHECK(elem(f, {1, 1}) * elem(f, {1, -1}) == elem(f, {1, 0, -1}));
}

TEST_CASE("field_inv") {
  const auto f = cbrt2_field();
  const auto theta = FieldElement::generator(f);
  // Oracles: multiply back and compare with 1.
  const auto inv_theta = field_inv(theta);
  CHECK(inv_theta == elem(f, {0, 0, q(1, 2)}));
  CHECK(theta * inv_theta == elem(f, {1}));
  CHECK(field_inv(elem(f, {2})) == elem(f, {q(1, 2)}));
  const auto inv = field_inv(theta - q(1));
  CHECK(inv == elem(f, {1, 1, 1}));
  CHECK((theta - q(1)) * inv == elem(f, {1}));
  CHECK_THROWS_AS(field_inv(elem(f, {})), DivisionByZero);
}

TEST_CASE("field mismatch is reported") {
  const auto a = FieldElement::generator(cbrt2_field());
  const auto b = FieldElement::generator(sqrt2_field());
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS((void)(a == b), FieldMismatch);
  // Separately constructed descriptions of one root are the same field.
  const auto c = FieldElement::generator(field({-2, 0, 0, 1}, 0, 3));
  CHECK(a == c);
}

TEST_CASE("sign") {
  const auto f = cbrt2_field();
  const auto theta = FieldElement::generator(f);
  CHECK(sign(elem(f, {})) == 0);
  CHECK(sign(theta - q(1)) == 1);
  // cbrt4 ~ 1.587 < 2 cbrt2 ~ 2.520
  CHECK(sign(elem(f, {0, -2, 1})) == -1);
  // A value very close to zero: cbrt2 - 1259921/1000000 ~ 4.99e-8.
  CHECK(sign(theta - q(1259921, 1000000)) == 1);
  CHECK(sign(theta - q(1259922, 1000000)) == -1);
}

TEST_CASE("floor") {
  const auto f = cbrt2_field();
  const auto theta = FieldElement::generator(f);
  CHECK(floor(theta) == Integer(1));
  CHECK(floor(-theta) == Integer(-2));
  CHECK(floor(elem(f, {q(-7, 2)})) == Integer(-4));
  CHECK(floor(elem(f, {3})) == Integer(3));
  CHECK(floor(theta * q(1000000)) == Integer(1259921));
}

TEST_CASE("refine") {
  const AlgebraicReal cbrt2(IntegerPolynomial{-2, 0, 0, 1}, q(1), q(2));
  const auto r = refine(cbrt2, q(1, 4));
  CHECK(r.interval().width() <= q(1, 4));
  CHECK(cbrt2.interval().contains(r.interval().lo));
  CHECK(cbrt2.interval().contains(r.interval().hi));
  CHECK(refine(cbrt2, q(5)).interval() == cbrt2.interval());

  // Oracle: lo^3 < 2 < hi^3 by direct cubing, and the known decimal 1.2599210498948...
  const auto fine = refine(cbrt2, q(1, 1000000));
  const auto& iv = fine.interval();
  CHECK(iv.width() <= q(1, 1000000));
  CHECK(iv.lo * iv.lo * iv.lo < q(2));
  CHECK(iv.hi * iv.hi * iv.hi > q(2));
  CHECK(iv.lo < q("125992105/100000000"));
  CHECK(iv.hi > q("125992104/100000000"));
  CHECK_THROWS_AS(refine(cbrt2, q(0)), std::invalid_argument);
}

TEST_CASE("algebraic real validation") {
  // Two roots of x^2 - 2 in (-2, 2).
  CHECK_THROWS_AS(AlgebraicReal(IntegerPolynomial{-2, 0, 1}, q(-2), q(2)), std::invalid_argument);
  // Endpoint is a root.
  CHECK_THROWS_AS(AlgebraicReal(IntegerPolynomial{-4, 0, 1}, q(1), q(2)), std::invalid_argument);
  // Reducible cubic: (x - 1)(x^2 + 1) has the real root 1 only, isolated by (1/2, 2).
  CHECK_THROWS_AS(AlgebraicReal(IntegerPolynomial{-1, 1, -1, 1}, q(1, 2), q(2)), std::invalid_argument);
  // Reducible quadratic with rational roots 1/2 and 3.
  CHECK_THROWS_AS(AlgebraicReal(IntegerPolynomial{3, -7, 2}, q(2), q(4)), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraicReal(IntegerPolynomial{-2, 0, 1}, q(2), q(1)), std::invalid_argument);

  const AlgebraicReal quartic(IntegerPolynomial{-2, 0, 0, 0, 1}, q(1), q(2));
  CHECK_FALSE(quartic.irreducibility_verified());
  CHECK(AlgebraicReal(IntegerPolynomial{-2, 0, 1}, q(1), q(2)).irreducibility_verified());
}

TEST_CASE("root isolation") {
  // (x^2 - 2)(x - 3)(2x + 1)
  const IntegerPolynomial p = IntegerPolynomial{-2, 0, 1} * IntegerPolynomial{-3, 1} * IntegerPolynomial{1, 2};
  const auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 4);
  CHECK(roots[0].lo < q(-1414, 1000));
  CHECK(roots[0].hi > q(-1415, 1000));
  CHECK(roots[1].contains(q(-1, 2)));
  CHECK(roots[3].contains(q(3)));
  for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].hi <= roots[i].lo);
  CHECK(has_rational_root(p));
  CHECK_FALSE(has_rational_root(IntegerPolynomial{-2, 0, 0, 1}));
  CHECK(has_rational_root(IntegerPolynomial{-1, 0, 0, 8}));  // 8x^3 - 1, root 1/2
  CHECK(has_rational_root(IntegerPolynomial{1, 4, 4, 3}));  // (3x + 1)(x^2 + x + 1)
}

TEST_CASE("largest real root") {
  const auto tribonacci = AlgebraicReal::largest_real_root(IntegerPolynomial{-1, -1, -1, 1});
  CHECK(tribonacci.interval().lo < q(1840, 1000));
  CHECK(tribonacci.interval().hi > q(1839, 1000));
  // x^3 - 3x + 1 has three real roots; the largest is 2 cos(2 pi / 9) ~ 1.532.
  const auto top = AlgebraicReal::largest_real_root(IntegerPolynomial{1, -3, 0, 1}).refine(q(1, 1000));
  CHECK(top.interval().lo > q(1531, 1000));
  CHECK(top.interval().hi < q(1534, 1000));
  CHECK_THROWS_AS(AlgebraicReal::largest_real_root(IntegerPolynomial{1, 0, 1}), std::invalid_argument);
}

TEST_CASE("rational generators") {
  const auto f = NumberField::make(AlgebraicReal::rational(q(7, 3)));
  const auto g = FieldElement::generator(f);
  CHECK(g.is_rational());
  CHECK(g.rational_value() == q(7, 3));
  CHECK(floor(g) == Integer(2));
  CHECK(field_inv(g) == elem(f, {q(3, 7)}));
}

TEST_CASE("field axioms on random elements") {
  Generator gen(20240611);
  const std::vector<FieldPtr> fields{cbrt2_field(), sqrt2_field(), golden_field(),
                                     field({-1, -1, -1, 1}, 1, 2), field({1, -3, 0, 1}, 1, 2),
                                     NumberField::rationals()};
  for (const auto& f : fields) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto x = gen.element(f), y = gen.element(f), z = gen.element(f);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * y == y * x);
      CHECK(x + y == y + x);
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(((x - y).is_zero()) == (x.coords() == y.coords()));
      const auto w = gen.nonzero_element(f);
      CHECK(w * field_inv(w) == FieldElement(f, q(1)));
      CHECK(sign(w) * sign(field_inv(w)) == 1);
    }
  }
}

TEST_CASE("floor contract on random elements") {
  Generator gen(77);
  const std::vector<FieldPtr> fields{cbrt2_field(), sqrt2_field(), field({1, -3, 0, 1}, 1, 2)};
  for (const auto& f : fields) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto x = gen.element(f);
      const Integer k = floor(x);
      CHECK(sign(x - Rational(k)) >= 0);
      CHECK(sign(x - Rational(k + Integer(1))) < 0);
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  const RationalPolynomial a{q(-1), q(0), q(1)};  // x^2 - 1
  const RationalPolynomial b{q(1), q(1)};         // x + 1
  const auto [quot, rem] = divmod(a, b);
  CHECK(quot == RationalPolynomial{q(-1), q(1)});
  CHECK(rem.is_zero());
  CHECK(a.str() == "x^2 - 1");
  CHECK(IntegerPolynomial{-1, -1, -1, 1}.str() == "x^3 - x^2 - x - 1");
  CHECK(extended_gcd(a, RationalPolynomial{q(-1), q(1)}).gcd == RationalPolynomial{q(-1), q(1)});
  CHECK(primitive_part(RationalPolynomial{q(1, 2), q(-3, 4)}) == IntegerPolynomial{-2, 3});
  CHECK(squarefree_part(a * a) == make_monic(a));
}

TEST_CASE("a reducible defining polynomial is reported instead of refining forever") {
  // (x^2 - 2)(x^2 - 3) with the root sqrt 2 isolated; degree 4 is not checked up front.
  const auto f = NumberField::make(AlgebraicReal(IntegerPolynomial{6, 0, -5, 0, 1}, q(1), q(3, 2)));
  const auto theta = FieldElement::generator(f);
  CHECK(sign(theta) == 1);
  CHECK(floor(theta) == Integer(1));
  CHECK_THROWS_AS(sign(theta * theta - q(2)), std::logic_error);
  CHECK_THROWS_AS(floor(theta * theta + q(1)), std::logic_error);
}
