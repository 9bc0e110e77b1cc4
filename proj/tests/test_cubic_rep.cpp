/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include "jpcf/convergents.hpp"
#include "jpcf/cubic_rep.hpp"
#include "test_support.hpp"

using namespace jpcf;
using namespace jpcf::testing;

namespace {

CubicSpec spec(long p, long q, long r, long z) { return CubicSpec{Integer(p), Integer(q), Integer(r), Integer(z)}; }

std::vector<Rational> rats(std::initializer_list<Rational> v) { return v; }

// Target pair (r / alpha, alpha) built from a fresh field.
std::array<FieldElement, 2> target_of(const CubicSpec& s) {
  const auto f = NumberField::make(AlgebraicReal::largest_real_root(s.minpoly()));
  const auto alpha = FieldElement::generator(f);
  // r / alpha = (alpha^2 - p alpha - q) since alpha^3 - p alpha^2 - q alpha = r.
  const FieldElement r_over_alpha = alpha * alpha - alpha * Rational(s.p) - Rational(s.q);
  return {r_over_alpha, alpha};
}

// Rational-root test by the rational root theorem on a monic cubic.
bool has_integer_root(const CubicSpec& s) {
  const long r = s.r.to_long();
  if (r == 0) return true;
  for (long d = 1; d <= std::abs(r); ++d) {
    if (r % d != 0) continue;
    for (long x : {d, -d}) {
      if (x * x * x - s.p.to_long() * x * x - s.q.to_long() * x - r == 0) return true;
    }
  }
  return false;
}

const std::vector<CubicSpec>& convergent_specs() {
  static const std::vector<CubicSpec> specs{spec(0, 0, 2, 1), spec(0, 0, 3, 1), spec(1, 1, 1, 0),
                                            spec(0, 0, 2, 2)};
  return specs;
}

}  // namespace

TEST_CASE("N matrix and invariants") {
  const auto n = build_n_matrix(spec(0, 0, 2, 1));
  IntegerMatrix expected(3, 3);
  expected << 1, 2, 0,
              0, 1, 2,
              1, 0, 1;
  CHECK(n.n == expected);
  CHECK(n.trace == Integer(3));
  CHECK(n.det == Integer(5));
  CHECK(n.second_invariant == Integer(3));

  const auto t = build_n_matrix(spec(1, 1, 1, 0));
  IntegerMatrix trib(3, 3);
  trib << 0, 1, 1,
          0, 1, 2,
          1, 1, 2;
  CHECK(t.n == trib);
  CHECK(t.trace == Integer(3));
  CHECK(t.det == Integer(1));
  CHECK(t.second_invariant == Integer(-1));
}

TEST_CASE("representation examples") {
  const auto rep = build_representation(spec(0, 0, 2, 1));
  CHECK(rep.pre[0] == rats({q(1), q(1)}));
  CHECK(rep.period[0] == rats({q(6, 5), q(3), q(3, 2)}));
  CHECK(rep.pre[1] == rats({q(0), q(-1, 2)}));
  CHECK(rep.period[1] == rats({q(-3, 5), q(-6, 5), q(-3, 2)}));

  const auto trib = build_representation(spec(1, 1, 1, 0));
  CHECK(trib.pre[0] == rats({q(0), q(1)}));
  CHECK(trib.pre[1].front() == q(1));

  const auto s = rep.stream(7);
  CHECK(s[5] == rats({q(6, 5), q(-3, 5)}));
  CHECK(s[6] == rats({q(3), q(-6, 5)}));
}

TEST_CASE("degenerate specs") {
  // pq + r = 0 forces x^3 - p x^2 - q x + pq = (x - p)(x^2 - q).
  CHECK_THROWS_AS(build_representation(spec(2, 3, -6, 1)), DegenerateSpec);
  CHECK_THROWS_AS(build_representation(spec(0, 0, 8, 1)), DegenerateSpec);
  CHECK_THROWS_AS(spec(1, 0, 0, 0).validate(), DegenerateSpec);

}

TEST_CASE("N is similar in spectrum to z I + C^2") {
  // The eigenvalues of N are z + alpha_i^2 over the roots of the cubic, so
  // det(N) = 0 would give alpha^2 = -z and a factor of degree <= 2. An
  // irreducible cubic therefore never has a singular N.
  int irreducible = 0;
  for (long p = -3; p <= 3; ++p)
    for (long q = -3; q <= 3; ++q)
      for (long r = -5; r <= 5; ++r)
        for (long z = -4; z <= 4; ++z) {
          const auto s = spec(p, q, r, z);
          const auto nm = build_n_matrix(s);
          const IntegerMatrix c = companion_matrix(to_rational(s.minpoly())).unaryExpr(
              [](const Rational& x) { return x.num(); });
          const IntegerMatrix shifted = IntegerMatrix::Identity(3, 3) * Integer(z) + c * c;
          CHECK(char_poly(nm.n) == char_poly(shifted));
          CHECK(nm.det == Integer(z * z * z + (p * p + 2 * q) * z * z + (q * q - 2 * p * r) * z + r * r));
          if (has_integer_root(s)) continue;
          ++irreducible;
          CHECK_FALSE(nm.det.is_zero());
        }
  CHECK(irreducible > 1000);
}

TEST_CASE("irreducibility check agrees with the rational root theorem") {
  for (long p = -3; p <= 3; ++p)
    for (long q = -3; q <= 3; ++q)
      for (long r = -4; r <= 4; ++r) {
        const auto s = spec(p, q, r, 1);
        CHECK(has_rational_root(s.minpoly()) == has_integer_root(s));
      }
}

TEST_CASE("quotients match an independent evaluation of the formulas") {
  Generator gen(61);
  int checked = 0;
  while (checked < 50) {
    const auto s = spec(gen.uniform(-4, 4), gen.uniform(-4, 4), gen.uniform(-6, 6), gen.uniform(-5, 5));
    if (has_integer_root(s)) continue;
    const auto nm = build_n_matrix(s);
    if (nm.det.is_zero()) continue;
    ++checked;
    // Invariants read back from the characteristic polynomial.
    const auto cp = char_poly(nm.n);
    CHECK(cp == IntegerPolynomial{-nm.det, nm.second_invariant, -nm.trace, Integer(1)});
    const Rational tr(-cp[2]), i1(cp[1]), det(-cp[0]);
    const Rational p(s.p), q(s.q), r(s.r), z(s.z);
    const Rational k = p * q + r;
    const auto rep = build_representation(s);
    CHECK(rep.pre[0] == rats({z, (z + z + p * p + q) / k}));
    CHECK(rep.period[0] == rats({k * tr / det, tr, tr / k}));
    CHECK(rep.pre[1] == rats({p, (p * r - z * z - q * z - p * p * z) / k}));
    CHECK(rep.period[1] == rats({-i1 / det, -k * i1 / det, -i1 / k}));
  }
}

TEST_CASE("evaluate_representation") {
  const auto s = spec(0, 0, 2, 1);
  const auto rep = build_representation(s);
  CHECK(evaluate_representation(rep, 0) == std::array<Rational, 2>{q(1), q(0)});

  // The same convergent from a longer unrolled stream.
  const auto longer = ConvergentTable<Rational>::from_quotients(rep.stream(70));
  const auto c = convergent(longer, 40);
  const auto c40 = evaluate_representation(rep, 40);
  CHECK(c40 == std::array<Rational, 2>{c[0], c[1]});

  const auto target = target_of(s);
  CHECK(max_error_below(c40, target, q(1, 1000000)));

  // The target really is (cbrt4, cbrt2): cube each coordinate.
  const auto cube = [](const FieldElement& x) { return x * x * x; };
  CHECK(cube(target[0]) == FieldElement(target[0].field(), q(4)));
  CHECK(cube(target[1]) == FieldElement(target[1].field(), q(2)));
}

TEST_CASE("representation convergents approach (r / alpha, alpha)") {
  for (const auto& s : convergent_specs()) {
    const auto rep = build_representation(s);
    const auto target = target_of(s);
    const auto c10 = evaluate_representation(rep, 10);
    const auto c40 = evaluate_representation(rep, 40);
    CHECK(max_error_smaller(c40, c10, target));
    CHECK_FALSE(max_error_smaller(c10, c40, target));
    CHECK(max_error_below(c40, target, q(1, 1000000)));
  }
}

TEST_CASE("comparison with the Jacobi-Perron expansion") {
  const auto report = compare_with_jacobi(spec(0, 0, 2, 1), 30, q(1, 1000000000) * q(1, 1000000000));
  CHECK(report.comparable);
  REQUIRE(report.rows.size() == 31);
  const auto& last = report.rows.back();
  REQUIRE(last.rep);
  REQUIRE(last.jacobi);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(last.rep->error[i].hi < q(1, 10000));
    CHECK(last.jacobi->error[i].hi < q(1, 10000));
    CHECK(last.rep->error[i].lo.sign() >= 0);
  }
  CHECK(report.target[1] == FieldElement::generator(report.target[1].field()));
  CHECK(report.rep_zero_denominators.empty());
  CHECK_THROWS_AS(compare_with_jacobi(spec(0, 0, 2, 1), 0, q(1, 1000)), std::invalid_argument);
}

TEST_CASE("recurrences on representation convergents") {
  const auto report = compare_with_jacobi(spec(0, 0, 2, 1), 40, q(1, 1000000));
  CHECK(report.fit_max_order == 12);
  REQUIRE(report.rep_fits.size() == 3);
  for (const auto& fit : report.rep_fits) {
    REQUIRE(fit);
    CHECK(fit->order() <= 9);
  }
  REQUIRE(report.jacobi_fits.size() == 3);
}

TEST_CASE("rational targets are not comparable") {
  const auto f = NumberField::rationals();
  const std::array<FieldElement, 2> target{FieldElement(f, q(7, 3)), FieldElement(f, q(5, 2))};
  const auto report = compare_representation(target, build_representation(spec(0, 0, 2, 1)), 10, q(1, 1000));
  CHECK_FALSE(report.comparable);
  CHECK(std::holds_alternative<Terminated>(report.jacobi.status));
  CHECK_FALSE(report.note.empty());
  CHECK(report.rows.size() == 11);
  CHECK(report.rows[5].jacobi == std::nullopt);
}

TEST_CASE("zero denominators are recorded") {
  TernaryRep rep;
  rep.pre = {rats({q(1), q(0)}), rats({q(1), q(1)})};
  rep.period = {rats({q(1)}), rats({q(1)})};
  // A_1^(3) = a_1^(1) A_0^(3) = 0.
  CHECK_THROWS_AS(evaluate_representation(rep, 1), ZeroDenominator);
  const auto report = compare_representation(target_of(spec(0, 0, 2, 1)), rep, 6, q(1, 1000));
  CHECK(report.rep_zero_denominators == std::vector<std::size_t>{1});
  CHECK_FALSE(report.rows[1].rep.has_value());
  CHECK(report.rows[2].rep.has_value());
}
