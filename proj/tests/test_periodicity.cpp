/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include "jpcf/periodicity.hpp"
#include "test_support.hpp"

using namespace jpcf;
using namespace jpcf::testing;

namespace {

using Axes = std::vector<std::vector<Integer>>;

PeriodicSpec random_spec(Generator& g, std::size_t max_m = 3) {
  const std::size_t m = static_cast<std::size_t>(g.uniform(1, static_cast<long>(max_m)));
  PeriodicSpec s;
  for (std::size_t i = 0; i < m; ++i) {
    const long floor_value = i == 0 ? 1 : 0;
    std::vector<Integer> a, b;
    for (long k = g.uniform(0, 3); k > 0; --k) a.emplace_back(g.uniform(floor_value, 5));
    for (long k = g.uniform(1, 3); k > 0; --k) b.emplace_back(g.uniform(floor_value, 5));
    s.pre.push_back(std::move(a));
    s.period.push_back(std::move(b));
  }
  return s;
}

long sign_power(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

// det(tI - M) straight from the determinant, independent of char_poly.
Integer det_shift(const IntegerMatrix& m, long t) {
  return determinant(IntegerMatrix(IntegerMatrix::Identity(m.rows(), m.cols()) * Integer(t) - m));
}

// p(x^u) * x^shift
RationalPolynomial substitute_power(const IntegerPolynomial& p, std::size_t u, std::size_t shift) {
  std::vector<Rational> c(static_cast<std::size_t>(p.degree()) * u + shift + 1, Rational(0));
  for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(k) * u + shift] = Rational(p[k]);
  return RationalPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("PeriodicSpec basics") {
  const PeriodicSpec s{Axes{{1}, {}}, Axes{{2, 3}, {4}}};
  CHECK_NOTHROW(s.validate());
  CHECK(s.max_preperiod() == 1);
  CHECK(s.quotient(0, 1) == Integer(1));
  CHECK(s.quotient(3, 1) == Integer(2));
  CHECK(s.quotient(4, 2) == Integer(4));
  CHECK(s.stream(3) == std::vector<QuotientTuple>{{1, 4}, {2, 4}, {3, 4}});
  CHECK(s.jp_admissible());
  CHECK_FALSE((PeriodicSpec{Axes{{}}, Axes{{0}}}).jp_admissible());
  CHECK_THROWS_AS((PeriodicSpec{Axes{{1}}, Axes{{}}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((PeriodicSpec{Axes{}, Axes{}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((PeriodicSpec{Axes{{}, {}}, Axes{{1}}}).validate(), std::invalid_argument);
}

TEST_CASE("cycle data for all-ones, m = 2") {
  const auto cd = build_cycle_data(PeriodicSpec{Axes{{}, {}}, Axes{{1}, {1}}});
  CHECK(cd.u == 1);
  REQUIRE(cd.matrices.size() == 1);
  CHECK(cd.shared_char_poly == IntegerPolynomial{-1, -1, -1, 1});
  CHECK(cd.shared_char_poly.str() == "x^3 - x^2 - x - 1");
  // det is (-1)^(m u) = 1; the sign (-1)^((m-1)u) = -1 does not hold.
  CHECK(determinant(cd.matrices[0]) == Integer(1));
  CHECK(determinant(cd.matrices[0]) != Integer(sign_power((2 - 1) * 1)));
}

TEST_CASE("cycle data for sqrt 2") {
  const auto cd = build_cycle_data(PeriodicSpec{Axes{{1}}, Axes{{2}}});
  IntegerMatrix expected(2, 2);
  expected << 2, 1,
              1, 0;
  CHECK(cd.matrices.front() == expected);
  CHECK(cd.shared_char_poly == IntegerPolynomial{-1, -2, 1});
  const auto r = derived_recurrence(cd);
  // Pell numbers: A_n^(2) = 1, 2, 5, 12, 29, ...
  CHECK(r[1].coeffs == std::vector<Rational>{q(2), q(1)});
  CHECK(r[1].offset == 1);
  CHECK(lrs_terms(r[1], 6) == std::vector<Rational>{q(1), q(2), q(5), q(12), q(29), q(70)});
}

TEST_CASE("cycle data, m = 1, period (1, 2)") {
  const auto cd = build_cycle_data(PeriodicSpec{Axes{{}}, Axes{{1, 2}}});
  CHECK(cd.u == 2);
  // S(1) S(2) = [[3, 1], [2, 1]] and S(2) S(1) = [[3, 2], [1, 1]]
  IntegerMatrix m0(2, 2), m1(2, 2);
  m0 << 3, 1,
        2, 1;
  m1 << 3, 2,
        1, 1;
  CHECK(cd.matrices[0] == m0);
  CHECK(cd.matrices[1] == m1);
  CHECK(cd.shared_char_poly == IntegerPolynomial{1, -4, 1});
}

TEST_CASE("cycle data with u = 6 and staggered preperiods") {
  const PeriodicSpec s{Axes{{2}, {0, 1, 1}}, Axes{{1, 3}, {2, 0, 1}}};
  const auto cd = build_cycle_data(s);
  CHECK(cd.u == 6);
  CHECK(cd.v == std::vector<std::size_t>{2, 0});
  CHECK(cd.matrices.size() == 6);
  CHECK(cd.shared_char_poly.degree() == 3);
  const auto report = verify_forward(s, 80);
  CHECK(report.passed());
  for (const auto& axis : report.axes) CHECK(axis.checked == 80 - 3 - 18 + 1);
}

TEST_CASE("forward direction on random periodic streams") {
  Generator gen(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto spec = random_spec(gen);
    const std::size_t m = spec.dim();
    const auto cd = build_cycle_data(spec);
    const std::size_t top = spec.max_preperiod();
    const std::size_t horizon = top + 3 * (m + 1) * cd.u + 5;

    for (const auto& mat : cd.matrices) {
      CHECK(mat.trace() == cd.matrices.front().trace());
      CHECK(determinant(mat) == Integer(sign_power(m * cd.u)));
      for (long t = -2; t <= 2; ++t) CHECK(cd.shared_char_poly(Integer(t)) == det_shift(mat, t));
    }

    const auto report = verify_forward(spec, horizon);
    CHECK(report.passed());
    CHECK(report.axes.size() == m + 1);

    const auto table = ConvergentTable<Integer>::from_quotients(spec.stream(horizon + 1));
    const auto recurrences = derived_recurrence(cd);
    for (std::size_t axis = 1; axis <= m + 1; ++axis) {
      const auto ints = table.sequence(axis);
      const std::vector<Rational> seq(ints.begin(), ints.end());
      CHECK(recurrences[axis - 1].generates(seq));
    }
  }
}

TEST_CASE("minimal recurrences divide the derived relation") {
  Generator gen(53);
  for (int trial = 0; trial < 30; ++trial) {
    const auto spec = random_spec(gen, 2);
    const std::size_t m = spec.dim();
    const auto cd = build_cycle_data(spec);
    const std::size_t top = spec.max_preperiod();
    const std::size_t max_order = top + (m + 1) * cd.u;
    const auto table = ConvergentTable<Integer>::from_quotients(spec.stream(2 * max_order + 10));
    const auto annihilator = substitute_power(cd.shared_char_poly, cd.u, top);
    for (std::size_t axis = 1; axis <= m + 1; ++axis) {
      const auto ints = table.sequence(axis);
      const std::vector<Rational> seq(ints.begin(), ints.end());
      const auto fit = fit_minimal(seq, max_order);
      REQUIRE(fit);
      const auto shifted = RationalPolynomial::monomial(q(1), static_cast<int>(fit->offset)) * fit->char_poly();
      CHECK(divides(shifted, annihilator));
    }
  }
}

TEST_CASE("verify_forward rejects a short horizon") {
  const PeriodicSpec s{Axes{{1}}, Axes{{2}}};
  CHECK_THROWS_AS(verify_forward(s, 6), std::invalid_argument);
  CHECK_NOTHROW(verify_forward(s, 7));
}

TEST_CASE("converse direction on periodic expansions") {
  const auto phi = expand(InputTuple({FieldElement::generator(golden_field())}), 50);
  const auto root2 = expand(InputTuple({FieldElement::generator(sqrt2_field())}), 50);
  const auto theta = FieldElement::generator(cbrt2_field());
  const auto cubic = expand(InputTuple({theta, theta * theta}), 50);
  for (const auto* e : {&phi, &root2, &cubic}) {
    const auto table = ConvergentTable<Integer>::from_quotients(e->quotient_stream(40));
    const auto report = verify_converse(*e, table, 10);
    CHECK(report.terms == 40);
    CHECK(report.all_fit());
    CHECK(report.all_periodic());
    CHECK(report.consistent());
  }
  const auto table = ConvergentTable<Integer>::from_quotients(cubic.quotient_stream(40));
  const auto report = verify_converse(cubic, table, 10);
  CHECK(report.periodicity[0] == Periodicity{1, 2});
  // The Jacobi-Perron cycle of (cbrt2, cbrt4) has period 2 and m = 2, so the
  // derived relation has order 6; the minimal fits are no longer than that
  // plus the preperiod.
  for (const auto& fit : report.fits) CHECK(fit->offset + fit->order() <= 1 + 6);

  const auto short_table = ConvergentTable<Integer>::from_quotients(cubic.quotient_stream(20));
  CHECK_THROWS_AS(verify_converse(cubic, short_table, 10), InsufficientData);
}
