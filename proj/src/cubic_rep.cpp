/* SPDX-License-Identifier: Apache-2.0 */

#include "jpcf/cubic_rep.hpp"

#include <algorithm>

#include "jpcf/convergents.hpp"

namespace jpcf {

IntegerPolynomial CubicSpec::minpoly() const { return IntegerPolynomial{-r, -q, -p, Integer(1)}; }

void CubicSpec::validate() const {
  if (has_rational_root(minpoly())) {
    throw DegenerateSpec("x^3 - px^2 - qx - r = " + minpoly().str() + " has a rational root");
  }
  if ((p * q + r).is_zero()) throw DegenerateSpec("pq + r = 0");
  if (build_n_matrix(*this).det.is_zero()) throw DegenerateSpec("det(N) = 0");
}

NMatrix build_n_matrix(const CubicSpec& s) {
  NMatrix out;
  out.n.resize(3, 3);
  out.n << s.z, s.r, s.p * s.r,
           Integer(0), s.q + s.z, s.p * s.q + s.r,
           Integer(1), s.p, s.p * s.p + s.q + s.z;
  const auto& n = out.n;
  out.trace = n.trace();
  out.det = determinant(n);
  out.second_invariant = (n(0, 0) * n(1, 1) - n(0, 1) * n(1, 0)) +
                         (n(0, 0) * n(2, 2) - n(0, 2) * n(2, 0)) +
                         (n(1, 1) * n(2, 2) - n(1, 2) * n(2, 1));
  return out;
}

std::vector<std::vector<Rational>> TernaryRep::stream(std::size_t length) const {
  std::vector<std::vector<Rational>> out;
  for (std::size_t n = 0; n < length; ++n) {
    std::vector<Rational> tuple;
    for (std::size_t axis = 0; axis < 2; ++axis) {
      const auto& a = pre[axis];
      const auto& b = period[axis];
      tuple.push_back(n < a.size() ? a[n] : b[(n - a.size()) % b.size()]);
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

TernaryRep build_representation(const CubicSpec& spec) {
  spec.validate();
  const NMatrix nm = build_n_matrix(spec);
  const Rational p(spec.p), q(spec.q), r(spec.r), z(spec.z);
  const Rational s = p * q + r;
  const Rational tr(nm.trace), det(nm.det), i1(nm.second_invariant);

  TernaryRep rep;
  rep.pre[0] = {z, (Rational(2) * z + p * p + q) / s};
  rep.period[0] = {s * tr / det, tr, tr / s};
  rep.pre[1] = {p, -(z * z + q * z + p * p * z - p * r) / s};
  rep.period[1] = {-i1 / det, -s * i1 / det, -i1 / s};
  return rep;
}

std::array<Rational, 2> evaluate_representation(const TernaryRep& rep, std::size_t n) {
  const auto table = ConvergentTable<Rational>::from_quotients(rep.stream(n + 1));
  const auto c = convergent(table, static_cast<long>(n));
  return {c[0], c[1]};
}

AlgebraicReal cubic_root(const CubicSpec& spec) { return AlgebraicReal::largest_real_root(spec.minpoly()); }

namespace {

FieldElement abs_difference(const Rational& a, const FieldElement& t) {
  FieldElement d = FieldElement(t.field(), a) - t;
  return sign(d) < 0 ? -d : d;
}

Interval abs_interval(const Interval& v) {
  if (v.lo.sign() >= 0) return v;
  if (v.hi.sign() <= 0) return {-v.hi, -v.lo};
  return {Rational(0), v.magnitude()};
}

template <typename Scalar>
ConvergentError convergent_error(const ConvergentTable<Scalar>& table, long n,
                                 const std::array<FieldElement, 2>& target, const Rational& precision) {
  const auto c = convergent(table, n);
  ConvergentError e{{c[0], c[1]}, {}};
  for (std::size_t i = 0; i < 2; ++i) {
    const FieldElement d = FieldElement(target[i].field(), c[i]) - target[i];
    e.error[i] = abs_interval(d.enclose(precision));
  }
  return e;
}

template <typename Scalar>
std::vector<std::optional<LinearRecurrence>> fit_axes(const ConvergentTable<Scalar>& table,
                                                      std::size_t max_order) {
  std::vector<std::optional<LinearRecurrence>> fits;
  for (std::size_t axis = 1; axis <= 3; ++axis) {
    const auto seq = table.sequence(axis);
    const std::vector<Rational> rat(seq.begin(), seq.end());
    fits.push_back(fit_minimal(rat, max_order));
  }
  return fits;
}

}  // namespace

ComparisonReport compare_representation(const std::array<FieldElement, 2>& target, const TernaryRep& rep,
                                        std::size_t depth, const Rational& precision) {
  ComparisonReport report{target, expand(InputTuple({target[0], target[1]}), depth + 1), rep, {}, {}, {},
                          {}, 0, true, {}};
  const std::size_t rows = depth + 1;
  report.fit_max_order = rows >= 4 ? std::min<std::size_t>(12, (rows - 4) / 2) : 0;

  const auto rep_table = ConvergentTable<Rational>::from_quotients(rep.stream(rows));
  std::optional<ConvergentTable<Integer>> jp_table;
  std::size_t jp_rows = report.jacobi.size();
  if (std::holds_alternative<CycleDetected>(report.jacobi.status)) jp_rows = rows;
  jp_rows = std::min(jp_rows, rows);
  if (std::holds_alternative<Terminated>(report.jacobi.status)) {
    report.comparable = false;
    report.note = "Jacobi-Perron expansion terminated after " + std::to_string(report.jacobi.size()) +
                  " steps: the target pair is rational, so there is no infinite expansion to compare";
  }
  const auto jp_quotients = report.jacobi.quotient_stream(jp_rows);
  if (!jp_quotients.empty()) jp_table = ConvergentTable<Integer>::from_quotients(jp_quotients);

  const auto rep_quotients = rep.stream(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    ComparisonRow row;
    row.n = n;
    row.rep_quotients = {rep_quotients[n][0], rep_quotients[n][1]};
    try {
      row.rep = convergent_error(rep_table, static_cast<long>(n), target, precision);
    } catch (const ZeroDenominator&) {
      report.rep_zero_denominators.push_back(n);
    }
    if (n < jp_rows) {
      row.jacobi_quotients = std::array<Integer, 2>{jp_quotients[n][0], jp_quotients[n][1]};
      try {
        row.jacobi = convergent_error(*jp_table, static_cast<long>(n), target, precision);
      } catch (const ZeroDenominator&) {
      }
    }
    report.rows.push_back(std::move(row));
  }

  const std::size_t need = 2 * report.fit_max_order + 4;
  if (rows >= need) report.rep_fits = fit_axes(rep_table, report.fit_max_order);
  if (jp_table && jp_rows >= need) report.jacobi_fits = fit_axes(*jp_table, report.fit_max_order);
  return report;
}

ComparisonReport compare_with_jacobi(const CubicSpec& spec, std::size_t depth, const Rational& precision) {
  if (depth < 1) throw std::invalid_argument("compare_with_jacobi: depth must be >= 1");
  spec.validate();
  const auto field = NumberField::make(cubic_root(spec));
  const FieldElement alpha = FieldElement::generator(field);
  const std::array<FieldElement, 2> target{field_inv(alpha) * Rational(spec.r), alpha};
  return compare_representation(target, build_representation(spec), depth, precision);
}

bool max_error_smaller(const std::array<Rational, 2>& a, const std::array<Rational, 2>& b,
                       const std::array<FieldElement, 2>& target) {
  const std::array<FieldElement, 2> ea{abs_difference(a[0], target[0]), abs_difference(a[1], target[1])};
  const std::array<FieldElement, 2> eb{abs_difference(b[0], target[0]), abs_difference(b[1], target[1])};
  return std::any_of(eb.begin(), eb.end(), [&](const FieldElement& big) {
    return std::all_of(ea.begin(), ea.end(), [&](const FieldElement& small) { return sign(big - small) > 0; });
  });
}

bool max_error_below(const std::array<Rational, 2>& a, const std::array<FieldElement, 2>& target,
                     const Rational& bound) {
  for (std::size_t i = 0; i < 2; ++i) {
    const FieldElement e = abs_difference(a[i], target[i]);
    if (sign(FieldElement(e.field(), bound) - e) <= 0) return false;
  }
  return true;
}

}  // namespace jpcf
