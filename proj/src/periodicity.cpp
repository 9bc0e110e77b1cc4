/* SPDX-License-Identifier: Apache-2.0 */

#include "jpcf/periodicity.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace jpcf {

void PeriodicSpec::validate() const {
  if (pre.empty()) throw std::invalid_argument("periodic spec needs m >= 1 axes");
  if (pre.size() != period.size()) {
    throw std::invalid_argument("periodic spec has " + std::to_string(pre.size()) +
                                " preperiods but " + std::to_string(period.size()) + " periods");
  }
  for (std::size_t i = 0; i < period.size(); ++i) {
    if (period[i].empty()) {
      throw std::invalid_argument("period of axis " + std::to_string(i + 1) + " is empty");
    }
  }
}

bool PeriodicSpec::jp_admissible() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (const auto& b : period[i]) {
      if (b < Integer(i == 0 ? 1 : 0)) return false;
    }
    for (std::size_t n = 1; n < pre[i].size(); ++n) {
      if (pre[i][n] < Integer(i == 0 ? 1 : 0)) return false;
    }
  }
  return true;
}

std::size_t PeriodicSpec::max_preperiod() const {
  std::size_t p = 0;
  for (const auto& a : pre) p = std::max(p, a.size());
  return p;
}

const Integer& PeriodicSpec::quotient(std::size_t n, std::size_t axis) const {
  const auto& a = pre.at(axis - 1);
  const auto& b = period.at(axis - 1);
  if (n < a.size()) return a[n];
  return b[(n - a.size()) % b.size()];
}

std::vector<QuotientTuple> PeriodicSpec::stream(std::size_t length) const {
  std::vector<QuotientTuple> out(length);
  for (std::size_t n = 0; n < length; ++n) {
    for (std::size_t axis = 1; axis <= dim(); ++axis) out[n].push_back(quotient(n, axis));
  }
  return out;
}

CycleData build_cycle_data(const PeriodicSpec& spec) {
  spec.validate();
  const std::size_t m = spec.dim();
  CycleData cd;
  cd.spec = spec;
  cd.u = 1;
  for (const auto& b : spec.period) cd.u = std::lcm(cd.u, b.size());
  const std::size_t top = spec.max_preperiod();
  for (const auto& a : spec.pre) cd.v.push_back(top - a.size());

  for (std::size_t i = 0; i < cd.u; ++i) {
    IntegerMatrix product = IntegerMatrix::Identity(static_cast<Eigen::Index>(m + 1),
                                                    static_cast<Eigen::Index>(m + 1));
    for (std::size_t j = 0; j < cd.u; ++j) {
      QuotientTuple tuple;
      for (std::size_t k = 0; k < m; ++k) {
        const auto& b = spec.period[k];
        tuple.push_back(b[(i + j + cd.v[k]) % b.size()]);
      }
      product = (product * step_matrix<Integer>(tuple)).eval();
    }
    cd.matrices.push_back(std::move(product));
  }

  cd.shared_char_poly = char_poly(cd.matrices.front());
  for (std::size_t i = 1; i < cd.u; ++i) {
    const auto p = char_poly(cd.matrices[i]);
    if (p != cd.shared_char_poly) {
      throw SharedPolyViolation("cycle matrix M_" + std::to_string(i) + " has characteristic polynomial " +
                                p.str() + ", M_0 has " + cd.shared_char_poly.str());
    }
  }
  return cd;
}

namespace {

// c_0..c_m with chi(x) = x^(m+1) - sum_j c_j x^j.
std::vector<Integer> relation_coefficients(const CycleData& cd) {
  const int degree = cd.shared_char_poly.degree();
  std::vector<Integer> c;
  for (int j = 0; j < degree; ++j) c.push_back(-cd.shared_char_poly[j]);
  return c;
}

}  // namespace

std::vector<LinearRecurrence> derived_recurrence(const CycleData& cd) {
  const std::size_t m = cd.spec.dim();
  const std::size_t order = (m + 1) * cd.u;
  const std::size_t offset = cd.spec.max_preperiod();
  const auto c = relation_coefficients(cd);

  std::vector<Rational> coeffs(order, Rational(0));
  for (std::size_t j = 0; j <= m; ++j) coeffs[(m + 1 - j) * cd.u - 1] = Rational(c[j]);

  const auto table =
      ConvergentTable<Integer>::from_quotients(cd.spec.stream(offset + order));
  std::vector<LinearRecurrence> out;
  for (std::size_t axis = 1; axis <= m + 1; ++axis) {
    LinearRecurrence r;
    r.coeffs = coeffs;
    r.offset = offset;
    for (long n = 0; n < static_cast<long>(offset + order); ++n) r.init.emplace_back(table.at(n, axis));
    out.push_back(std::move(r));
  }
  return out;
}

bool ForwardReport::passed() const {
  return std::all_of(axes.begin(), axes.end(), [](const AxisCheck& a) { return a.passed; });
}

ForwardReport verify_forward(const PeriodicSpec& spec, std::size_t horizon) {
  ForwardReport report;
  report.cycle = build_cycle_data(spec);
  report.horizon = horizon;
  const std::size_t m = spec.dim();
  const std::size_t u = report.cycle.u;
  const std::size_t top = spec.max_preperiod();
  if (horizon < top + 3 * (m + 1) * u) {
    throw std::invalid_argument("horizon " + std::to_string(horizon) + " is below max preperiod + 3(m+1)u = " +
                                std::to_string(top + 3 * (m + 1) * u));
  }
  const auto c = relation_coefficients(report.cycle);
  const auto table = ConvergentTable<Integer>::from_quotients(spec.stream(horizon + 1));

  for (std::size_t axis = 1; axis <= m + 1; ++axis) {
    AxisCheck check;
    for (std::size_t n = top; n + (m + 1) * u <= horizon; ++n) {
      Integer rhs(0);
      for (std::size_t j = 0; j <= m; ++j) rhs += c[j] * table.at(static_cast<long>(n + j * u), axis);
      ++check.checked;
      if (table.at(static_cast<long>(n + (m + 1) * u), axis) != rhs) {
        check.passed = false;
        check.first_failure = static_cast<long>(n);
        break;
      }
    }
    report.axes.push_back(check);
  }
  return report;
}

bool ConverseReport::all_fit() const {
  return std::all_of(fits.begin(), fits.end(), [](const auto& f) { return f.has_value(); });
}

bool ConverseReport::all_periodic() const {
  return !periodicity.empty() &&
         std::all_of(periodicity.begin(), periodicity.end(), [](const auto& p) { return p.has_value(); });
}

bool ConverseReport::consistent() const { return !all_fit() || all_periodic(); }

ConverseReport verify_converse(const Expansion& expansion, const ConvergentTable<Integer>& table,
                               std::size_t max_order) {
  ConverseReport report;
  report.terms = static_cast<std::size_t>(table.last_index() + 1);
  if (report.terms < 2 * max_order + 4) {
    throw InsufficientData("verify_converse needs " + std::to_string(2 * max_order + 4) +
                           " convergent rows, table has " + std::to_string(report.terms));
  }
  for (std::size_t axis = 1; axis <= table.dim() + 1; ++axis) {
    const auto ints = table.sequence(axis);
    const std::vector<Rational> seq(ints.begin(), ints.end());
    report.fits.push_back(fit_minimal(seq, max_order));
  }
  if (report.all_fit()) {
    for (std::size_t axis = 1; axis <= expansion.dim; ++axis) {
      report.periodicity.push_back(eventually_periodic(expansion.axis_quotients(axis, report.terms)));
    }
  }
  return report;
}

}  // namespace jpcf
