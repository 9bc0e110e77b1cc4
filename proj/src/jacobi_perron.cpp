/* SPDX-License-Identifier: Apache-2.0 */

#include "jpcf/jacobi_perron.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace jpcf {

InputTuple::InputTuple(State values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("input tuple must have dimension m >= 1");
  for (const auto& v : values_) {
    if (v.field() != values_.front().field() && !v.field()->same_field(*values_.front().field())) {
      throw FieldMismatch();
    }
  }
}

std::vector<QuotientTuple> Expansion::quotient_stream(std::size_t length) const {
  if (length <= quotients.size()) {
    return {quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(length)};
  }
  const auto* cycle = std::get_if<CycleDetected>(&status);
  if (cycle == nullptr) {
    throw std::out_of_range("expansion has " + std::to_string(quotients.size()) +
                            " steps and no detected cycle; requested " + std::to_string(length));
  }
  std::vector<QuotientTuple> out = quotients;
  for (std::size_t n = quotients.size(); n < length; ++n) {
    out.push_back(quotients[cycle->preperiod + (n - cycle->preperiod) % cycle->period]);
  }
  return out;
}

std::vector<Integer> Expansion::axis_quotients(std::size_t axis, std::size_t length) const {
  if (axis < 1 || axis > dim) throw std::out_of_range("axis out of range");
  std::vector<Integer> out;
  for (const auto& tuple : quotient_stream(length)) out.push_back(tuple[axis - 1]);
  return out;
}

ExpansionStep jp_step(const State& state) {
  if (state.empty()) throw std::invalid_argument("jp_step on an empty state");
  const std::size_t m = state.size();
  ExpansionStep step;
  State fractional;
  fractional.reserve(m);
  for (const auto& alpha : state) {
    step.quotients.push_back(floor(alpha));
    fractional.push_back(alpha - Rational(step.quotients.back()));
  }
  if (fractional.back().is_zero()) return step;

  const FieldElement reciprocal = field_inv(fractional.back());
  State next;
  next.reserve(m);
  next.push_back(reciprocal);
  for (std::size_t i = 1; i < m; ++i) next.push_back(fractional[i - 1] * reciprocal);
  step.state_after = std::move(next);
  return step;
}

namespace {

std::string state_key(const State& state) {
  std::string key;
  for (const auto& x : state) {
    key += x.key();
    key += '|';
  }
  return key;
}

// Records the step quotients, checking a_n^(1) >= 1 and a_n^(i) >= 0 for n >= 1.
void record_quotients(Expansion& e, QuotientTuple quotients) {
  const std::size_t n = e.quotients.size();
  if (n >= 1) {
    if (quotients.front() < Integer(1)) {
      throw std::logic_error("Jacobi-Perron invariant violated: a_" + std::to_string(n) +
                             "^(1) = " + quotients.front().str() + " < 1");
    }
    for (std::size_t i = 1; i < quotients.size(); ++i) {
      if (quotients[i].sign() < 0) {
        throw std::logic_error("Jacobi-Perron invariant violated: a_" + std::to_string(n) + "^(" +
                               std::to_string(i + 1) + ") = " + quotients[i].str() + " < 0");
      }
      if (quotients[i].is_zero()) e.zero_quotients.emplace_back(n, i + 1);
    }
  }
  e.quotients.push_back(std::move(quotients));
}

}  // namespace

Expansion expand(const InputTuple& input, std::size_t max_iter) {
  if (max_iter == 0) throw std::invalid_argument("expand: max_iter must be >= 1");
  Expansion e;
  e.dim = input.dim();
  e.states.push_back(input.values());
  std::unordered_map<std::string, std::size_t> seen{{state_key(input.values()), 0}};

  for (std::size_t n = 0; n < max_iter; ++n) {
    ExpansionStep step = jp_step(e.states[n]);
    record_quotients(e, std::move(step.quotients));
    if (step.terminates()) {
      e.status = Terminated{n};
      return e;
    }
    auto [it, inserted] = seen.emplace(state_key(*step.state_after), n + 1);
    if (!inserted) {
      e.status = CycleDetected{it->second, n + 1 - it->second};
      return e;
    }
    e.states.push_back(std::move(*step.state_after));
  }
  e.status = Truncated{max_iter};
  return e;
}

namespace {

Expansion euclid_cf(const Rational& x, std::size_t max_iter) {
  Expansion e;
  e.dim = 1;
  Integer p = x.num();
  Integer q = x.den();
  for (std::size_t n = 0; n < max_iter; ++n) {
    const Integer a = floor_div(p, q);
    record_quotients(e, {a});
    const Integer r = p - a * q;
    if (r.is_zero()) {
      e.status = Terminated{n};
      return e;
    }
    p = q;
    q = r;
  }
  e.status = Truncated{max_iter};
  return e;
}

// x = (P + sqrt(D)) / Q with Q | D - P^2 and D not a square.
struct QuadraticForm {
  Integer p, q, d;
};

QuadraticForm quadratic_form(const FieldElement& x) {
  const AlgebraicReal& theta = x.field()->generator();
  const IntegerPolynomial& f = theta.minpoly();
  const Integer disc = f[1] * f[1] - Integer(4) * f[2] * f[0];
  // theta = (-f1 + s sqrt(disc)) / (2 f2), with s fixed by which side of the
  // centre -f1 / (2 f2) the isolated root lies on.
  const Rational centre = -Rational(f[1]) / Rational(Integer(2) * f[2]);
  Interval iv = theta.interval();
  Rational width = iv.width();
  while (iv.contains(centre)) {
    width /= Rational(2);
    iv = bisect_root(f, iv, width);
  }
  const int s = iv.lo > centre ? 1 : -1;

  const Rational& c0 = x.coords()[0];
  const Rational& c1 = x.coords()[1];
  const Rational u = c0 + c1 * centre;
  const Rational v = c1 * Rational(s) / Rational(Integer(2) * f[2]);

  const Integer scale = lcm(u.den(), v.den());
  const Integer us = exact_div(u.num() * scale, u.den());
  const Integer vs = exact_div(v.num() * scale, v.den());
  const Integer d0 = vs * vs * disc;
  Integer p0 = v.sign() > 0 ? us : -us;
  Integer q0 = v.sign() > 0 ? scale : -scale;
  return {p0 * abs(q0), q0 * abs(q0), d0 * q0 * q0};
}

Expansion quadratic_cf(const FieldElement& x, std::size_t max_iter) {
  Expansion e;
  e.dim = 1;
  auto [p, q, d] = quadratic_form(x);
  const Integer root = isqrt(d);
  std::unordered_map<std::string, std::size_t> seen;
  seen.emplace(p.str() + "," + q.str(), 0);
  for (std::size_t n = 0; n < max_iter; ++n) {
    const Integer a = q.sign() > 0 ? floor_div(p + root, q) : floor_div(p + root + Integer(1), q);
    record_quotients(e, {a});
    p = a * q - p;
    q = exact_div(d - p * p, q);
    auto [it, inserted] = seen.emplace(p.str() + "," + q.str(), n + 1);
    if (!inserted) {
      e.status = CycleDetected{it->second, n + 1 - it->second};
      return e;
    }
  }
  e.status = Truncated{max_iter};
  return e;
}

Expansion field_cf(FieldElement x, std::size_t max_iter) {
  Expansion e;
  e.dim = 1;
  std::unordered_map<std::string, std::size_t> seen{{x.key(), 0}};
  for (std::size_t n = 0; n < max_iter; ++n) {
    const Integer a = floor(x);
    record_quotients(e, {a});
    const FieldElement frac = x - Rational(a);
    if (frac.is_zero()) {
      e.status = Terminated{n};
      return e;
    }
    x = field_inv(frac);
    auto [it, inserted] = seen.emplace(x.key(), n + 1);
    if (!inserted) {
      e.status = CycleDetected{it->second, n + 1 - it->second};
      return e;
    }
  }
  e.status = Truncated{max_iter};
  return e;
}

}  // namespace

Expansion classical_cf(const FieldElement& x, std::size_t max_iter) {
  if (max_iter == 0) throw std::invalid_argument("classical_cf: max_iter must be >= 1");
  if (x.is_rational()) return euclid_cf(x.rational_value(), max_iter);
  if (x.field()->degree() == 2) return quadratic_cf(x, max_iter);
  return field_cf(x, max_iter);
}

const char* status_name(const ExpansionStatus& status) {
  struct Visitor {
    const char* operator()(const Terminated&) const { return "Terminated"; }
    const char* operator()(const CycleDetected&) const { return "CycleDetected"; }
    const char* operator()(const Truncated&) const { return "Truncated"; }
  };
  return std::visit(Visitor{}, status);
}

}  // namespace jpcf
