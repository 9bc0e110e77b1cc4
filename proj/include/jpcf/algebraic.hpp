/* SPDX-License-Identifier: Apache-2.0 */

// Real algebraic numbers and exact arithmetic in a real number field Q(theta).
//
// A field is generated by one AlgebraicReal theta: an irreducible integer
// polynomial together with a rational interval isolating one of its real
// roots. Field elements are coordinate vectors over the power basis
// 1, theta, ..., theta^(d-1), so equality is coordinate equality. Signs and
// floors are decided by interval evaluation on a refined isolating interval.

#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "jpcf/numeric.hpp"
#include "jpcf/polynomial.hpp"

namespace jpcf {

// Closed interval [lo, hi] with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool excludes_zero() const { return lo.sign() > 0 || hi.sign() < 0; }
  // Least upper bound of |x| over the interval.
  Rational magnitude() const { return std::max(abs(lo), abs(hi)); }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator+(const Interval& a, const Rational& c) { return {a.lo + c, a.hi + c}; }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Sturm chain of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const RationalPolynomial& p);
  int variations(const Rational& x) const;
  // Distinct real roots in the half-open interval (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<RationalPolynomial> chain_;
};

// p / gcd(p, p'), with the same real roots as p but all of them simple.
RationalPolynomial squarefree_part(const RationalPolynomial& p);

// Integer M with every real root of p in (-M, M). M is a power of two.
Integer root_bound(const IntegerPolynomial& p);

// Disjoint isolating intervals for the real roots of p, ascending. A rational
// root found exactly is returned as a degenerate interval [x, x].
std::vector<Interval> isolate_real_roots(const IntegerPolynomial& p);

bool has_rational_root(const IntegerPolynomial& p);

class AlgebraicReal {
 public:
  // Validates that minpoly has exactly one real root in (lo, hi), that
  // neither endpoint is a root, and, for degree 2 and 3, that minpoly has no
  // rational root (which makes it irreducible). Irreducibility of degree >= 4
  // is taken on trust; see irreducibility_verified(). Throws
  // std::invalid_argument on violation.
  AlgebraicReal(IntegerPolynomial minpoly, Rational lo, Rational hi);

  // The rational q as a degree-one algebraic number.
  static AlgebraicReal rational(const Rational& q);
  // The largest real root of an irreducible integer polynomial.
  static AlgebraicReal largest_real_root(const IntegerPolynomial& minpoly);

  const IntegerPolynomial& minpoly() const { return minpoly_; }
  const Interval& interval() const { return interval_; }
  int degree() const { return minpoly_.degree(); }
  bool irreducibility_verified() const { return degree() <= 3; }

  // Same root, isolating interval of width <= width_bound. Returns *this
  // when the current interval is already narrow enough.
  AlgebraicReal refine(const Rational& width_bound) const;

  // True when both describe the same root of the same polynomial.
  bool same_root(const AlgebraicReal& other) const;

 private:
  struct Unchecked {};
  AlgebraicReal(Unchecked, IntegerPolynomial minpoly, Interval interval);

  IntegerPolynomial minpoly_;
  Interval interval_;
};

// Bisects `interval` (isolating a simple root of p) until its width is at most
// width_bound. Every step is decided by the exact sign of p at the midpoint.
Interval bisect_root(const IntegerPolynomial& p, Interval interval, const Rational& width_bound);

AlgebraicReal refine(const AlgebraicReal& a, const Rational& width_bound);

// Shared context for field elements: the generator and a memoized enclosure
// of it. The memo only ever narrows, so it never changes any observable value.
class NumberField {
 public:
  static std::shared_ptr<const NumberField> make(AlgebraicReal generator);
  // Q itself, generated by 0.
  static std::shared_ptr<const NumberField> rationals();

  explicit NumberField(AlgebraicReal generator);

  const AlgebraicReal& generator() const { return generator_; }
  int degree() const { return generator_.degree(); }
  // Monic minimal polynomial over Q.
  const RationalPolynomial& modulus() const { return modulus_; }

  // An interval containing the generator with width <= width_bound.
  Interval enclosure(const Rational& width_bound) const;

  bool same_field(const NumberField& other) const;

 private:
  AlgebraicReal generator_;
  RationalPolynomial modulus_;
  mutable std::mutex mutex_;
  mutable Interval cached_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class FieldMismatch : public std::invalid_argument {
 public:
  FieldMismatch() : std::invalid_argument("field elements belong to different number fields") {}
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("inverse of zero field element") {}
};

class FieldElement {
 public:
  // coords may be shorter than the field degree (missing entries are zero)
  // or longer (the polynomial is reduced modulo the minimal polynomial).
  FieldElement(FieldPtr field, std::vector<Rational> coords);
  FieldElement(FieldPtr field, const Rational& value);

  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  // Exactly degree() coordinates c_0..c_{d-1}.
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  // c_0; only meaningful when is_rational().
  const Rational& rational_value() const { return coords_.front(); }

  // Interval containing the value, evaluated on an enclosure of the
  // generator of width <= generator_width.
  Interval enclose(const Rational& generator_width) const;
  // Canonical text encoding; equal elements of one field have equal keys.
  std::string key() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator-(const FieldElement& a);
  friend FieldElement operator+(FieldElement a, const Rational& b);
  friend FieldElement operator-(FieldElement a, const Rational& b);
  friend FieldElement operator*(FieldElement a, const Rational& b);

  // Throws FieldMismatch for elements of different fields.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void check_same_field(const FieldElement& o) const;

  FieldPtr field_;
  std::vector<Rational> coords_;
};

FieldElement field_add(const FieldElement& x, const FieldElement& y);
FieldElement field_mul(const FieldElement& x, const FieldElement& y);
// Extended Euclid modulo the minimal polynomial. Throws DivisionByZero for 0.
FieldElement field_inv(const FieldElement& x);

// -1, 0 or +1. Exact for zero; otherwise decided by refining the generator
// enclosure until the value interval excludes zero.
int sign(const FieldElement& x);
// Largest integer k with k <= x.
Integer floor(const FieldElement& x);

}  // namespace jpcf
