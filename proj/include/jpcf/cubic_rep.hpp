/* SPDX-License-Identifier: Apache-2.0 */

// Periodic ternary continued fraction with rational partial quotients for a
// cubic irrational alpha with minimal polynomial x^3 - p x^2 - q x - r, and
// its comparison with the Jacobi-Perron expansion of (r / alpha, alpha).
//
// With N = [[z, r, pr], [0, q+z, pq+r], [1, p, p^2+q+z]] and s = pq + r the
// two quotient streams are
//
//   (z, (2z+p^2+q)/s, | s tr(N)/det(N), tr(N), tr(N)/s |)
//   (p, -(z^2+qz+p^2 z-pr)/s, | -I1(N)/det(N), -s I1(N)/det(N), -I1(N)/s |)
//
// where I1 is the sum of the principal 2x2 minors of N.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jpcf/algebraic.hpp"
#include "jpcf/jacobi_perron.hpp"
#include "jpcf/lrs.hpp"
#include "jpcf/numeric.hpp"

namespace jpcf {

class DegenerateSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CubicSpec {
  Integer p, q, r, z;

  // x^3 - p x^2 - q x - r
  IntegerPolynomial minpoly() const;
  // Throws DegenerateSpec when the minimal polynomial has a rational root or
  // pq + r = 0 or det(N) = 0.
  void validate() const;
};

struct NMatrix {
  IntegerMatrix n;
  Integer trace;
  Integer det;
  Integer second_invariant;  // I1
};

NMatrix build_n_matrix(const CubicSpec& spec);

struct TernaryRep {
  std::array<std::vector<Rational>, 2> pre;
  std::array<std::vector<Rational>, 2> period;

  // The first `length` quotient pairs, with the period unrolled.
  std::vector<std::vector<Rational>> stream(std::size_t length) const;
};

TernaryRep build_representation(const CubicSpec& spec);

// The n-th convergent pair. Throws ZeroDenominator.
std::array<Rational, 2> evaluate_representation(const TernaryRep& rep, std::size_t n);

// alpha: the largest real root of the minimal polynomial.
AlgebraicReal cubic_root(const CubicSpec& spec);

// |convergent - target| per coordinate, enclosed in an interval.
struct ConvergentError {
  std::array<Rational, 2> convergent;
  std::array<Interval, 2> error;
};

struct ComparisonRow {
  std::size_t n = 0;
  std::optional<std::array<Integer, 2>> jacobi_quotients;
  std::array<Rational, 2> rep_quotients;
  std::optional<ConvergentError> jacobi;   // empty past the end of the expansion or at a zero denominator
  std::optional<ConvergentError> rep;      // empty at a zero denominator
};

struct ComparisonReport {
  std::array<FieldElement, 2> target;  // (r / alpha, alpha)
  Expansion jacobi;
  TernaryRep rep;
  std::vector<ComparisonRow> rows;
  std::vector<std::size_t> rep_zero_denominators;
  // Minimal recurrences of the convergent numerators/denominators A^(1..3).
  std::vector<std::optional<LinearRecurrence>> rep_fits;
  std::vector<std::optional<LinearRecurrence>> jacobi_fits;
  std::size_t fit_max_order = 0;
  bool comparable = true;
  std::string note;
};

// Runs the Jacobi-Perron expansion of (r / alpha, alpha) in Q(alpha) and the
// periodic representation side by side for n = 0..depth. Error intervals are
// computed on an enclosure of alpha of width <= precision.
ComparisonReport compare_with_jacobi(const CubicSpec& spec, std::size_t depth, const Rational& precision);

// The same comparison for an arbitrary target pair and representation. A
// target whose expansion terminates (a rational pair) is reported as not
// comparable.
ComparisonReport compare_representation(const std::array<FieldElement, 2>& target, const TernaryRep& rep,
                                        std::size_t depth, const Rational& precision);

// max_i |a_i - t_i| < max_i |b_i - t_i|, decided exactly in the field of t.
bool max_error_smaller(const std::array<Rational, 2>& a, const std::array<Rational, 2>& b,
                       const std::array<FieldElement, 2>& target);

// max_i |a_i - t_i| < bound, decided exactly.
bool max_error_below(const std::array<Rational, 2>& a, const std::array<FieldElement, 2>& target,
                     const Rational& bound);

}  // namespace jpcf
