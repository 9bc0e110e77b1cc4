/* SPDX-License-Identifier: Apache-2.0 */

// Linear recurrence sequences with constant rational coefficients.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "jpcf/numeric.hpp"
#include "jpcf/polynomial.hpp"

namespace jpcf {

// Monic polynomial x^d - c_1 x^(d-1) - ... - c_d attached to a recurrence,
// or the characteristic polynomial of a matrix.
using CharPoly = RationalPolynomial;

// s_n = c_1 s_{n-1} + ... + c_d s_{n-d} for n >= offset + d.
//
// `init` holds the leading terms s_0, ..., s_{offset+d-1}; terms before the
// offset are not governed by the recurrence (a preperiod).
struct LinearRecurrence {
  std::vector<Rational> coeffs;
  std::vector<Rational> init;
  std::size_t offset = 0;

  std::size_t order() const { return coeffs.size(); }
  CharPoly char_poly() const;
  // True when the recurrence reproduces every term of seq.
  bool generates(std::span<const Rational> seq) const;

  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

// s_n.
Rational lrs_extend(const LinearRecurrence& r, std::size_t n);
// s_0, ..., s_{count-1}.
std::vector<Rational> lrs_terms(const LinearRecurrence& r, std::size_t count);

// The recurrence whose characteristic polynomial is p; init must supply
// deg(p) terms.
LinearRecurrence recurrence_from_char_poly(const CharPoly& p, std::vector<Rational> init);

class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Shortest linear recurrence generating the whole prefix, found by exact
// Berlekamp-Massey over the rationals. Its length L = offset + order is the
// linear complexity of the prefix; nullopt when L > max_order. Requires
// prefix.size() >= 2 * max_order + 4 so that every accepted fit is attested by
// terms beyond the 2L that determine it; throws InsufficientData otherwise.
std::optional<LinearRecurrence> fit_minimal(std::span<const Rational> prefix, std::size_t max_order);

// Characteristic polynomial of a sum of two sequences: p * q.
CharPoly sum_closure(const CharPoly& p, const CharPoly& q);
// Characteristic polynomial of a term-wise product of two sequences: the
// characteristic polynomial of kron(C_p, C_q).
CharPoly product_closure(const CharPoly& p, const CharPoly& q);

// Companion matrix of a monic polynomial; its characteristic polynomial is p.
RationalMatrix companion_matrix(const CharPoly& p);

// Monic characteristic polynomial det(x I - A) by Faddeev-LeVerrier. All
// divisions are exact, so integer matrices stay integer.
template <typename Scalar>
Polynomial<Scalar> char_poly(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: matrix is not square");
  const Eigen::Index n = a.rows();
  // c[k] is the coefficient of x^k.
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m.diagonal().array() += c[static_cast<std::size_t>(n - k + 1)];
    m = (a * m).eval();
    c[static_cast<std::size_t>(n - k)] = -exact_quotient(Scalar(m.trace()), Scalar(k));
  }
  return Polynomial<Scalar>(std::move(c));
}

struct Periodicity {
  std::size_t preperiod;
  std::size_t period;
  friend bool operator==(const Periodicity&, const Periodicity&) = default;
};

// Smallest (preperiod + period), ties broken by the smaller period, such that
// seq[n] == seq[n + period] for every preperiod <= n < len - period and the
// periodic part spans at least three full periods. This is a consistency
// check on a finite prefix, not a proof of periodicity.
template <typename T>
std::optional<Periodicity> eventually_periodic(std::span<const T> seq) {
  const std::size_t len = seq.size();
  std::optional<Periodicity> best;
  for (std::size_t period = 1; 3 * period <= len; ++period) {
    // Smallest start from which the shift-by-period equality holds to the end.
    std::size_t start = len - period;
    while (start > 0 && seq[start - 1] == seq[start - 1 + period]) --start;
    if (len - start < 3 * period) continue;
    if (!best || start + period < best->preperiod + best->period) best = Periodicity{start, period};
  }
  return best;
}

template <typename T>
std::optional<Periodicity> eventually_periodic(const std::vector<T>& seq) {
  return eventually_periodic(std::span<const T>(seq));
}

// True when q divides p exactly over the rationals.
bool divides(const CharPoly& q, const CharPoly& p);

}  // namespace jpcf
