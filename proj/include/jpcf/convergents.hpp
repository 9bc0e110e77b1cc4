/* SPDX-License-Identifier: Apache-2.0 */

// Convergent numerators and denominators of a multidimensional continued
// fraction.
//
// With quotient tuples a_n = (a_n^(1), ..., a_n^(m)) the vectors
// A_n = (A_n^(1), ..., A_n^(m+1)) satisfy
//
//   A_n = sum_{j=1..m} a_n^(j) A_{n-j} + A_{n-m-1},   n >= 1,
//
// from A_{-j} = e_j (j = 1..m, with A_{-j}^(m+1) = 0) and
// A_0 = (a_0^(1), ..., a_0^(m), 1). Equivalently the product of step matrices
// S(a_0) S(a_1) ... S(a_n) has columns A_n, A_{n-1}, ..., A_{n-m}.
//
// Everything here is templated on the scalar: Integer for expansions with
// integer quotients, Rational for representations with rational quotients.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jpcf/numeric.hpp"

namespace jpcf {

class ZeroDenominator : public std::domain_error {
 public:
  explicit ZeroDenominator(long n)
      : std::domain_error("convergent " + std::to_string(n) + " has zero denominator"), index(n) {}
  long index;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : std::invalid_argument("expected " + std::to_string(expected) + " quotients, got " +
                              std::to_string(got)) {}
};

template <typename Scalar>
class ConvergentTable {
 public:
  // Rows -m..0 from the quotients a_0 of the first step.
  explicit ConvergentTable(std::span<const Scalar> first_quotients) : m_(first_quotients.size()) {
    if (m_ == 0) throw std::invalid_argument("convergent table needs dimension m >= 1");
    for (std::size_t j = m_; j >= 1; --j) {
      Vector<Scalar> row = Vector<Scalar>::Zero(static_cast<Eigen::Index>(m_ + 1));
      row(static_cast<Eigen::Index>(j - 1)) = Scalar(1);
      rows_.push_back(std::move(row));
    }
    Vector<Scalar> row0(static_cast<Eigen::Index>(m_ + 1));
    for (std::size_t i = 0; i < m_; ++i) row0(static_cast<Eigen::Index>(i)) = first_quotients[i];
    row0(static_cast<Eigen::Index>(m_)) = Scalar(1);
    rows_.push_back(std::move(row0));
  }

  static ConvergentTable from_quotients(const std::vector<std::vector<Scalar>>& quotients) {
    if (quotients.empty()) throw std::invalid_argument("convergent table needs at least a_0");
    ConvergentTable table(quotients.front());
    for (std::size_t n = 1; n < quotients.size(); ++n) table.extend(quotients[n]);
    return table;
  }

  std::size_t dim() const { return m_; }
  long first_index() const { return -static_cast<long>(m_); }
  long last_index() const { return static_cast<long>(rows_.size()) - static_cast<long>(m_) - 1; }

  // (A_n^(1), ..., A_n^(m+1)) for first_index() <= n <= last_index().
  const Vector<Scalar>& row(long n) const {
    if (n < first_index() || n > last_index()) {
      throw std::out_of_range("convergent table row " + std::to_string(n) + " out of range");
    }
    return rows_[static_cast<std::size_t>(n - first_index())];
  }
  // A_n^(axis) with axis counted from 1 to m+1.
  const Scalar& at(long n, std::size_t axis) const {
    if (axis < 1 || axis > m_ + 1) throw std::out_of_range("convergent table axis out of range");
    return row(n)(static_cast<Eigen::Index>(axis - 1));
  }
  // A_from^(axis), ..., A_last^(axis).
  std::vector<Scalar> sequence(std::size_t axis, long from = 0) const {
    std::vector<Scalar> out;
    for (long n = from; n <= last_index(); ++n) out.push_back(at(n, axis));
    return out;
  }

  // Appends row last_index() + 1 with quotients a_n.
  void extend(std::span<const Scalar> quotients) {
    if (quotients.size() != m_) throw DimensionMismatch(m_, quotients.size());
    const long n = last_index() + 1;
    Vector<Scalar> next = row(n - static_cast<long>(m_) - 1);
    for (std::size_t j = 1; j <= m_; ++j) {
      next += quotients[j - 1] * row(n - static_cast<long>(j));
    }
    rows_.push_back(std::move(next));
  }

 private:
  std::size_t m_;
  std::vector<Vector<Scalar>> rows_;
};

// Appends one row to a copy of the table.
template <typename Scalar>
ConvergentTable<Scalar> extend_table(ConvergentTable<Scalar> table, std::span<const Scalar> quotients) {
  table.extend(quotients);
  return table;
}

// The (m+1)x(m+1) matrix with first column (a^(1), ..., a^(m), 1) and the
// first m standard basis vectors as columns 2..m+1.
template <typename Scalar>
Matrix<Scalar> step_matrix(std::span<const Scalar> a) {
  const auto n = static_cast<Eigen::Index>(a.size() + 1);
  Matrix<Scalar> s = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    s(i, 0) = a[static_cast<std::size_t>(i)];
    s(i, i + 1) = Scalar(1);
  }
  s(n - 1, 0) = Scalar(1);
  return s;
}

// Product of step matrices over a quotient prefix a_0, ..., a_n.
template <typename Scalar>
Matrix<Scalar> matrix_table(const std::vector<std::vector<Scalar>>& prefix) {
  if (prefix.empty()) throw std::invalid_argument("matrix_table needs a nonempty prefix");
  Matrix<Scalar> product = step_matrix<Scalar>(prefix.front());
  for (std::size_t n = 1; n < prefix.size(); ++n) {
    if (prefix[n].size() != prefix.front().size()) {
      throw DimensionMismatch(prefix.front().size(), prefix[n].size());
    }
    product = (product * step_matrix<Scalar>(prefix[n])).eval();
  }
  return product;
}

// (A_n^(1) / A_n^(m+1), ..., A_n^(m) / A_n^(m+1)). Throws ZeroDenominator.
template <typename Scalar>
std::vector<Rational> convergent(const ConvergentTable<Scalar>& table, long n) {
  const auto& r = table.row(n);
  const auto m = static_cast<Eigen::Index>(table.dim());
  if (r(m).sign() == 0) throw ZeroDenominator(n);
  const Rational den = to_rational(r(m));
  std::vector<Rational> out;
  for (Eigen::Index i = 0; i < m; ++i) out.push_back(to_rational(r(i)) / den);
  return out;
}

// A_n^(i) >= prod_{j=1..n} a_j^(1) for every axis i = 1..m+1 and every
// 1 <= n <= min(last_index(), quotients.size() - 1).
bool check_growth_bound(const ConvergentTable<Integer>& table, const std::vector<std::vector<Integer>>& quotients);

template <typename To, typename From>
std::vector<std::vector<To>> convert_quotients(const std::vector<std::vector<From>>& q) {
  std::vector<std::vector<To>> out;
  out.reserve(q.size());
  for (const auto& tuple : q) out.emplace_back(tuple.begin(), tuple.end());
  return out;
}

}  // namespace jpcf
