/* SPDX-License-Identifier: Apache-2.0 */

// Exact scalar types used throughout the library.
//
// Integer and Rational are thin value wrappers around GMP's mpz_class and
// mpq_class. They exist so that GMP's expression templates never leak into
// Eigen's kernels: every operator returns a concrete value.

#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include <Eigen/Core>

namespace jpcf {

class Integer {
 public:
  Integer() = default;
  template <std::signed_integral T>
  Integer(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral T>
  Integer(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  // Accepts an optional sign followed by decimal digits.
  static Integer parse(std::string_view text);

  const mpz_class& mpz() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const;
  double to_double() const { return v_.get_d(); }
  std::size_t bit_length() const { return mpz_sizeinbase(v_.get_mpz_t(), 2); }
  std::string str() const { return v_.get_str(); }

  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
  friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }
  friend Integer operator+(const Integer& a) { return a; }

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpz_class v_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// Quotient rounded toward negative infinity. Throws std::domain_error on b = 0.
Integer floor_div(const Integer& a, const Integer& b);
// a / b where b is known to divide a. Throws std::domain_error otherwise.
Integer exact_div(const Integer& a, const Integer& b);
// floor(sqrt(a)) for a >= 0.
Integer isqrt(const Integer& a);
Integer pow(const Integer& base, unsigned long exp);
bool is_perfect_square(const Integer& a);

class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : v_(Integer(v).mpz()) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : v_(v.mpz()) {}  // NOLINT(google-explicit-constructor)
  // Throws std::domain_error when den = 0.
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p", "p/q" and "-p/q" (q > 0 after canonicalization).
  static Rational parse(std::string_view text);

  const mpq_class& mpq() const { return v_; }
  Integer num() const { return Integer(v_.get_num()); }
  Integer den() const { return Integer(v_.get_den()); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Integer floor() const { return floor_div(num(), den()); }
  Integer ceil() const { return -floor_div(-num(), den()); }
  double to_double() const { return v_.get_d(); }
  // "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { Rational r = a; r /= b; return r; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend Rational operator+(const Rational& a) { return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpq_class v_;
};

Rational abs(const Rational& a);
Rational pow(const Rational& base, unsigned long exp);

}  // namespace jpcf

namespace Eigen {

template <>
struct NumTraits<jpcf::Integer> : GenericNumTraits<jpcf::Integer> {
  using Real = jpcf::Integer;
  using NonInteger = jpcf::Rational;
  using Literal = jpcf::Integer;
  using Nested = jpcf::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 32
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<jpcf::Rational> : GenericNumTraits<jpcf::Rational> {
  using Real = jpcf::Rational;
  using NonInteger = jpcf::Rational;
  using Literal = jpcf::Rational;
  using Nested = jpcf::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace jpcf {

// Division by a nonzero integer that is known to be exact for Integer and
// always exact for Rational. Lets scalar-generic algorithms divide.
inline Integer exact_quotient(const Integer& a, const Integer& k) { return exact_div(a, k); }
inline Rational exact_quotient(const Rational& a, const Rational& k) { return a / k; }

inline std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.str(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

inline Rational to_rational(const Integer& a) { return Rational(a); }
inline Rational to_rational(const Rational& a) { return a; }

// Decimal rendering with `digits` significant digits, truncated toward zero.
std::string to_decimal(const Rational& x, int digits = 20);

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& a);

// Exact element-wise conversion.
template <typename Derived>
auto to_rational(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  return a.unaryExpr([](const Scalar& x) { return to_rational(x); }).eval();
}

}  // namespace jpcf



namespace jpcf {

template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> m = a;
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).sign() == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k).sign() == 0) ++swap;
      if (swap == n) return Scalar(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Scalar(-m(n - 1, n - 1));
}

}  // namespace jpcf
