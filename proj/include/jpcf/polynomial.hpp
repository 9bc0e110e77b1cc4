/* SPDX-License-Identifier: Apache-2.0 */

// Dense univariate polynomials over an exact scalar.

#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jpcf/numeric.hpp"

namespace jpcf {

// Coefficients are stored in ascending order of degree with no trailing
// zeros; the zero polynomial has no coefficients and degree -1.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const Scalar& coeff, int degree) {
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
    c.back() = coeff;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(Scalar(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  // Coefficient of x^k; zero past the degree.
  Scalar operator[](int k) const {
    return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : Scalar(0);
  }
  const Scalar& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == Scalar(1); }

  template <typename Arg>
  auto operator()(const Arg& x) const {
    using Result = decltype(Scalar() * x);
    Result acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // Horner evaluation at a square matrix.
  Matrix<Scalar> operator()(const Matrix<Scalar>& a) const {
    const auto n = a.rows();
    Matrix<Scalar> acc = Matrix<Scalar>::Zero(n, n);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = (acc * a).eval();
      acc.diagonal().array() += *it;
    }
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k)));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Scalar> c;
    c.reserve(a.c_.size());
    for (const auto& x : a.c_) c.push_back(-x);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
    std::vector<Scalar> c;
    c.reserve(a.c_.size());
    for (const auto& x : a.c_) c.push_back(s * x);
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Human-readable form in descending powers, e.g. "x^3 - x^2 - x - 1".
  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Scalar& a = c_[static_cast<std::size_t>(k)];
      if (a.sign() == 0) continue;
      const bool neg = a.sign() < 0;
      const Scalar mag = neg ? Scalar(-a) : a;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const bool unit = mag == Scalar(1);
      if (!unit || k == 0) out += mag.str();
      if (k > 0) {
        if (!unit) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().sign() == 0) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using IntegerPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

template <typename Scalar>
RationalPolynomial to_rational(const Polynomial<Scalar>& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(to_rational(x));
  return RationalPolynomial(std::move(c));
}

// Quotient and remainder over the rationals. Throws std::domain_error when b = 0.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);

// Monic gcd g and cofactor s with s*a = g (mod b).
struct GcdResult {
  RationalPolynomial gcd;
  RationalPolynomial s;
};
GcdResult extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b);

RationalPolynomial make_monic(const RationalPolynomial& p);

// Clears denominators and content: the primitive integer polynomial with
// positive leading coefficient proportional to p.
IntegerPolynomial primitive_part(const RationalPolynomial& p);

}  // namespace jpcf
