/* SPDX-License-Identifier: Apache-2.0 */

#include "jpcf/polynomial.hpp"

#include <stdexcept>

namespace jpcf {

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  const Rational& lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational coeff = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - db)] = coeff;
    if (coeff.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= coeff * b[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial make_monic(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / p.leading()) * p;
}

GcdResult extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  // Invariant: s0*a = r0 and s1*a = r1 modulo b.
  RationalPolynomial r0 = a, r1 = b;
  RationalPolynomial s0{Rational(1)}, s1{};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RationalPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {r0, s0};
  const Rational scale = Rational(1) / r0.leading();
  return {scale * r0, scale * s0};
}

IntegerPolynomial primitive_part(const RationalPolynomial& p) {
  if (p.is_zero()) return {};
  Integer den(1);
  for (const auto& c : p.coeffs()) den = lcm(den, c.den());
  std::vector<Integer> out;
  Integer content(0);
  for (const auto& c : p.coeffs()) {
    out.push_back(exact_div(c.num() * den, c.den()));
    content = gcd(content, out.back());
  }
  if (out.back().sign() < 0) content = -content;
  for (auto& c : out) c = exact_div(c, content);
  return IntegerPolynomial(std::move(out));
}

}  // namespace jpcf
