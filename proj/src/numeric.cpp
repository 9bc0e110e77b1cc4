/* SPDX-License-Identifier: Apache-2.0 */

#include "jpcf/numeric.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace jpcf {

namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Integer Integer::parse(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw std::invalid_argument("not an integer literal: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(mpz_class(std::string(text), 10));
}

long Integer::to_long() const {
  if (!fits_long()) throw std::overflow_error("integer does not fit in long: " + str());
  return v_.get_si();
}

Integer abs(const Integer& a) { return Integer(mpz_class(::abs(a.mpz()))); }

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(l);
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("floor_div: division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(q);
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (!mpz_divisible_p(a.mpz().get_mpz_t(), b.mpz().get_mpz_t())) {
    throw std::domain_error("exact_div: " + b.str() + " does not divide " + a.str());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(q);
}

Integer isqrt(const Integer& a) {
  if (a.sign() < 0) throw std::domain_error("isqrt of negative integer");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), a.mpz().get_mpz_t());
  return Integer(r);
}

Integer pow(const Integer& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exp);
  return Integer(r);
}

bool is_perfect_square(const Integer& a) {
  return a.sign() >= 0 && mpz_perfect_square_p(a.mpz().get_mpz_t()) != 0;
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num.mpz(), den.mpz());
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("signed denominator in rational literal: '" + std::string(text) + "'");
  }
  return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(den_text));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational pow(const Rational& base, unsigned long exp) {
  return Rational(pow(base.num(), exp), pow(base.den(), exp));
}

std::string to_decimal(const Rational& x, int digits) {
  if (digits < 1) digits = 1;
  if (x.is_zero()) return "0";
  const bool negative = x.sign() < 0;
  const Integer num = abs(x.num());
  const Integer den = x.den();

  // Find e with 10^e <= |x| < 10^(e+1), then scale to `digits` integer digits.
  long e = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size());
  auto scaled_ge = [&](long exponent) {
    // |x| >= 10^exponent
    if (exponent >= 0) return num >= den * pow(Integer(10), static_cast<unsigned long>(exponent));
    return num * pow(Integer(10), static_cast<unsigned long>(-exponent)) >= den;
  };
  while (!scaled_ge(e)) --e;
  while (scaled_ge(e + 1)) ++e;

  const long shift = digits - 1 - e;
  Integer mantissa =
      shift >= 0 ? floor_div(num * pow(Integer(10), static_cast<unsigned long>(shift)), den)
                 : floor_div(num, den * pow(Integer(10), static_cast<unsigned long>(-shift)));
  std::string m = mantissa.str();
  std::string out = negative ? "-" : "";
  out += m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(e);
  return out;
}

}  // namespace jpcf
