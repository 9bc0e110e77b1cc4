/* SPDX-License-Identifier: Apache-2.0 */

#include "jpcf/lrs.hpp"

#include <string>

namespace jpcf {

CharPoly LinearRecurrence::char_poly() const {
  const std::size_t d = coeffs.size();
  std::vector<Rational> c(d + 1, Rational(0));
  c[d] = Rational(1);
  for (std::size_t k = 1; k <= d; ++k) c[d - k] = -coeffs[k - 1];
  return CharPoly(std::move(c));
}

bool LinearRecurrence::generates(std::span<const Rational> seq) const {
  const auto terms = lrs_terms(*this, seq.size());
  return std::equal(terms.begin(), terms.end(), seq.begin());
}

std::vector<Rational> lrs_terms(const LinearRecurrence& r, std::size_t count) {
  if (r.init.size() != r.offset + r.order()) {
    throw std::invalid_argument("recurrence needs offset + order = " +
                                std::to_string(r.offset + r.order()) + " initial terms, has " +
                                std::to_string(r.init.size()));
  }
  std::vector<Rational> s(r.init.begin(),
                          r.init.begin() + static_cast<std::ptrdiff_t>(std::min(count, r.init.size())));
  while (s.size() < count) {
    const std::size_t n = s.size();
    Rational next(0);
    for (std::size_t k = 1; k <= r.order(); ++k) next += r.coeffs[k - 1] * s[n - k];
    s.push_back(std::move(next));
  }
  return s;
}

Rational lrs_extend(const LinearRecurrence& r, std::size_t n) { return lrs_terms(r, n + 1).back(); }

LinearRecurrence recurrence_from_char_poly(const CharPoly& p, std::vector<Rational> init) {
  if (!p.is_monic()) throw std::invalid_argument("characteristic polynomial must be monic");
  const auto d = static_cast<std::size_t>(p.degree());
  if (init.size() != d) throw std::invalid_argument("need exactly deg(p) initial terms");
  LinearRecurrence r;
  for (std::size_t k = 1; k <= d; ++k) r.coeffs.push_back(-p[static_cast<int>(d - k)]);
  r.init = std::move(init);
  return r;
}

std::optional<LinearRecurrence> fit_minimal(std::span<const Rational> prefix, std::size_t max_order) {
  if (prefix.size() < 2 * max_order + 4) {
    throw InsufficientData("fit_minimal needs at least " + std::to_string(2 * max_order + 4) +
                           " terms for max_order " + std::to_string(max_order) + ", got " +
                           std::to_string(prefix.size()));
  }
  // Connection polynomial C(x) = 1 + C_1 x + ... + C_L x^L with
  // sum_{i=0..L} C_i s_{n-i} = 0 for L <= n < N.
  std::vector<Rational> conn{Rational(1)};
  std::vector<Rational> prev{Rational(1)};
  std::size_t length = 0;
  std::size_t shift = 1;
  Rational prev_discrepancy(1);

  for (std::size_t n = 0; n < prefix.size(); ++n) {
    Rational d = prefix[n];
    for (std::size_t i = 1; i <= length && i < conn.size(); ++i) d += conn[i] * prefix[n - i];
    if (d.is_zero()) {
      ++shift;
      continue;
    }
    const Rational factor = d / prev_discrepancy;
    std::vector<Rational> updated = conn;
    if (updated.size() < prev.size() + shift) updated.resize(prev.size() + shift, Rational(0));
    for (std::size_t i = 0; i < prev.size(); ++i) updated[i + shift] -= factor * prev[i];
    if (2 * length <= n) {
      prev = std::move(conn);
      length = n + 1 - length;
      prev_discrepancy = d;
      shift = 1;
    } else {
      ++shift;
    }
    conn = std::move(updated);
  }

  if (length > max_order) return std::nullopt;
  std::size_t order = 0;
  for (std::size_t i = 1; i < conn.size() && i <= length; ++i) {
    if (!conn[i].is_zero()) order = i;
  }
  LinearRecurrence r;
  for (std::size_t i = 1; i <= order; ++i) r.coeffs.push_back(-conn[i]);
  r.offset = length - order;
  r.init.assign(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(length));
  return r;
}

CharPoly sum_closure(const CharPoly& p, const CharPoly& q) { return p * q; }

RationalMatrix companion_matrix(const CharPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("companion matrix of a non-monic polynomial");
  const auto d = static_cast<Eigen::Index>(p.degree());
  RationalMatrix c = RationalMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (i + 1 < d) c(i + 1, i) = Rational(1);
    c(i, d - 1) = -p[static_cast<int>(i)];
  }
  return c;
}

CharPoly product_closure(const CharPoly& p, const CharPoly& q) {
  const RationalMatrix k = Eigen::kroneckerProduct(companion_matrix(p), companion_matrix(q)).eval();
  return char_poly(k);
}

bool divides(const CharPoly& q, const CharPoly& p) { return divmod(p, q).second.is_zero(); }

}  // namespace jpcf
