/* SPDX-License-Identifier: Apache-2.0 */

#include "jpcf/algebraic.hpp"

#include <algorithm>
#include <utility>

namespace jpcf {

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return {*mn, *mx};
}

// ---------------------------------------------------------------------------
// Sturm sequences and root isolation

SturmSequence::SturmSequence(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  RationalPolynomial next = p.derivative();
  while (!next.is_zero()) {
    chain_.push_back(next);
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    next = -divmod(a, b).second;
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = q(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  return variations(lo) - variations(hi);
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.degree() <= 0) return p;
  const auto g = extended_gcd(p, p.derivative()).gcd;
  return divmod(p, g).first;
}

Integer root_bound(const IntegerPolynomial& p) {
  if (p.degree() < 1) return Integer(1);
  const Integer lead = abs(p.leading());
  Integer largest(0);
  for (int k = 0; k < p.degree(); ++k) {
    const Integer c = abs(p[k]);
    const Integer q = floor_div(c + lead - Integer(1), lead);  // ceil(|a_k| / |a_d|)
    if (q > largest) largest = q;
  }
  Integer bound(1);
  while (bound <= largest) bound *= Integer(2);
  return bound * Integer(2);
}

std::vector<Interval> isolate_real_roots(const IntegerPolynomial& p) {
  const RationalPolynomial sf = squarefree_part(to_rational(p));
  if (sf.degree() < 1) return {};
  const SturmSequence sturm(sf);
  const Rational bound(root_bound(p));

  std::vector<Interval> roots;
  // Depth-first over half-open intervals (lo, hi], visiting left halves first.
  std::vector<Interval> pending{{-bound, bound}};
  while (!pending.empty()) {
    Interval iv = pending.back();
    pending.pop_back();
    const int n = sturm.count_roots(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      if (sf(iv.hi).is_zero()) {
        roots.push_back({iv.hi, iv.hi});
        continue;
      }
      // Keep the isolating interval free of roots at its endpoints.
      while (sf(iv.lo).is_zero()) {
        const Rational mid = iv.midpoint();
        if (sf(mid).is_zero()) {
          iv = {mid, mid};
          break;
        }
        if (sturm.count_roots(mid, iv.hi) == 1) {
          iv.lo = mid;
        } else {
          iv.hi = mid;
        }
      }
      roots.push_back(iv);
      continue;
    }
    const Rational mid = iv.midpoint();
    pending.push_back({mid, iv.hi});
    pending.push_back({iv.lo, mid});
  }
  return roots;
}

Interval bisect_root(const IntegerPolynomial& p, Interval iv, const Rational& width_bound) {
  const int lo_sign = p(iv.lo).sign();
  while (iv.width() > width_bound) {
    const Rational mid = iv.midpoint();
    const int s = p(mid).sign();
    if (s == 0) return {mid, mid};
    if (s == lo_sign) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

bool has_rational_root(const IntegerPolynomial& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  if (p[0].is_zero()) return true;
  // A rational root k/q in lowest terms has q | lead, so it is a multiple of 1/|lead|.
  const Integer lead = abs(p.leading());
  const Rational grid_width(Integer(1), lead + Integer(1));
  for (Interval iv : isolate_real_roots(p)) {
    if (iv.width().is_zero()) return true;
    iv = bisect_root(p, iv, grid_width);
    if (iv.width().is_zero()) return true;
    const Integer first = (iv.lo * Rational(lead)).ceil();
    const Integer last = (iv.hi * Rational(lead)).floor();
    for (Integer k = first; k <= last; k += Integer(1)) {
      if (p(Rational(k, lead)).is_zero()) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// AlgebraicReal

AlgebraicReal::AlgebraicReal(Unchecked, IntegerPolynomial minpoly, Interval interval)
    : minpoly_(std::move(minpoly)), interval_(std::move(interval)) {}

AlgebraicReal::AlgebraicReal(IntegerPolynomial minpoly, Rational lo, Rational hi)
    : minpoly_(std::move(minpoly)), interval_{std::move(lo), std::move(hi)} {
  if (minpoly_.degree() < 1) throw std::invalid_argument("minimal polynomial must have degree >= 1");
  if (!(interval_.lo < interval_.hi)) {
    throw std::invalid_argument("isolating interval must satisfy lo < hi");
  }
  if (minpoly_(interval_.lo).is_zero() || minpoly_(interval_.hi).is_zero()) {
    throw std::invalid_argument("isolating interval endpoint is a root of the minimal polynomial");
  }
  const SturmSequence sturm(squarefree_part(to_rational(minpoly_)));
  const int n = sturm.count_roots(interval_.lo, interval_.hi);
  if (n != 1) {
    throw std::invalid_argument("interval (" + interval_.lo.str() + ", " + interval_.hi.str() +
                                ") contains " + std::to_string(n) + " roots of " + minpoly_.str() +
                                ", expected exactly one");
  }
  if ((degree() == 2 || degree() == 3) && has_rational_root(minpoly_)) {
    throw std::invalid_argument("minimal polynomial " + minpoly_.str() +
                                " has a rational root and is reducible");
  }
}

AlgebraicReal AlgebraicReal::rational(const Rational& q) {
  return AlgebraicReal(IntegerPolynomial{-q.num(), q.den()}, q - Rational(1), q + Rational(1));
}

AlgebraicReal AlgebraicReal::largest_real_root(const IntegerPolynomial& minpoly) {
  const auto roots = isolate_real_roots(minpoly);
  if (roots.empty()) throw std::invalid_argument(minpoly.str() + " has no real root");
  const Interval& top = roots.back();
  if (top.width().is_zero()) {
    if (minpoly.degree() == 1) return rational(top.lo);
    throw std::invalid_argument(minpoly.str() + " has a rational root and is reducible");
  }
  return AlgebraicReal(minpoly, top.lo, top.hi);
}

AlgebraicReal AlgebraicReal::refine(const Rational& width_bound) const {
  if (width_bound.sign() <= 0) throw std::invalid_argument("refine: width bound must be positive");
  if (interval_.width() <= width_bound) return *this;
  if (degree() == 1) {
    const Rational root = -Rational(minpoly_[0]) / Rational(minpoly_[1]);
    const Rational half = width_bound / Rational(2);
    return AlgebraicReal(Unchecked{}, minpoly_, {root - half, root + half});
  }
  return AlgebraicReal(Unchecked{}, minpoly_, bisect_root(minpoly_, interval_, width_bound));
}

bool AlgebraicReal::same_root(const AlgebraicReal& other) const {
  if (primitive_part(to_rational(minpoly_)) != primitive_part(to_rational(other.minpoly_))) {
    return false;
  }
  const Rational lo = std::max(interval_.lo, other.interval_.lo);
  const Rational hi = std::min(interval_.hi, other.interval_.hi);
  if (!(lo < hi)) return false;
  return SturmSequence(squarefree_part(to_rational(minpoly_))).count_roots(lo, hi) == 1 &&
         !minpoly_(hi).is_zero();
}

AlgebraicReal refine(const AlgebraicReal& a, const Rational& width_bound) {
  return a.refine(width_bound);
}

// ---------------------------------------------------------------------------
// NumberField

NumberField::NumberField(AlgebraicReal generator)
    : generator_(std::move(generator)),
      modulus_(make_monic(to_rational(generator_.minpoly()))),
      cached_(generator_.interval()) {}

std::shared_ptr<const NumberField> NumberField::make(AlgebraicReal generator) {
  return std::make_shared<const NumberField>(std::move(generator));
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static const auto q = make(AlgebraicReal::rational(Rational(0)));
  return q;
}

Interval NumberField::enclosure(const Rational& width_bound) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (cached_.width() > width_bound) {
    if (degree() == 1) {
      cached_ = generator_.refine(width_bound).interval();
    } else {
      cached_ = bisect_root(generator_.minpoly(), cached_, width_bound);
    }
  }
  return cached_;
}

bool NumberField::same_field(const NumberField& other) const {
  return this == &other || generator_.same_root(other.generator_);
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

std::vector<Rational> reduce(const NumberField& field, std::vector<Rational> coords) {
  const auto d = static_cast<std::size_t>(field.degree());
  if (coords.size() > d) {
    coords = divmod(RationalPolynomial(std::move(coords)), field.modulus()).second.coeffs();
  }
  coords.resize(d, Rational(0));
  return coords;
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("field element without a field");
  coords_ = reduce(*field_, std::move(coords));
}

FieldElement::FieldElement(FieldPtr field, const Rational& value)
    : FieldElement(std::move(field), std::vector<Rational>{value}) {}

FieldElement FieldElement::generator(FieldPtr field) {
  if (field->degree() == 1) {
    const auto& p = field->generator().minpoly();
    return FieldElement(field, -Rational(p[0]) / Rational(p[1]));
  }
  return FieldElement(std::move(field), std::vector<Rational>{Rational(0), Rational(1)});
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

Interval FieldElement::enclose(const Rational& generator_width) const {
  if (is_rational()) return {coords_.front(), coords_.front()};
  const Interval theta = field_->enclosure(generator_width);
  Interval acc{coords_.back(), coords_.back()};
  for (auto k = coords_.size() - 1; k-- > 0;) acc = acc * theta + coords_[k];
  return acc;
}

std::string FieldElement::key() const {
  std::string out;
  for (const auto& c : coords_) {
    out += c.str();
    out += ',';
  }
  return out;
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_ != o.field_ && !field_->same_field(*o.field_)) throw FieldMismatch();
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  const auto product = RationalPolynomial(coords_) * RationalPolynomial(o.coords_);
  coords_ = reduce(*field_, product.coeffs());
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= field_inv(o); }

FieldElement operator-(const FieldElement& a) {
  FieldElement r = a;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement operator+(FieldElement a, const Rational& b) {
  a.coords_.front() += b;
  return a;
}

FieldElement operator-(FieldElement a, const Rational& b) {
  a.coords_.front() -= b;
  return a;
}

FieldElement operator*(FieldElement a, const Rational& b) {
  for (auto& c : a.coords_) c *= b;
  return a;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  return a.coords_ == b.coords_;
}

FieldElement field_add(const FieldElement& x, const FieldElement& y) { return x + y; }

FieldElement field_mul(const FieldElement& x, const FieldElement& y) { return x * y; }

FieldElement field_inv(const FieldElement& x) {
  if (x.is_zero()) throw DivisionByZero();
  if (x.is_rational()) return FieldElement(x.field(), Rational(1) / x.rational_value());
  const auto [g, s] = extended_gcd(RationalPolynomial(x.coords()), x.field()->modulus());
  if (g.degree() != 0) {
    throw std::logic_error("minimal polynomial " + x.field()->generator().minpoly().str() +
                           " is reducible: shares the factor " + g.str());
  }
  return FieldElement(x.field(), s.coeffs());
}

namespace {

// A nonzero element can only vanish at the generator when the defining
// polynomial is reducible, which is taken on trust above degree 3.
void check_not_hidden_zero(const FieldElement& x) {
  const auto& gen = x.field()->generator();
  const auto g = extended_gcd(RationalPolynomial(x.coords()), x.field()->modulus()).gcd;
  if (g.degree() < 1) return;
  if (SturmSequence(squarefree_part(g)).count_roots(gen.interval().lo, gen.interval().hi) > 0) {
    throw std::logic_error("minimal polynomial " + gen.minpoly().str() + " is reducible: its factor " + g.str() +
                           " vanishes at the generator");
  }
}

// Refines the generator until `decided` accepts the value interval.
// `suspect` names the element that would be zero if refinement never ends.
template <typename Decided, typename Suspect>
Interval refine_until(const FieldElement& x, Decided decided, Suspect suspect) {
  Rational width = x.field()->generator().interval().width() / Rational(256);
  const Rational step(Integer(1), pow(Integer(2), 32));
  for (int round = 0;; ++round) {
    const Interval v = x.enclose(width);
    if (decided(v)) return v;
    if (round == 3) check_not_hidden_zero(suspect(v));
    width *= step;
  }
}

}  // namespace

int sign(const FieldElement& x) {
  if (x.is_rational()) return x.rational_value().sign();
  return refine_until(
             x, [](const Interval& v) { return v.excludes_zero(); }, [&](const Interval&) { return x; })
      .lo.sign();
}

Integer floor(const FieldElement& x) {
  if (x.is_rational()) return x.rational_value().floor();
  return refine_until(
             x, [](const Interval& v) { return v.lo.floor() == v.hi.floor(); },
             [&](const Interval& v) { return x - Rational(v.hi.floor()); })
      .lo.floor();
}

}  // namespace jpcf
