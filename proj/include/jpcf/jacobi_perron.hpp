/* SPDX-License-Identifier: Apache-2.0 */

// The Jacobi-Perron algorithm on an m-tuple of elements of one real number
// field:
//
//   a_n^(i)        = floor(alpha_n^(i))                          i = 1..m
//   alpha_{n+1}^(1) = 1 / (alpha_n^(m) - a_n^(m))
//   alpha_{n+1}^(i) = (alpha_n^(i-1) - a_n^(i-1)) / (alpha_n^(m) - a_n^(m))   i = 2..m
//
// For m = 1 this is the classical continued fraction algorithm.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "jpcf/algebraic.hpp"
#include "jpcf/numeric.hpp"

namespace jpcf {

using State = std::vector<FieldElement>;
using QuotientTuple = std::vector<Integer>;

// alpha_0^(1), ..., alpha_0^(m), all in one field.
class InputTuple {
 public:
  // Throws std::invalid_argument for an empty tuple and FieldMismatch for
  // values from different fields.
  explicit InputTuple(State values);

  std::size_t dim() const { return values_.size(); }
  const State& values() const { return values_; }

 private:
  State values_;
};

struct ExpansionStep {
  QuotientTuple quotients;
  // alpha_{n+1}; empty when alpha_n^(m) - a_n^(m) is exactly zero, which
  // terminates the expansion after this step.
  std::optional<State> state_after;

  bool terminates() const { return !state_after.has_value(); }
};

struct Terminated {
  std::size_t step;  // index of the last step
  friend bool operator==(const Terminated&, const Terminated&) = default;
};
struct CycleDetected {
  std::size_t preperiod;
  std::size_t period;
  friend bool operator==(const CycleDetected&, const CycleDetected&) = default;
};
struct Truncated {
  std::size_t max_iter;
  friend bool operator==(const Truncated&, const Truncated&) = default;
};
using ExpansionStatus = std::variant<Terminated, CycleDetected, Truncated>;

struct Expansion {
  std::size_t dim = 0;
  // quotients[n] = (a_n^(1), ..., a_n^(m)).
  std::vector<QuotientTuple> quotients;
  // states[n] = alpha_n, the state before step n. Producers that do not track
  // field states (classical_cf on quadratic input) leave this empty.
  std::vector<State> states;
  ExpansionStatus status = Truncated{0};
  // (n, i) with n >= 1 and a_n^(i) = 0, axis i counted from 1. Allowed for
  // i >= 2; recorded because the stronger claim a_n^(i) > 0 does not follow
  // from the iteration.
  std::vector<std::pair<std::size_t, std::size_t>> zero_quotients;

  std::size_t size() const { return quotients.size(); }
  // The first `length` quotient tuples, unrolling a detected cycle as far as
  // needed. Throws std::out_of_range when a terminated or truncated expansion
  // is shorter than `length`.
  std::vector<QuotientTuple> quotient_stream(std::size_t length) const;
  // Quotients a_n^(axis) of one axis (counted from 1) over the stream.
  std::vector<Integer> axis_quotients(std::size_t axis, std::size_t length) const;
};

ExpansionStep jp_step(const State& state);

// Iterates jp_step, keying every visited state by its exact coordinate
// encoding. A revisited state yields CycleDetected with the minimal preperiod
// and period; a zero fractional part yields Terminated; otherwise the result
// is Truncated after max_iter steps. Throws std::invalid_argument if
// max_iter == 0 and std::logic_error if the positivity invariants of the
// iteration are violated.
Expansion expand(const InputTuple& input, std::size_t max_iter);

// Classical continued fraction of x, implemented independently of expand:
// the Euclidean algorithm for rationals, the integer (P + sqrt(D)) / Q
// recurrence for quadratic irrationals and direct field iteration otherwise.
Expansion classical_cf(const FieldElement& x, std::size_t max_iter);

const char* status_name(const ExpansionStatus& status);

}  // namespace jpcf
