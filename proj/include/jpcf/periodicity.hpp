/* SPDX-License-Identifier: Apache-2.0 */

// Periodic quotient streams and linear recurrences on their convergents.
//
// Forward direction: for a periodic stream the products of one full period of
// step matrices (the cycle matrices M_0..M_{u-1}) share a characteristic
// polynomial x^(m+1) - sum_j c_j x^j, and by Cayley-Hamilton every A_n^(i)
// satisfies A_{n+(m+1)u} = sum_j c_j A_{n+ju} once the stream is periodic.
//
// Converse direction: fit minimal recurrences to the convergents of an
// expansion, then look for periodicity in its quotient streams.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "jpcf/convergents.hpp"
#include "jpcf/jacobi_perron.hpp"
#include "jpcf/lrs.hpp"
#include "jpcf/numeric.hpp"
#include "jpcf/polynomial.hpp"

namespace jpcf {

// Per axis i: preperiod a_0^(i)..a_{p_i-1}^(i), then b_0^(i)..b_{q_i-1}^(i)
// repeated forever.
struct PeriodicSpec {
  std::vector<std::vector<Integer>> pre;
  std::vector<std::vector<Integer>> period;

  std::size_t dim() const { return pre.size(); }
  // Throws std::invalid_argument unless pre and period have m >= 1 axes and
  // every period is nonempty.
  void validate() const;
  // b^(1) >= 1 and every later quotient >= 0, as a Jacobi-Perron expansion
  // would produce.
  bool jp_admissible() const;
  std::size_t max_preperiod() const;
  // a_n^(axis), axis counted from 1.
  const Integer& quotient(std::size_t n, std::size_t axis) const;
  // The first `length` quotient tuples.
  std::vector<QuotientTuple> stream(std::size_t length) const;
};

class SharedPolyViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CycleData {
  PeriodicSpec spec;
  std::size_t u = 0;                 // lcm of the period lengths
  std::vector<std::size_t> v;        // max preperiod - p_i
  std::vector<IntegerMatrix> matrices;
  IntegerPolynomial shared_char_poly;  // degree m + 1
};

// Throws SharedPolyViolation if some M_i has a different characteristic
// polynomial than M_0.
CycleData build_cycle_data(const PeriodicSpec& spec);

// One recurrence per axis i = 1..m+1. Each has order (m+1)u with nonzero
// coefficients only at lags u, 2u, ..., (m+1)u, and offset max_preperiod: it
// encodes A_{n+(m+1)u} = sum_j c_j A_{n+ju} for n >= max(p_1..p_m).
std::vector<LinearRecurrence> derived_recurrence(const CycleData& cd);

struct AxisCheck {
  bool passed = true;
  std::optional<long> first_failure;
  std::size_t checked = 0;
};

struct ForwardReport {
  CycleData cycle;
  std::size_t horizon = 0;
  std::vector<AxisCheck> axes;  // i = 1..m+1

  bool passed() const;
};

// Checks the derived relation exactly at every n >= max preperiod with
// n + (m+1)u <= horizon. Throws std::invalid_argument when
// horizon < max preperiod + 3(m+1)u.
ForwardReport verify_forward(const PeriodicSpec& spec, std::size_t horizon);

struct ConverseReport {
  std::size_t terms = 0;  // rows 0..terms-1 were used
  std::vector<std::optional<LinearRecurrence>> fits;      // per A^(i), i = 1..m+1
  std::vector<std::optional<Periodicity>> periodicity;    // per a^(i), i = 1..m; empty unless all fits succeed
  bool all_fit() const;
  bool all_periodic() const;
  // True unless every A^(i) fits and some quotient sequence shows no period,
  // which would contradict the converse on this prefix.
  bool consistent() const;
};

// Uses rows 0..last of the table and the matching quotients of the expansion
// (a detected cycle is unrolled as needed). Throws InsufficientData when the
// table has fewer than 2 * max_order + 4 rows from n = 0.
ConverseReport verify_converse(const Expansion& expansion, const ConvergentTable<Integer>& table,
                               std::size_t max_order);

}  // namespace jpcf
