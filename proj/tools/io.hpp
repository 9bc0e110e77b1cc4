/* SPDX-License-Identifier: Apache-2.0 */

// JSON schemas of the command-line tool. Every number is written as an exact
// string ("p/q" or an integer); readers also accept JSON integers but reject
// floating-point values.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jpcf/algebraic.hpp"
#include "jpcf/convergents.hpp"
#include "jpcf/cubic_rep.hpp"
#include "jpcf/jacobi_perron.hpp"
#include "jpcf/lrs.hpp"
#include "jpcf/periodicity.hpp"

namespace jpcf::io {

using Json = nlohmann::ordered_json;

// Malformed input. `where` is a JSON path such as "values[1].coords[0]" or a
// "line L, column C" position for syntax errors.
class InputError : public std::invalid_argument {
 public:
  InputError(std::string where, const std::string& what)
      : std::invalid_argument(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

Json parse_document(std::string_view text);

Rational rational_from_json(const Json& j, const std::string& path);
Integer integer_from_json(const Json& j, const std::string& path);
std::vector<Rational> rationals_from_json(const Json& j, const std::string& path);

Json to_json(const Integer& x);
Json to_json(const Rational& x);
template <typename T>
Json to_json(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

// {"lo", "hi", "width", "decimal": {"lo", "hi"}}
Json interval_to_json(const Interval& iv, int digits = 12);

// {"minpoly": [c_0, ..., c_d], "interval": ["lo", "hi"]}
AlgebraicReal algebraic_from_json(const Json& j, const std::string& path = "");
Json to_json(const AlgebraicReal& a);

// {"coords": ["p/q", ...]}
FieldElement element_from_json(const FieldPtr& field, const Json& j, const std::string& path);
Json to_json(const FieldElement& x);

// {"field": <algebraic number>, "values": [<field element>, ...]}. Without
// "field" the values are rationals and may be given as plain strings.
InputTuple input_from_json(const Json& j);
Json input_to_json(const InputTuple& input);

Json to_json(const ExpansionStatus& s);
ExpansionStatus status_from_json(const Json& j, const std::string& path);
// {"m", "quotients": [[a^(1), ..., a^(m)], ...], "status": {...}}
Json to_json(const Expansion& e);
Expansion expansion_from_json(const Json& j);

// {"m", "pre": [[...] x m], "period": [[...] x m]}
PeriodicSpec periodic_spec_from_json(const Json& j);
Json to_json(const PeriodicSpec& s);

// {"order", "coeffs", "init", "offset"}
LinearRecurrence recurrence_from_json(const Json& j, const std::string& path = "");
Json to_json(const LinearRecurrence& r);

// {"p", "q", "r", "z"}
CubicSpec cubic_from_json(const Json& j);
Json to_json(const CubicSpec& s);

// A bare array of terms or {"terms": [...]}.
std::vector<Rational> sequence_from_json(const Json& j);

// Rows n = first..last: {"n", "A": [...], "convergent": [...] or null}.
Json to_json(const ConvergentTable<Rational>& t);

Json to_json(const ForwardReport& r);
Json to_json(const ConverseReport& r);
Json to_json(const ComparisonReport& r);

}  // namespace jpcf::io
