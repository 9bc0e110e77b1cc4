/* SPDX-License-Identifier: Apache-2.0 */

#include "io.hpp"

#include <algorithm>

namespace jpcf::io {

namespace {

std::string member(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string element(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw InputError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(member(path, key), "missing field");
  return *it;
}

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array");
  return j;
}

std::size_t size_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw InputError(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<Integer> integers_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], element(path, i)));
  return out;
}

Json tuples_to_json(const std::vector<QuotientTuple>& tuples) {
  Json out = Json::array();
  for (const auto& t : tuples) out.push_back(to_json(t));
  return out;
}

Json optional_recurrences(const std::vector<std::optional<LinearRecurrence>>& fits) {
  Json out = Json::array();
  for (const auto& f : fits) out.push_back(f ? to_json(*f) : Json(nullptr));
  return out;
}

Json matrix_to_json(const IntegerMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

Json error_to_json(const std::optional<ConvergentError>& e) {
  if (!e) return nullptr;
  return Json{{"convergent", to_json(std::vector<Rational>(e->convergent.begin(), e->convergent.end()))},
              {"error", Json::array({interval_to_json(e->error[0]), interval_to_json(e->error[1])})}};
}

}  // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column), "invalid JSON");
  }
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(Integer::parse(std::to_string(j.get<unsigned long long>())));
  if (j.is_number_float()) throw InputError(path, "floating-point values are not accepted, write \"p/q\"");
  if (!j.is_string()) throw InputError(path, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(path, e.what());
  }
}

Integer integer_from_json(const Json& j, const std::string& path) {
  const Rational x = rational_from_json(j, path);
  if (!x.is_integer()) throw InputError(path, "expected an integer, got " + x.str());
  return x.num();
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], element(path, i)));
  return out;
}

Json to_json(const Integer& x) { return x.str(); }
Json to_json(const Rational& x) { return x.str(); }

Json interval_to_json(const Interval& iv, int digits) {
  return Json{{"lo", iv.lo.str()},
              {"hi", iv.hi.str()},
              {"width", iv.width().str()},
              {"decimal", {{"lo", to_decimal(iv.lo, digits)}, {"hi", to_decimal(iv.hi, digits)}}}};
}

AlgebraicReal algebraic_from_json(const Json& j, const std::string& path) {
  const auto coeffs = integers_from_json(require(j, path, "minpoly"), member(path, "minpoly"));
  const auto& iv = require(j, path, "interval");
  const std::string ivp = member(path, "interval");
  if (!iv.is_array() || iv.size() != 2) throw InputError(ivp, "expected [\"lo\", \"hi\"]");
  const Rational lo = rational_from_json(iv[0], element(ivp, 0));
  const Rational hi = rational_from_json(iv[1], element(ivp, 1));
  try {
    return AlgebraicReal(IntegerPolynomial(coeffs), lo, hi);
  } catch (const std::invalid_argument& e) {
    throw InputError(path, e.what());
  }
}

Json to_json(const AlgebraicReal& a) {
  return Json{{"minpoly", to_json(a.minpoly().coeffs())},
              {"interval", Json::array({a.interval().lo.str(), a.interval().hi.str()})}};
}

FieldElement element_from_json(const FieldPtr& field, const Json& j, const std::string& path) {
  if (!j.is_object()) {
    if (field->degree() == 1) return FieldElement(field, rational_from_json(j, path));
    throw InputError(path, "expected {\"coords\": [...]}");
  }
  auto coords = rationals_from_json(require(j, path, "coords"), member(path, "coords"));
  if (coords.size() > static_cast<std::size_t>(field->degree())) {
    throw InputError(member(path, "coords"), "has " + std::to_string(coords.size()) +
                                                 " entries for a field of degree " +
                                                 std::to_string(field->degree()));
  }
  return FieldElement(field, std::move(coords));
}

Json to_json(const FieldElement& x) { return Json{{"coords", to_json(x.coords())}}; }

InputTuple input_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("", "expected an object with \"values\"");
  FieldPtr field = NumberField::rationals();
  if (j.contains("field")) field = NumberField::make(algebraic_from_json(j["field"], "field"));
  const auto& values = require_array(require(j, "", "values"), "values");
  if (values.empty()) throw InputError("values", "needs at least one entry");
  State state;
  for (std::size_t i = 0; i < values.size(); ++i) state.push_back(element_from_json(field, values[i], element("values", i)));
  return InputTuple(std::move(state));
}

Json input_to_json(const InputTuple& input) {
  Json values = Json::array();
  for (const auto& x : input.values()) values.push_back(to_json(x));
  const auto& field = input.values().front().field();
  Json out = Json::object();
  if (field->degree() > 1) out["field"] = to_json(field->generator());
  out["values"] = values;
  return out;
}

Json to_json(const ExpansionStatus& s) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Terminated>) {
          return Json{{"kind", "Terminated"}, {"step", v.step}};
        } else if constexpr (std::is_same_v<T, CycleDetected>) {
          return Json{{"kind", "CycleDetected"}, {"preperiod", v.preperiod}, {"period", v.period}};
        } else {
          return Json{{"kind", "Truncated"}, {"max_iter", v.max_iter}};
        }
      },
      s);
}

ExpansionStatus status_from_json(const Json& j, const std::string& path) {
  const auto& kind = require(j, path, "kind");
  const std::string k = kind.is_string() ? kind.get<std::string>() : "";
  if (k == "Terminated") return Terminated{size_from_json(require(j, path, "step"), member(path, "step"))};
  if (k == "CycleDetected") {
    const auto period = size_from_json(require(j, path, "period"), member(path, "period"));
    if (period == 0) throw InputError(member(path, "period"), "must be >= 1");
    return CycleDetected{size_from_json(require(j, path, "preperiod"), member(path, "preperiod")), period};
  }
  if (k == "Truncated") return Truncated{size_from_json(require(j, path, "max_iter"), member(path, "max_iter"))};
  throw InputError(member(path, "kind"), "expected Terminated, CycleDetected or Truncated");
}

Json to_json(const Expansion& e) {
  Json zeros = Json::array();
  for (const auto& [n, i] : e.zero_quotients) zeros.push_back(Json::array({n, i}));
  return Json{{"m", e.dim}, {"quotients", tuples_to_json(e.quotients)}, {"status", to_json(e.status)},
              {"zero_quotients", zeros}};
}

Expansion expansion_from_json(const Json& j) {
  Expansion e;
  e.dim = size_from_json(require(j, "", "m"), "m");
  if (e.dim == 0) throw InputError("m", "must be >= 1");
  const auto& q = require_array(require(j, "", "quotients"), "quotients");
  for (std::size_t n = 0; n < q.size(); ++n) {
    auto tuple = integers_from_json(q[n], element("quotients", n));
    if (tuple.size() != e.dim) {
      throw InputError(element("quotients", n), "expected " + std::to_string(e.dim) + " quotients");
    }
    e.quotients.push_back(std::move(tuple));
  }
  e.status = status_from_json(require(j, "", "status"), "status");
  if (const auto* c = std::get_if<CycleDetected>(&e.status); c && c->preperiod + c->period > e.size()) {
    throw InputError("status", "cycle extends past the recorded quotients");
  }
  if (j.contains("zero_quotients")) {
    const auto& z = require_array(j["zero_quotients"], "zero_quotients");
    for (std::size_t k = 0; k < z.size(); ++k) {
      const std::string p = element("zero_quotients", k);
      if (!z[k].is_array() || z[k].size() != 2) throw InputError(p, "expected [n, axis]");
      e.zero_quotients.emplace_back(size_from_json(z[k][0], element(p, 0)), size_from_json(z[k][1], element(p, 1)));
    }
  }
  return e;
}

PeriodicSpec periodic_spec_from_json(const Json& j) {
  const std::size_t m = size_from_json(require(j, "", "m"), "m");
  PeriodicSpec s;
  for (const char* key : {"pre", "period"}) {
    const auto& axes = require_array(require(j, "", key), key);
    if (axes.size() != m) throw InputError(key, "expected " + std::to_string(m) + " axes");
    auto& target = std::string_view(key) == "pre" ? s.pre : s.period;
    for (std::size_t i = 0; i < m; ++i) target.push_back(integers_from_json(axes[i], element(key, i)));
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError("", e.what());
  }
  return s;
}

Json to_json(const PeriodicSpec& s) {
  return Json{{"m", s.dim()}, {"pre", tuples_to_json(s.pre)}, {"period", tuples_to_json(s.period)}};
}

LinearRecurrence recurrence_from_json(const Json& j, const std::string& path) {
  LinearRecurrence r;
  const std::size_t order = size_from_json(require(j, path, "order"), member(path, "order"));
  r.coeffs = rationals_from_json(require(j, path, "coeffs"), member(path, "coeffs"));
  r.init = rationals_from_json(require(j, path, "init"), member(path, "init"));
  r.offset = size_from_json(require(j, path, "offset"), member(path, "offset"));
  if (r.coeffs.size() != order) throw InputError(member(path, "coeffs"), "length differs from order");
  if (r.init.size() != r.offset + order) throw InputError(member(path, "init"), "needs offset + order terms");
  return r;
}

Json to_json(const LinearRecurrence& r) {
  return Json{{"order", r.order()}, {"coeffs", to_json(r.coeffs)}, {"init", to_json(r.init)}, {"offset", r.offset}};
}

CubicSpec cubic_from_json(const Json& j) {
  return CubicSpec{integer_from_json(require(j, "", "p"), "p"), integer_from_json(require(j, "", "q"), "q"),
                   integer_from_json(require(j, "", "r"), "r"), integer_from_json(require(j, "", "z"), "z")};
}

Json to_json(const CubicSpec& s) {
  return Json{{"p", to_json(s.p)}, {"q", to_json(s.q)}, {"r", to_json(s.r)}, {"z", to_json(s.z)}};
}

std::vector<Rational> sequence_from_json(const Json& j) {
  if (j.is_array()) return rationals_from_json(j, "");
  return rationals_from_json(require(j, "", "terms"), "terms");
}

Json to_json(const ConvergentTable<Rational>& t) {
  Json rows = Json::array();
  for (long n = t.first_index(); n <= t.last_index(); ++n) {
    Json row{{"n", n}, {"A", to_json(std::vector<Rational>(t.row(n).begin(), t.row(n).end()))}};
    if (n < 0) {
      row["convergent"] = nullptr;
    } else {
      try {
        row["convergent"] = to_json(convergent(t, n));
      } catch (const ZeroDenominator&) {
        row["convergent"] = nullptr;
      }
    }
    rows.push_back(row);
  }
  return Json{{"m", t.dim()}, {"rows", rows}};
}

Json to_json(const ForwardReport& r) {
  Json matrices = Json::array();
  for (const auto& m : r.cycle.matrices) matrices.push_back(matrix_to_json(m));
  Json axes = Json::array();
  for (std::size_t i = 0; i < r.axes.size(); ++i) {
    const auto& a = r.axes[i];
    axes.push_back(Json{{"axis", i + 1},
                        {"passed", a.passed},
                        {"checked", a.checked},
                        {"first_failure", a.first_failure ? Json(*a.first_failure) : Json(nullptr)}});
  }
  Json recurrences = Json::array();
  for (const auto& rec : derived_recurrence(r.cycle)) recurrences.push_back(to_json(rec));
  return Json{{"spec", to_json(r.cycle.spec)},
              {"u", r.cycle.u},
              {"v", r.cycle.v},
              {"char_poly", to_json(r.cycle.shared_char_poly.coeffs())},
              {"char_poly_text", r.cycle.shared_char_poly.str()},
              {"cycle_matrices", matrices},
              {"horizon", r.horizon},
              {"axes", axes},
              {"recurrences", recurrences},
              {"passed", r.passed()}};
}

Json to_json(const ConverseReport& r) {
  Json periodicity = Json::array();
  for (const auto& p : r.periodicity) {
    periodicity.push_back(p ? Json{{"preperiod", p->preperiod}, {"period", p->period}} : Json(nullptr));
  }
  return Json{{"terms", r.terms},
              {"fits", optional_recurrences(r.fits)},
              {"periodicity", periodicity},
              {"all_fit", r.all_fit()},
              {"all_periodic", r.all_periodic()},
              {"consistent", r.consistent()}};
}

Json to_json(const ComparisonReport& r) {
  Json rep{{"pre", Json::array({to_json(r.rep.pre[0]), to_json(r.rep.pre[1])})},
           {"period", Json::array({to_json(r.rep.period[0]), to_json(r.rep.period[1])})}};
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jq = nullptr;
    if (row.jacobi_quotients) jq = Json::array({to_json((*row.jacobi_quotients)[0]), to_json((*row.jacobi_quotients)[1])});
    rows.push_back(Json{{"n", row.n},
                        {"jacobi_quotients", jq},
                        {"rep_quotients", Json::array({to_json(row.rep_quotients[0]), to_json(row.rep_quotients[1])})},
                        {"jacobi", error_to_json(row.jacobi)},
                        {"rep", error_to_json(row.rep)}});
  }
  return Json{{"target", Json::array({to_json(r.target[0]), to_json(r.target[1])})},
              {"alpha", to_json(r.target[1].field()->generator())},
              {"comparable", r.comparable},
              {"note", r.note},
              {"jacobi", to_json(r.jacobi)},
              {"representation", rep},
              {"rows", rows},
              {"rep_zero_denominators", r.rep_zero_denominators},
              {"fit_max_order", r.fit_max_order},
              {"rep_fits", optional_recurrences(r.rep_fits)},
              {"jacobi_fits", optional_recurrences(r.jacobi_fits)}};
}

}  // namespace jpcf::io
