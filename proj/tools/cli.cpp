/* SPDX-License-Identifier: Apache-2.0 */

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "io.hpp"

namespace jpcf::cli {

namespace {

using io::Json;

struct Options {
  RunConfig config;
  std::string max_iter = "500";
  std::string precision = "1e-30";
  std::string format = "json";
  std::string input;
  std::size_t horizon = 0;
  std::size_t depth = 0;
  std::size_t batch = 0;
  std::size_t max_order = 0;
  std::uint64_t seed = 1;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty()) throw io::InputError("", "no input file given");
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path);
  if (!file) throw io::InputError(path, "cannot open file");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

Json load(const Options& o, std::istream& in) { return io::parse_document(read_input(o.input, in)); }

std::string join(const std::vector<std::string>& cells, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out;
}

template <typename T>
std::vector<std::string> strings(const std::vector<T>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::string status_text(const ExpansionStatus& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Terminated>) {
          return "Terminated(step=" + std::to_string(v.step) + ")";
        } else if constexpr (std::is_same_v<T, CycleDetected>) {
          return "CycleDetected(preperiod=" + std::to_string(v.preperiod) + ", period=" + std::to_string(v.period) +
                 ")";
        } else {
          return "Truncated(max_iter=" + std::to_string(v.max_iter) + ")";
        }
      },
      s);
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Quotient tuples available from an expansion, unrolling a cycle up to `want`.
std::vector<QuotientTuple> available_stream(const Expansion& e, std::size_t want) {
  if (std::holds_alternative<CycleDetected>(e.status)) return e.quotient_stream(want);
  return e.quotient_stream(std::min(want, e.size()));
}

int cmd_expand(const Options& o, std::istream& in, std::ostream& out) {
  const auto input = io::input_from_json(load(o, in));
  const auto e = expand(input, o.config.max_iter);
  switch (o.config.format) {
    case Format::json: {
      Json j = io::to_json(e);
      j["input"] = io::input_to_json(input);
      emit_json(out, j);
      break;
    }
    case Format::csv: {
      out << "# status: " << status_text(e.status) << '\n';
      std::vector<std::string> header{"n"};
      for (std::size_t i = 1; i <= e.dim; ++i) header.push_back("a" + std::to_string(i));
      out << join(header) << '\n';
      for (std::size_t n = 0; n < e.size(); ++n) {
        out << n << ',' << join(strings(e.quotients[n])) << '\n';
      }
      break;
    }
    case Format::text:
      out << "m = " << e.dim << ", " << e.size() << " steps, status " << status_text(e.status) << '\n';
      for (std::size_t n = 0; n < e.size(); ++n) out << "a_" << n << " = (" << join(strings(e.quotients[n]), ' ') << ")\n";
      for (const auto& [n, i] : e.zero_quotients) out << "note: a_" << n << "^(" << i << ") = 0\n";
      break;
  }
  return kOk;
}

int cmd_convergents(const Options& o, std::istream& in, std::ostream& out) {
  const Json j = load(o, in);
  const std::size_t rows = (o.depth ? o.depth : 20) + 1;
  std::vector<std::vector<Rational>> quotients;
  if (j.is_object() && j.contains("values")) {
    const auto e = expand(io::input_from_json(j), o.config.max_iter);
    quotients = convert_quotients<Rational>(available_stream(e, rows));
  } else if (j.is_object() && j.contains("status")) {
    quotients = convert_quotients<Rational>(available_stream(io::expansion_from_json(j), rows));
  } else {
    if (!j.is_object() || !j.contains("quotients")) {
      throw io::InputError("", "expected an input tuple, an expansion report or {\"m\", \"quotients\"}");
    }
    const auto& q = j["quotients"];
    if (!q.is_array()) throw io::InputError("quotients", "expected an array");
    for (std::size_t n = 0; n < q.size() && n < rows; ++n) {
      quotients.push_back(io::rationals_from_json(q[n], "quotients[" + std::to_string(n) + "]"));
    }
  }
  if (quotients.empty()) throw io::InputError("quotients", "needs at least one tuple");
  ConvergentTable<Rational> table(quotients.front());
  for (std::size_t n = 1; n < quotients.size(); ++n) {
    try {
      table.extend(quotients[n]);
    } catch (const DimensionMismatch& e) {
      throw io::InputError("quotients[" + std::to_string(n) + "]", e.what());
    }
  }
  const Json tj = io::to_json(table);
  switch (o.config.format) {
    case Format::json:
      emit_json(out, tj);
      break;
    case Format::csv:
    case Format::text: {
      const char sep = o.config.format == Format::csv ? ',' : ' ';
      std::vector<std::string> header{"n"};
      for (std::size_t i = 1; i <= table.dim() + 1; ++i) header.push_back("A" + std::to_string(i));
      for (std::size_t i = 1; i <= table.dim(); ++i) header.push_back("c" + std::to_string(i));
      out << join(header, sep) << '\n';
      for (const auto& row : tj["rows"]) {
        std::vector<std::string> cells{std::to_string(row["n"].get<long>())};
        for (const auto& a : row["A"]) cells.push_back(a.get<std::string>());
        for (std::size_t i = 0; i < table.dim(); ++i) {
          cells.push_back(row["convergent"].is_null() ? "" : row["convergent"][i].get<std::string>());
        }
        out << join(cells, sep) << '\n';
      }
      break;
    }
  }
  return kOk;
}

std::size_t minimum_horizon(const PeriodicSpec& s) {
  std::size_t u = 1;
  for (const auto& b : s.period) u = std::lcm(u, b.size());
  return s.max_preperiod() + 3 * (s.dim() + 1) * u;
}

PeriodicSpec random_spec(std::mt19937_64& rng) {
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  PeriodicSpec s;
  const long m = uniform(2, 3);
  for (long i = 0; i < m; ++i) {
    const long lowest = i == 0 ? 1 : 0;
    std::vector<Integer> a, b;
    for (long k = uniform(0, 3); k > 0; --k) a.emplace_back(uniform(lowest, 5));
    for (long k = uniform(1, 4); k > 0; --k) b.emplace_back(uniform(lowest, 5));
    s.pre.push_back(std::move(a));
    s.period.push_back(std::move(b));
  }
  return s;
}

int cmd_verify_forward(const Options& o, std::istream& in, std::ostream& out) {
  if (o.batch == 0) {
    const auto spec = io::periodic_spec_from_json(load(o, in));
    const std::size_t horizon = o.horizon ? o.horizon : std::max<std::size_t>(150, minimum_horizon(spec));
    const auto report = verify_forward(spec, horizon);
    switch (o.config.format) {
      case Format::json:
        emit_json(out, io::to_json(report));
        break;
      case Format::csv:
        out << "axis,passed,checked,first_failure\n";
        for (std::size_t i = 0; i < report.axes.size(); ++i) {
          const auto& a = report.axes[i];
          out << i + 1 << ',' << (a.passed ? "true" : "false") << ',' << a.checked << ','
              << (a.first_failure ? std::to_string(*a.first_failure) : "") << '\n';
        }
        break;
      case Format::text:
        out << "u = " << report.cycle.u << ", shared characteristic polynomial " << report.cycle.shared_char_poly.str()
            << "\nhorizon " << horizon << ": " << (report.passed() ? "pass" : "FAIL") << '\n';
        break;
    }
    return report.passed() ? kOk : kConsistencyViolation;
  }

  // Batch of random specs, fanned out over threads; each case is independent.
  std::mt19937_64 rng(o.seed);
  std::vector<PeriodicSpec> specs;
  for (std::size_t k = 0; k < o.batch; ++k) specs.push_back(random_spec(rng));
  std::vector<int> outcome(specs.size(), 0);  // 1 pass, 0 fail, -1 violation
  std::vector<std::string> messages(specs.size());
  const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < specs.size(); k += workers) {
        try {
          const std::size_t horizon = std::max(o.horizon ? o.horizon : 150, minimum_horizon(specs[k]));
          outcome[k] = verify_forward(specs[k], horizon).passed() ? 1 : 0;
        } catch (const std::exception& e) {
          outcome[k] = -1;
          messages[k] = e.what();
        }
      }
    });
  }
  for (auto& t : pool) t.join();

  const auto passed = static_cast<std::size_t>(std::count(outcome.begin(), outcome.end(), 1));
  Json failures = Json::array();
  for (std::size_t k = 0; k < specs.size(); ++k) {
    if (outcome[k] != 1) failures.push_back(Json{{"spec", io::to_json(specs[k])}, {"error", messages[k]}});
  }
  switch (o.config.format) {
    case Format::json:
      emit_json(out, Json{{"seed", o.seed}, {"cases", specs.size()}, {"passed", passed}, {"failures", failures}});
      break;
    case Format::csv:
      out << "seed,cases,passed\n" << o.seed << ',' << specs.size() << ',' << passed << '\n';
      break;
    case Format::text:
      out << passed << " of " << specs.size() << " random periodic specs pass (seed " << o.seed << ")\n";
      break;
  }
  return passed == specs.size() ? kOk : kConsistencyViolation;
}

int cmd_verify_converse(const Options& o, std::istream& in, std::ostream& out) {
  const auto input = io::input_from_json(load(o, in));
  const auto e = expand(input, o.config.max_iter);
  const std::size_t rows = o.depth ? o.depth : 40;
  const std::size_t max_order = o.max_order ? o.max_order : 12;
  const auto stream = available_stream(e, rows);
  if (stream.size() < 2 * max_order + 4) {
    throw InsufficientData("expansion gives " + std::to_string(stream.size()) + " rows (status " +
                           status_text(e.status) + "), " + std::to_string(2 * max_order + 4) + " are needed");
  }
  const auto table = ConvergentTable<Integer>::from_quotients(stream);
  const auto report = verify_converse(e, table, max_order);
  switch (o.config.format) {
    case Format::json: {
      Json j = io::to_json(report);
      j["expansion"] = io::to_json(e);
      emit_json(out, j);
      break;
    }
    case Format::csv:
      out << "axis,fit_order,fit_offset,preperiod,period\n";
      for (std::size_t i = 0; i < report.fits.size(); ++i) {
        const auto& f = report.fits[i];
        out << i + 1 << ',' << (f ? std::to_string(f->order()) : "") << ',' << (f ? std::to_string(f->offset) : "");
        if (i < report.periodicity.size() && report.periodicity[i]) {
          out << ',' << report.periodicity[i]->preperiod << ',' << report.periodicity[i]->period;
        } else {
          out << ",,";
        }
        out << '\n';
      }
      break;
    case Format::text:
      out << "expansion status " << status_text(e.status) << "; " << report.terms << " rows; all fit: "
          << (report.all_fit() ? "yes" : "no") << "; all periodic: " << (report.all_periodic() ? "yes" : "no")
          << "; consistent: " << (report.consistent() ? "yes" : "no") << '\n';
      break;
  }
  return kOk;
}

int cmd_cubic(const Options& o, std::istream& in, std::ostream& out) {
  const auto spec = io::cubic_from_json(load(o, in));
  const std::size_t depth = o.depth ? o.depth : 30;
  const auto report = compare_with_jacobi(spec, depth, o.config.precision);
  switch (o.config.format) {
    case Format::json: {
      Json j{{"spec", io::to_json(spec)}};
      j.update(io::to_json(report));
      emit_json(out, j);
      break;
    }
    case Format::csv:
    case Format::text: {
      const bool csv = o.config.format == Format::csv;
      const char sep = csv ? ',' : ' ';
      out << join({"n", "jacobi_a1", "jacobi_a2", "rep_a1", "rep_a2", "jacobi_err1", "jacobi_err2", "rep_err1",
                   "rep_err2"},
                  sep)
          << '\n';
      auto err = [&](const std::optional<ConvergentError>& e, std::size_t i) -> std::string {
        if (!e) return "";
        return csv ? e->error[i].hi.str() : to_decimal(e->error[i].hi, 6);
      };
      for (const auto& row : report.rows) {
        std::vector<std::string> cells{std::to_string(row.n)};
        for (std::size_t i = 0; i < 2; ++i) cells.push_back(row.jacobi_quotients ? (*row.jacobi_quotients)[i].str() : "");
        for (std::size_t i = 0; i < 2; ++i) cells.push_back(row.rep_quotients[i].str());
        for (std::size_t i = 0; i < 2; ++i) cells.push_back(err(row.jacobi, i));
        for (std::size_t i = 0; i < 2; ++i) cells.push_back(err(row.rep, i));
        out << join(cells, sep) << '\n';
      }
      if (!report.note.empty()) out << "# " << report.note << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_lrs_fit(const Options& o, std::istream& in, std::ostream& out) {
  const auto terms = io::sequence_from_json(load(o, in));
  std::size_t max_order = o.max_order;
  if (max_order == 0) max_order = terms.size() >= 4 ? std::min<std::size_t>(12, (terms.size() - 4) / 2) : 0;
  const auto fit = fit_minimal(terms, max_order);
  switch (o.config.format) {
    case Format::json: {
      Json j{{"terms", terms.size()}, {"max_order", max_order}, {"result", fit ? "Fit" : "NoFit"}};
      j["fit"] = fit ? io::to_json(*fit) : Json(nullptr);
      j["char_poly_text"] = fit ? Json(fit->char_poly().str()) : Json(nullptr);
      emit_json(out, j);
      break;
    }
    case Format::csv:
      out << "result,order,offset,coeffs\n";
      if (fit) {
        out << "Fit," << fit->order() << ',' << fit->offset << ',' << join(strings(fit->coeffs), ' ') << '\n';
      } else {
        out << "NoFit,,,\n";
      }
      break;
    case Format::text:
      if (fit) {
        out << "order " << fit->order() << ", offset " << fit->offset << ", characteristic polynomial "
            << fit->char_poly().str() << '\n';
      } else {
        out << "NoFit: no recurrence of length <= " << max_order << '\n';
      }
      break;
  }
  return kOk;
}

}  // namespace

Rational parse_precision(const std::string& text) {
  Rational value;
  const auto e = text.find_first_of("eE");
  if (e == std::string::npos) {
    value = Rational::parse(text);
  } else {
    const Rational mantissa = Rational::parse(text.substr(0, e));
    const Integer exponent = Integer::parse(text.substr(e + 1));
    if (!exponent.fits_long() || std::abs(exponent.to_long()) > 100000) {
      throw std::invalid_argument("precision exponent out of range");
    }
    const long k = exponent.to_long();
    const Rational scale = Rational(pow(Integer(10), static_cast<unsigned long>(std::abs(k))));
    value = k >= 0 ? mantissa * scale : mantissa / scale;
  }
  if (value.sign() <= 0) throw std::invalid_argument("precision must be positive");
  return value;
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Jacobi-Perron expansions, convergents and linear recurrences in exact arithmetic", "jpcf"};
  app.require_subcommand(1);
  app.add_option("--max-iter", o.max_iter, "Jacobi-Perron step limit (default 500)");
  app.add_option("--precision", o.precision, "Width target for interval refinement, e.g. 1e-30 or 1/1000");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--horizon", o.horizon, "Last convergent index for verify-forward");
  app.add_option("--depth", o.depth, "Convergent rows (convergents, verify-converse, cubic)");
  app.add_option("--batch", o.batch, "verify-forward on this many random periodic specs");
  app.add_option("--max-order", o.max_order, "Largest recurrence length for fits");
  app.add_option("--seed", o.seed, "Seed for --batch");

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const Options&, std::istream&, std::ostream&);
  };
  const Sub subs[] = {
      {"expand", "Jacobi-Perron expansion of an input tuple", cmd_expand},
      {"convergents", "Convergent table of an input tuple or quotient stream", cmd_convergents},
      {"verify-forward", "Check the recurrence derived from a periodic quotient stream", cmd_verify_forward},
      {"verify-converse", "Fit recurrences to convergents and look for periodic quotients", cmd_verify_converse},
      {"cubic", "Compare the periodic ternary representation of a cubic with its expansion", cmd_cubic},
      {"lrs-fit", "Minimal linear recurrence of a sequence", cmd_lrs_fit},
  };
  int (*selected)(const Options&, std::istream&, std::ostream&) = nullptr;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help)->fallthrough();
    sub->add_option("input", o.input, "Input JSON file, - for standard input");
    sub->callback([&selected, run = s.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const Integer max_iter = Integer::parse(o.max_iter);
    if (max_iter < Integer(1) || !max_iter.fits_long()) throw std::invalid_argument("--max-iter must be >= 1");
    o.config.max_iter = static_cast<std::size_t>(max_iter.to_long());
    o.config.precision = parse_precision(o.precision);
    o.config.format = o.format == "csv" ? Format::csv : o.format == "text" ? Format::text : Format::json;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    return selected(o, in, out);
  } catch (const SharedPolyViolation& e) {
    err << "consistency violation: " << e.what() << '\n';
    return kConsistencyViolation;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "consistency violation: " << e.what() << '\n';
    return kConsistencyViolation;
  }
}

}  // namespace jpcf::cli
