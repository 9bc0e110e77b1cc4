/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "jpcf/numeric.hpp"

namespace jpcf::cli {

enum class Format { json, csv, text };

struct RunConfig {
  std::size_t max_iter = 500;
  Rational precision = Rational(Integer(1), pow(Integer(10), 30));
  Format format = Format::json;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kConsistencyViolation = 3;

// "p/q", an integer or "AeB" with integers A and B, read exactly. Throws
// std::invalid_argument.
Rational parse_precision(const std::string& text);

// Runs one command line. Input file "-" reads from `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace jpcf::cli
