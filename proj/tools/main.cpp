/* SPDX-License-Identifier: Apache-2.0 */

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return jpcf::cli::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
