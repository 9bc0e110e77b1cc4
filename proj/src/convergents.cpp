/* SPDX-License-Identifier: Apache-2.0 */

#include "jpcf/convergents.hpp"

#include <algorithm>

namespace jpcf {

bool check_growth_bound(const ConvergentTable<Integer>& table,
                        const std::vector<std::vector<Integer>>& quotients) {
  const long last = std::min<long>(table.last_index(), static_cast<long>(quotients.size()) - 1);
  Integer product(1);
  for (long n = 1; n <= last; ++n) {
    product *= quotients[static_cast<std::size_t>(n)].front();
    for (std::size_t axis = 1; axis <= table.dim() + 1; ++axis) {
      if (table.at(n, axis) < product) return false;
    }
  }
  return true;
}

}  // namespace jpcf
