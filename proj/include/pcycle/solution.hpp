// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcycle/cycle.hpp"
#include "pcycle/paths.hpp"

namespace pcycle {

/// A deployed protection cycle: `capacity` spare channels reserved on every
/// ring link, protecting up to capacity channels per on-cycle link and
/// twice that per straddling link. `protects` records what this p-cycle
/// actually covers (positive entries only).
struct PCycle {
  Cycle cycle;
  int capacity = 1;
  std::map<int, int> protects;  // link index -> protected channels

  Rational spare(const Topology& t) const {
    return Rational(capacity) * cycle_cost(t, cycle);
  }
};

/// Output of a design algorithm: the selected p-cycles in placement order,
/// what working capacity is left unprotected, and which bridge links can
/// never be protected.
struct Solution {
  std::string algorithm;
  std::vector<PCycle> pcycles;
  std::vector<int> leftover;       // per link, unprotected working capacity
  std::vector<int> unprotectable;  // bridge links with working > 0, sorted
  bool cida_backstop = false;      // candidate backstop engaged (CIDA only)

  Rational total_spare(const Topology& t) const {
    Rational sum{0};
    for (const auto& p : pcycles) sum += p.spare(t);
    return sum;
  }
};

namespace detail {

/// Finalizes a cycle at the given capacity against the current state:
/// claims min(remaining, capacity * protection_paths) on every covered link
/// and subtracts it. The clamp keeps leftover non-negative.
inline PCycle apply_pcycle(const Topology& t, const Cycle& c, int capacity,
                           NetworkState& s) {
  PCycle p;
  p.cycle = c;
  p.capacity = capacity;
  for (int l = 0; l < t.link_count(); ++l) {
    int x = protection_paths(t, c, l);
    if (x == 0) continue;
    int amount = std::min(s[l], capacity * x);
    if (amount > 0) {
      p.protects[l] = amount;
      s.reduce(l, amount);
    }
  }
  return p;
}

/// Bridge links that still carry traffic; no cycle can protect them.
inline std::vector<int> unprotectable_links(const Topology& t) {
  std::vector<int> out;
  for (int l : find_bridges(t))
    if (t.link(l).working > 0) out.push_back(l);
  return out;
}

}  // namespace detail

}  // namespace pcycle
