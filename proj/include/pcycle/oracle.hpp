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

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "pcycle/solution.hpp"

namespace pcycle {

/// Every elementary cycle of the graph, canonical and sorted. The cycle
/// count grows exponentially with graph size, so instances are capped at
/// 10 nodes (InstanceTooLargeError beyond).
inline std::vector<Cycle> all_simple_cycles(const Topology& t) {
  if (t.node_count() > 10)
    throw InstanceTooLargeError("cycle enumeration limited to 10 nodes");
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<bool> on_path(t.node_count(), false);

  // Enumerate rings whose smallest node is `start`, walking only larger
  // nodes. Requiring path[1] < path.back() at closure picks one of the two
  // orientations, so each cycle appears exactly once.
  std::function<void(int, int)> extend = [&](int start, int current) {
    for (const auto& [nbr, l] : t.neighbors(current)) {
      (void)l;
      if (nbr == start && path.size() >= 3 && path[1] < path.back())
        out.push_back(Cycle::from_ring(t, path));
      if (nbr <= start || on_path[nbr]) continue;
      on_path[nbr] = true;
      path.push_back(nbr);
      extend(start, nbr);
      path.pop_back();
      on_path[nbr] = false;
    }
  };
  for (int start = 0; start < t.node_count(); ++start) {
    path.assign(1, start);
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[start] = true;
    extend(start, start);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

struct CoverSearch {
  const Topology& t;
  const std::vector<Cycle>& cycles;
  std::vector<std::vector<std::uint8_t>> cover;  // cycle -> per-link paths
  std::vector<Rational> spare_cost;              // cycle -> ring cost
  Rational max_ratio{1};  // best protected-to-spare ratio over all cycles
  std::vector<int> capacity;
  Rational spare{0};
  std::optional<Rational> best_spare;
  std::vector<int> best_capacity;

  explicit CoverSearch(const Topology& topo, const std::vector<Cycle>& cs)
      : t(topo), cycles(cs), capacity(cs.size(), 0) {
    for (const Cycle& c : cycles) {
      cover.push_back(coverage_vector(t, c));
      spare_cost.push_back(cycle_cost(t, c));
    }
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      Rational protected_cost{0};
      for (int l = 0; l < t.link_count(); ++l)
        protected_cost += Rational(cover[i][l]) * t.link(l).cost;
      Rational ratio = protected_cost / spare_cost[i];
      if (ratio > max_ratio) max_ratio = ratio;
    }
  }

  // Admissible lower bound on the spare still needed: one unit of spare
  // cost provides at most max_ratio units of cost-weighted protection.
  Rational lower_bound(const std::vector<int>& resid) const {
    Rational need{0};
    for (int l = 0; l < t.link_count(); ++l)
      need += Rational(resid[l]) * t.link(l).cost;
    return need / max_ratio;
  }

  // Greedy cover for the initial incumbent: repeatedly add one unit of the
  // cycle with the best clamped protection-to-spare ratio.
  void greedy_incumbent(std::vector<int> resid) {
    std::vector<int> cap(cycles.size(), 0);
    Rational total{0};
    for (;;) {
      int best = -1;
      Rational best_gain{0};
      for (std::size_t i = 0; i < cycles.size(); ++i) {
        Rational gain{0};
        for (int l = 0; l < t.link_count(); ++l)
          gain += Rational(std::min<int>(resid[l], cover[i][l])) *
                  t.link(l).cost;
        if (gain == 0) continue;
        Rational ratio = gain / spare_cost[i];
        if (best < 0 || ratio > best_gain) {
          best_gain = ratio;
          best = static_cast<int>(i);
        }
      }
      if (best < 0) break;
      cap[best] += 1;
      total += spare_cost[best];
      for (int l = 0; l < t.link_count(); ++l)
        resid[l] = std::max(0, resid[l] - cover[best][l]);
    }
    best_spare = total;
    best_capacity = cap;
  }

  // Depth-first branch and bound. Branches on the first uncovered link;
  // each branch commits one capacity unit of a covering cycle and bans the
  // covering cycles tried before it, which removes duplicate orderings
  // without losing any support-minimal cover.
  void search(std::vector<int>& resid, std::vector<bool> banned) {
    int target = -1;
    for (int l = 0; l < t.link_count(); ++l)
      if (resid[l] > 0) {
        target = l;
        break;
      }
    if (target < 0) {
      if (!best_spare || spare < *best_spare) {
        best_spare = spare;
        best_capacity = capacity;
      }
      return;
    }
    if (best_spare && spare + lower_bound(resid) >= *best_spare) return;

    std::vector<bool> child_ban = banned;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (banned[i] || cover[i][target] == 0) continue;
      std::vector<int> reduced(t.link_count());
      for (int l = 0; l < t.link_count(); ++l)
        reduced[l] = std::max(0, resid[l] - cover[i][l]);
      capacity[i] += 1;
      spare += spare_cost[i];
      search(reduced, child_ban);
      spare -= spare_cost[i];
      capacity[i] -= 1;
      child_ban[i] = true;
    }
  }
};

}  // namespace detail

/// Exact minimum-total-spare p-cycle cover by branch and bound over all
/// simple cycles. Links on no cycle are excluded up front and reported as
/// unprotectable. Capped at 8 nodes.
inline Solution optimal_pcycle_cover(const Topology& t,
                                     const NetworkState& s0) {
  if (t.node_count() > 8)
    throw InstanceTooLargeError("exact cover limited to 8 nodes");
  const std::vector<Cycle> cycles = all_simple_cycles(t);

  Solution sol;
  sol.algorithm = "oracle";

  std::vector<int> resid = s0.values();
  std::vector<int> excluded;
  for (int l = 0; l < t.link_count(); ++l) {
    if (resid[l] == 0) continue;
    bool coverable = false;
    for (const Cycle& c : cycles)
      if (protection_paths(t, c, l) > 0) {
        coverable = true;
        break;
      }
    if (!coverable) {
      excluded.push_back(l);
      resid[l] = 0;
    }
  }

  if (!cycles.empty() &&
      std::any_of(resid.begin(), resid.end(), [](int r) { return r > 0; })) {
    detail::CoverSearch bb(t, cycles);
    bb.greedy_incumbent(resid);
    std::vector<int> work = resid;
    bb.search(work, std::vector<bool>(cycles.size(), false));

    NetworkState s = s0;
    std::vector<int> need = resid;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (bb.best_capacity[i] == 0) continue;
      PCycle p;
      p.cycle = cycles[i];
      p.capacity = bb.best_capacity[i];
      for (int l = 0; l < t.link_count(); ++l) {
        int x = protection_paths(t, cycles[i], l);
        int amount = std::min(need[l], p.capacity * x);
        if (amount > 0) {
          p.protects[l] = amount;
          need[l] -= amount;
          s.reduce(l, amount);
        }
      }
      sol.pcycles.push_back(std::move(p));
    }
    sol.leftover = s.values();
  } else {
    sol.leftover = s0.values();
  }

  sol.unprotectable = detail::unprotectable_links(t);
  return sol;
}

}  // namespace pcycle
