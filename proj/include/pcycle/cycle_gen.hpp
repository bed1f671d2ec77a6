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

#include <optional>
#include <set>
#include <vector>

#include "pcycle/cycle.hpp"
#include "pcycle/paths.hpp"

namespace pcycle {

/// Shortest cycle through link x: x plus the cheapest path between its
/// endpoints that avoids x. Returns nullopt when x is a bridge.
inline std::optional<Cycle> shortest_cycle_for_link(const Topology& t, int x) {
  const Link& e = t.link(x);
  auto path = shortest_path(t, e.u, e.v, {x});
  if (!path) return std::nullopt;
  return Cycle::from_ring(t, path->nodes);
}

/// The per-link shortest cycles of the whole graph, deduplicated through
/// canonical form and sorted. Every non-bridge link is on-cycle in at least
/// one element. Empty for trees.
inline std::vector<Cycle> enumerate_shortest_cycles(const Topology& t) {
  std::set<Cycle> cycles;
  for (int l = 0; l < t.link_count(); ++l)
    if (auto c = shortest_cycle_for_link(t, l)) cycles.insert(*c);
  return {cycles.begin(), cycles.end()};
}

/// Straddling-link cycle for x: the union of the two cheapest node-disjoint
/// paths between x's endpoints, with x itself forbidden. x ends up as a
/// chord of the result. Returns nullopt when no disjoint pair exists.
inline std::optional<Cycle> sla_cycle_for_link(const Topology& t, int x) {
  const Link& e = t.link(x);
  auto pair = node_disjoint_path_pair(t, e.u, e.v, x);
  if (!pair) return std::nullopt;
  // Ring = first path u..v, then the second path's interior walked back.
  std::vector<int> ring = pair->first.nodes;
  const auto& back = pair->second.nodes;
  for (int i = static_cast<int>(back.size()) - 2; i >= 1; --i)
    ring.push_back(back[i]);
  return Cycle::from_ring(t, std::move(ring));
}

/// One-step candidate expansion: for every base cycle and every on-cycle
/// link L, reroute L's endpoints through nodes off the cycle; L becomes a
/// chord of the widened cycle. Output is base plus all successful
/// expansions, deduplicated. Single pass, not iterated to fixpoint.
inline std::vector<Cycle> expand_candidates(const Topology& t,
                                            const std::vector<Cycle>& base) {
  std::set<Cycle> out(base.begin(), base.end());
  for (const Cycle& c : base) {
    for (int replaced : c.links()) {
      const Link& e = t.link(replaced);
      std::vector<int> excluded_nodes;
      for (int n : c.ring())
        if (n != e.u && n != e.v) excluded_nodes.push_back(n);
      auto detour = shortest_path(t, e.u, e.v, c.links(), excluded_nodes);
      if (!detour) continue;
      std::vector<int> links;
      for (int l : c.links())
        if (l != replaced) links.push_back(l);
      links.insert(links.end(), detour->links.begin(), detour->links.end());
      auto widened = Cycle::from_link_set(t, links);
      // The detour's interior avoids every cycle node, so the rebuilt link
      // set is always a single elementary cycle.
      assert(widened);
      if (widened) out.insert(*widened);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace pcycle
