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
#include <cassert>
#include <optional>
#include <vector>

#include "pcycle/topology.hpp"

namespace pcycle {

struct Path {
  std::vector<int> nodes;  // src .. dst
  std::vector<int> links;  // nodes.size() - 1 entries
  Rational cost{0};

  int hops() const { return static_cast<int>(links.size()); }
};

namespace detail {

// Path labels order by (cost, hops, node sequence). The node sequence
// tie-break is stable under extension because sequences of equal cost and
// equal hop count have equal length.
struct PathLabel {
  Rational cost{0};
  std::vector<int> nodes;
  std::vector<int> links;

  bool better_than(const PathLabel& o) const {
    if (cost != o.cost) return cost < o.cost;
    if (nodes.size() != o.nodes.size()) return nodes.size() < o.nodes.size();
    return nodes < o.nodes;
  }
};

}  // namespace detail

/// Minimum-cost path from src to dst avoiding the given links and interior
/// nodes. Ties break by fewest hops, then lexicographically smallest node
/// sequence, so results are reproducible. Returns nullopt when no path
/// survives the exclusions.
inline std::optional<Path> shortest_path(
    const Topology& t, int src, int dst,
    const std::vector<int>& excluded_links = {},
    const std::vector<int>& excluded_nodes = {}) {
  assert(src != dst);
  std::vector<bool> link_ok(t.link_count(), true);
  for (int l : excluded_links) link_ok[l] = false;
  std::vector<bool> node_ok(t.node_count(), true);
  for (int n : excluded_nodes) node_ok[n] = false;
  assert(node_ok[src] && node_ok[dst]);

  std::vector<std::optional<detail::PathLabel>> label(t.node_count());
  std::vector<bool> done(t.node_count(), false);
  label[src] = detail::PathLabel{Rational{0}, {src}, {}};

  for (;;) {
    int current = -1;
    for (int n = 0; n < t.node_count(); ++n) {
      if (done[n] || !label[n]) continue;
      if (current < 0 || label[n]->better_than(*label[current])) current = n;
    }
    if (current < 0) return std::nullopt;
    if (current == dst) break;
    done[current] = true;
    for (const auto& [nbr, l] : t.neighbors(current)) {
      if (done[nbr] || !link_ok[l] || !node_ok[nbr]) continue;
      detail::PathLabel cand = *label[current];
      cand.cost += t.link(l).cost;
      cand.nodes.push_back(nbr);
      cand.links.push_back(l);
      if (!label[nbr] || cand.better_than(*label[nbr]))
        label[nbr] = std::move(cand);
    }
  }
  return Path{label[dst]->nodes, label[dst]->links, label[dst]->cost};
}

struct PathPair {
  Path first;
  Path second;
  Rational combined_cost{0};
};

namespace detail {

// Residual arc of the node-split digraph used by the disjoint-pair search.
struct FlowArc {
  int from, to;
  Rational cost;
  int cap;
  int link;  // originating topology link, -1 for node-internal arcs
};

}  // namespace detail

/// Two internally node-disjoint paths from u to v of minimum combined cost,
/// neither using `forbidden_link`. Computed as a min-cost 2-unit flow on the
/// node-split graph (successive shortest paths), which finds the exact
/// optimal pair where two greedy passes can fail. Returns nullopt when no
/// disjoint pair exists.
inline std::optional<PathPair> node_disjoint_path_pair(
    const Topology& t, int u, int v,
    std::optional<int> forbidden_link = std::nullopt) {
  assert(u != v);
  // Node n splits into in-node 2n and out-node 2n+1; interior nodes get a
  // capacity-1 internal arc. u and v are not split (paths may share them).
  const int N = 2 * t.node_count();
  std::vector<detail::FlowArc> arcs;
  auto add_arc = [&](int from, int to, Rational cost, int link) {
    arcs.push_back({from, to, cost, 1, link});
    arcs.push_back({to, from, -cost, 0, link});
  };
  for (int n = 0; n < t.node_count(); ++n)
    if (n != u && n != v) add_arc(2 * n, 2 * n + 1, Rational{0}, -1);
  for (int l = 0; l < t.link_count(); ++l) {
    if (forbidden_link && *forbidden_link == l) continue;
    const Link& e = t.link(l);
    add_arc(2 * e.u + 1, 2 * e.v, e.cost, l);
    add_arc(2 * e.v + 1, 2 * e.u, e.cost, l);
  }
  const int source = 2 * u + 1;
  const int sink = 2 * v;

  // Two Bellman-Ford augmentations. Residual costs go negative after the
  // first augmentation, so Dijkstra is not an option without potentials.
  for (int round = 0; round < 2; ++round) {
    std::vector<std::optional<Rational>> dist(N);
    std::vector<int> hops(N, 0);
    std::vector<int> parent_arc(N, -1);
    dist[source] = Rational{0};
    for (bool changed = true; changed;) {
      changed = false;
      for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
        const auto& arc = arcs[a];
        if (arc.cap <= 0 || !dist[arc.from]) continue;
        Rational nd = *dist[arc.from] + arc.cost;
        int nh = hops[arc.from] + 1;
        if (!dist[arc.to] || nd < *dist[arc.to] ||
            (nd == *dist[arc.to] && nh < hops[arc.to])) {
          dist[arc.to] = nd;
          hops[arc.to] = nh;
          parent_arc[arc.to] = a;
          changed = true;
        }
      }
    }
    if (!dist[sink]) return std::nullopt;
    for (int n = sink; n != source;) {
      int a = parent_arc[n];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      n = arcs[a].from;
    }
  }

  // Decompose the 2-unit flow into the two paths. Flow sits on arcs whose
  // reverse twin gained capacity.
  std::vector<std::vector<int>> out_flow(N);
  for (int a = 0; a < static_cast<int>(arcs.size()); a += 2)
    if (arcs[a ^ 1].cap > 0) out_flow[arcs[a].from].push_back(a);
  for (auto& lst : out_flow)
    std::sort(lst.begin(), lst.end(),
              [&](int a, int b) { return arcs[a].to < arcs[b].to; });
  // An optimal flow never uses both directions of one link: cancelling the
  // pair would be strictly cheaper.
  assert(out_flow[source].size() == 2);

  auto walk = [&](int first_arc) {
    Path p;
    p.nodes.push_back(u);
    int a = first_arc;
    for (;;) {
      const auto& arc = arcs[a];
      if (arc.link >= 0) {
        p.links.push_back(arc.link);
        p.cost += t.link(arc.link).cost;
        p.nodes.push_back(arc.to / 2);
      }
      if (arc.to == sink) break;
      assert(!out_flow[arc.to].empty());
      a = out_flow[arc.to].front();
      out_flow[arc.to].erase(out_flow[arc.to].begin());
    }
    return p;
  };

  int a0 = out_flow[source][0];
  int a1 = out_flow[source][1];
  PathPair pair;
  pair.first = walk(a0);
  pair.second = walk(a1);
  if (pair.second.nodes < pair.first.nodes) std::swap(pair.first, pair.second);
  pair.combined_cost = pair.first.cost + pair.second.cost;
  return pair;
}

/// True when removing `link` disconnects its endpoints, i.e. the link lies
/// on no cycle. Such links cannot be protected by any p-cycle.
inline bool is_bridge(const Topology& t, int link) {
  const Link& e = t.link(link);
  std::vector<bool> seen(t.node_count(), false);
  std::vector<int> stack{e.u};
  seen[e.u] = true;
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    for (const auto& [nbr, l] : t.neighbors(n)) {
      if (l == link || seen[nbr]) continue;
      seen[nbr] = true;
      if (nbr == e.v) return false;
      stack.push_back(nbr);
    }
  }
  return !seen[e.v];
}

/// Sorted indices of all bridge links.
inline std::vector<int> find_bridges(const Topology& t) {
  std::vector<int> out;
  for (int l = 0; l < t.link_count(); ++l)
    if (is_bridge(t, l)) out.push_back(l);
  return out;
}

}  // namespace pcycle
