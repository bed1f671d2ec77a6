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
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcycle/topology.hpp"

namespace pcycle {

/// Elementary cycle stored in canonical form: the ring starts at its
/// smallest node and runs toward the smaller of that node's two ring
/// neighbors. Any two Cycle values over the same link set compare equal.
class Cycle {
 public:
  /// Builds from an ordered node ring (closing edge implied). Validates
  /// ring length, node distinctness and link existence.
  static Cycle from_ring(const Topology& t, std::vector<int> ring) {
    if (ring.size() < 3)
      throw ValidationError("cycle ring needs at least 3 nodes");
    auto sorted = ring;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("cycle ring repeats a node");
    canonicalize(ring);
    Cycle c;
    c.ring_ = std::move(ring);
    c.nodes_sorted_ = std::move(sorted);
    const int n = static_cast<int>(c.ring_.size());
    for (int i = 0; i < n; ++i) {
      int a = c.ring_[i];
      int b = c.ring_[(i + 1) % n];
      int l = t.find_link(a, b);
      if (l < 0)
        throw ValidationError("no link between '" + t.node_name(a) +
                              "' and '" + t.node_name(b) + "' on ring");
      c.ring_links_.push_back(l);
    }
    c.links_sorted_ = c.ring_links_;
    std::sort(c.links_sorted_.begin(), c.links_sorted_.end());
    return c;
  }

  /// Reassembles a cycle from an unordered link set. Returns nullopt unless
  /// the links form exactly one elementary cycle covering all of them.
  static std::optional<Cycle> from_link_set(const Topology& t,
                                            const std::vector<int>& links) {
    if (links.size() < 3) return std::nullopt;
    std::map<int, std::vector<int>> adj;  // node -> neighbor nodes
    for (int l : links) {
      adj[t.link(l).u].push_back(t.link(l).v);
      adj[t.link(l).v].push_back(t.link(l).u);
    }
    for (auto& [n, nbrs] : adj) {
      if (nbrs.size() != 2) return std::nullopt;
      std::sort(nbrs.begin(), nbrs.end());
    }
    int start = adj.begin()->first;
    std::vector<int> ring{start};
    int prev = -1, cur = start;
    do {
      const auto& nbrs = adj[cur];
      int next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
      prev = cur;
      cur = next;
      if (cur != start) ring.push_back(cur);
    } while (cur != start && ring.size() <= links.size());
    if (ring.size() != links.size() || ring.size() != adj.size())
      return std::nullopt;
    return from_ring(t, std::move(ring));
  }

  const std::vector<int>& ring() const { return ring_; }
  /// On-cycle links in ring order; ring_links()[i] joins ring()[i] and
  /// ring()[i+1 mod n].
  const std::vector<int>& ring_links() const { return ring_links_; }
  /// On-cycle links sorted by index.
  const std::vector<int>& links() const { return links_sorted_; }

  int size() const { return static_cast<int>(ring_.size()); }

  bool contains_node(int n) const {
    return std::binary_search(nodes_sorted_.begin(), nodes_sorted_.end(), n);
  }
  bool on_cycle(int link) const {
    return std::binary_search(links_sorted_.begin(), links_sorted_.end(),
                              link);
  }

  auto operator<=>(const Cycle& o) const { return ring_ <=> o.ring_; }
  bool operator==(const Cycle& o) const { return ring_ == o.ring_; }

 private:
  static void canonicalize(std::vector<int>& ring) {
    auto mn = std::min_element(ring.begin(), ring.end());
    std::rotate(ring.begin(), mn, ring.end());
    if (ring[1] > ring.back()) std::reverse(ring.begin() + 1, ring.end());
  }

  std::vector<int> ring_;
  std::vector<int> ring_links_;
  std::vector<int> nodes_sorted_;
  std::vector<int> links_sorted_;
};

/// Chords of the cycle: links off the ring whose endpoints both lie on it.
/// A p-cycle restores these with two ring arcs, hence double protection.
inline std::vector<int> straddling_links(const Topology& t, const Cycle& c) {
  std::vector<int> out;
  for (int l = 0; l < t.link_count(); ++l) {
    if (c.on_cycle(l)) continue;
    if (c.contains_node(t.link(l).u) && c.contains_node(t.link(l).v))
      out.push_back(l);
  }
  return out;
}

/// Protection paths the cycle offers a failed link: 1 on-cycle (the
/// complementary arc), 2 straddling (both arcs), 0 otherwise.
inline int protection_paths(const Topology& t, const Cycle& c, int link) {
  if (c.on_cycle(link)) return 1;
  if (c.contains_node(t.link(link).u) && c.contains_node(t.link(link).v))
    return 2;
  return 0;
}

/// Per-link protection-path counts, indexed by link.
inline std::vector<std::uint8_t> coverage_vector(const Topology& t,
                                                 const Cycle& c) {
  std::vector<std::uint8_t> x(t.link_count(), 0);
  for (int l = 0; l < t.link_count(); ++l)
    x[l] = static_cast<std::uint8_t>(protection_paths(t, c, l));
  return x;
}

/// Total cost of the ring links; one unit of p-cycle capacity reserves this
/// much spare.
inline Rational cycle_cost(const Topology& t, const Cycle& c) {
  Rational sum{0};
  for (int l : c.links()) sum += t.link(l).cost;
  return sum;
}

/// Ring as space-separated node names, for dumps and solution files.
inline std::string format_ring(const Topology& t, const Cycle& c) {
  std::string out;
  for (std::size_t i = 0; i < c.ring().size(); ++i) {
    if (i) out += " ";
    out += t.node_name(c.ring()[i]);
  }
  return out;
}

}  // namespace pcycle
