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

// Shared fixtures and brute-force oracles. The oracles stay deliberately
// independent of the library's search code: plain recursive enumeration
// only, so they can vouch for it.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcycle/generator.hpp"
#include "pcycle/paths.hpp"
#include "pcycle/topology.hpp"

namespace testutil {

using namespace pcycle;

// --- fixtures ------------------------------------------------------------

inline std::string triangle_text(int working = 1) {
  std::string w = std::to_string(working);
  return "nodes 3\nnode a\nnode b\nnode c\n"
         "link ab a b 1 " + w + "\nlink bc b c 1 " + w + "\nlink ca c a 1 " + w + "\n";
}

inline std::string k4_text(int working = 1) {
  std::string w = std::to_string(working);
  std::string out = "nodes 4\nnode a\nnode b\nnode c\nnode d\n";
  for (const char* e : {"ab", "ac", "ad", "bc", "bd", "cd"}) {
    out += std::string("link ") + e + " " + e[0] + " " + e[1] + " 1 " + w + "\n";
  }
  return out;
}

// Two triangles sharing the link ab.
inline std::string bowtie_text(int working = 1) {
  std::string w = std::to_string(working);
  std::string out = "nodes 4\nnode a\nnode b\nnode c\nnode d\n";
  for (const char* e : {"ab", "ac", "ad", "bc", "bd"}) {
    out += std::string("link ") + e + " " + e[0] + " " + e[1] + " 1 " + w + "\n";
  }
  return out;
}

// 4-cycle a-b-c-d plus chord ac.
inline std::string chordal_square_text(int working = 1) {
  std::string w = std::to_string(working);
  std::string out = "nodes 4\nnode a\nnode b\nnode c\nnode d\n";
  for (const char* e : {"ab", "ac", "ad", "bc", "cd"}) {
    out += std::string("link ") + e + " " + e[0] + " " + e[1] + " 1 " + w + "\n";
  }
  return out;
}

inline std::string path4_text() {
  return "nodes 4\nnode a\nnode b\nnode c\nnode d\n"
         "link ab a b 1 1\nlink bc b c 1 1\nlink cd c d 1 1\n";
}

inline std::string ring_text(int n, int working = 1) {
  std::string out = "nodes " + std::to_string(n) + "\n";
  for (int i = 0; i < n; ++i) out += "node v" + std::to_string(i) + "\n";
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    out += "link r" + std::to_string(i) + " v" + std::to_string(i) + " v" +
           std::to_string(j) + " 1 " + std::to_string(working) + "\n";
  }
  return out;
}

inline std::string k5_text(int working = 1) {
  std::string w = std::to_string(working);
  std::string out = "nodes 5\n";
  for (char c = 'a'; c <= 'e'; ++c) out += std::string("node ") + c + "\n";
  for (char a = 'a'; a <= 'e'; ++a)
    for (char b = static_cast<char>(a + 1); b <= 'e'; ++b)
      out += std::string("link ") + a + b + " " + a + " " + b + " 1 " + w + "\n";
  return out;
}

inline Topology topo(const std::string& text) { return load_topology(text); }

// --- random instances ----------------------------------------------------

// Connected bridgeless instance: spanning ring plus `chords` random chords,
// working capacities drawn from `wset`.
inline Topology random_bridgeless(detail::Rng& rng, int n, int chords,
                                  const std::vector<int>& wset) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back("v" + std::to_string(i / 10) + std::to_string(i % 10));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.uniform(0, i)]);
  std::set<std::pair<int, int>> edges;
  auto norm = [](int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  for (int i = 0; i < n; ++i) edges.insert(norm(order[i], order[(i + 1) % n]));
  std::vector<std::pair<int, int>> free_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!edges.count({a, b})) free_pairs.emplace_back(a, b);
  for (int k = 0; k < chords && !free_pairs.empty(); ++k) {
    int pick = rng.uniform(0, static_cast<int>(free_pairs.size()) - 1);
    edges.insert(free_pairs[pick]);
    free_pairs.erase(free_pairs.begin() + pick);
  }
  std::vector<std::tuple<std::string, std::string, std::string, Rational, int>>
      specs;
  int idx = 0;
  for (const auto& [a, b] : edges) {
    int w = wset[rng.uniform(0, static_cast<int>(wset.size()) - 1)];
    specs.emplace_back("e" + std::to_string(idx / 10) + std::to_string(idx % 10),
                       names[a], names[b], Rational{1}, w);
    ++idx;
  }
  return Topology(names, specs);
}

// --- brute-force oracles ---------------------------------------------------

// Every simple path src -> dst honoring the exclusions.
inline void all_paths_rec(const Topology& t, int current, int dst,
                          const std::vector<bool>& link_ok,
                          const std::vector<bool>& node_ok,
                          std::vector<bool>& visited, Path& partial,
                          std::vector<Path>& out) {
  if (current == dst) {
    out.push_back(partial);
    return;
  }
  for (const auto& [nbr, l] : t.neighbors(current)) {
    if (visited[nbr] || !link_ok[l] || !node_ok[nbr]) continue;
    visited[nbr] = true;
    partial.nodes.push_back(nbr);
    partial.links.push_back(l);
    partial.cost += t.link(l).cost;
    all_paths_rec(t, nbr, dst, link_ok, node_ok, visited, partial, out);
    partial.cost -= t.link(l).cost;
    partial.links.pop_back();
    partial.nodes.pop_back();
    visited[nbr] = false;
  }
}

inline std::vector<Path> all_paths(const Topology& t, int src, int dst,
                                   const std::vector<int>& excluded_links = {},
                                   const std::vector<int>& excluded_nodes = {}) {
  std::vector<bool> link_ok(t.link_count(), true);
  for (int l : excluded_links) link_ok[l] = false;
  std::vector<bool> node_ok(t.node_count(), true);
  for (int n : excluded_nodes) node_ok[n] = false;
  std::vector<bool> visited(t.node_count(), false);
  visited[src] = true;
  Path partial;
  partial.nodes.push_back(src);
  std::vector<Path> out;
  all_paths_rec(t, src, dst, link_ok, node_ok, visited, partial, out);
  return out;
}

// Minimum path under the library's (cost, hops, sequence) order, found by
// exhaustive enumeration.
inline std::optional<Path> brute_shortest(
    const Topology& t, int src, int dst,
    const std::vector<int>& excluded_links = {},
    const std::vector<int>& excluded_nodes = {}) {
  auto paths = all_paths(t, src, dst, excluded_links, excluded_nodes);
  if (paths.empty()) return std::nullopt;
  auto better = [](const Path& a, const Path& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.hops() != b.hops()) return a.hops() < b.hops();
    return a.nodes < b.nodes;
  };
  return *std::min_element(paths.begin(), paths.end(), better);
}

// Cheapest internally node-disjoint pair by enumerating all path pairs.
inline std::optional<Rational> brute_disjoint_pair_cost(
    const Topology& t, int u, int v, std::optional<int> forbidden) {
  std::vector<int> excl;
  if (forbidden) excl.push_back(*forbidden);
  auto paths = all_paths(t, u, v, excl);
  std::optional<Rational> best;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      bool disjoint = true;
      for (std::size_t a = 1; a + 1 < paths[i].nodes.size() && disjoint; ++a)
        for (std::size_t b = 1; b + 1 < paths[j].nodes.size() && disjoint; ++b)
          disjoint = paths[i].nodes[a] != paths[j].nodes[b];
      if (!disjoint) continue;
      Rational cost = paths[i].cost + paths[j].cost;
      if (!best || cost < *best) best = cost;
    }
  return best;
}

// Independent cycle oracle: test every link subset for "connected, all
// degrees exactly 2". Only usable on small graphs.
inline int count_cycles_by_edge_subsets(const Topology& t) {
  const int m = t.link_count();
  int count = 0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> degree(t.node_count(), 0);
    std::vector<int> links;
    for (int l = 0; l < m; ++l)
      if (mask & (1u << l)) {
        links.push_back(l);
        degree[t.link(l).u]++;
        degree[t.link(l).v]++;
      }
    bool ok = true;
    for (int d : degree)
      if (d != 0 && d != 2) ok = false;
    if (!ok || links.size() < 3) continue;
    // connectivity of the chosen links
    std::vector<int> stack{t.link(links[0]).u};
    std::set<int> seen{t.link(links[0]).u};
    while (!stack.empty()) {
      int n = stack.back();
      stack.pop_back();
      for (int l : links) {
        const Link& e = t.link(l);
        int other = -1;
        if (e.u == n) other = e.v;
        if (e.v == n) other = e.u;
        if (other >= 0 && !seen.count(other)) {
          seen.insert(other);
          stack.push_back(other);
        }
      }
    }
    int touched = 0;
    for (int d : degree)
      if (d == 2) ++touched;
    if (static_cast<int>(seen.size()) == touched) ++count;
  }
  return count;
}

}  // namespace testutil
