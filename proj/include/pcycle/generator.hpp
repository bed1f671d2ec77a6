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

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "pcycle/topology.hpp"

namespace pcycle {

namespace detail {

// Self-contained generator (splitmix64) so identical seeds give identical
// scenarios on every platform; std::mt19937 distributions are not portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive, by rejection.
  int uniform(int lo, int hi) {
    assert(lo <= hi);
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<int>(v % span);
  }

 private:
  std::uint64_t state_;
};

inline std::string padded_name(const char* prefix, int index, int width) {
  std::string digits = std::to_string(index);
  while (static_cast<int>(digits.size()) < width) digits.insert(0, 1, '0');
  return prefix + digits;
}

}  // namespace detail

struct GenParams {
  int nodes = 8;
  double avg_degree = 3.0;
  int demand_min = 1;
  int demand_max = 3;
  std::uint64_t seed = 0;
};

struct GeneratedScenario {
  Topology topology;           // working capacities all zero
  std::vector<Demand> demands;  // uniform demand matrix over all node pairs
  std::string scenario_text;
  std::string demands_text;
};

/// Random survivable scenario: a spanning ring through a shuffled node
/// order (so the graph is connected and bridgeless by construction) plus
/// random chords up to the target average degree, unit costs, and a uniform
/// random demand between every node pair. Deterministic under the seed.
inline GeneratedScenario generate_scenario(const GenParams& p) {
  if (p.nodes < 3) throw ValidationError("generator needs at least 3 nodes");
  if (p.avg_degree < 2.0)
    throw ValidationError("average degree below 2 cannot be bridgeless");
  if (p.demand_min < 0 || p.demand_max < p.demand_min)
    throw ValidationError("bad demand range");

  detail::Rng rng(p.seed);
  const int n = p.nodes;
  int name_width = static_cast<int>(std::to_string(n - 1).size());
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(detail::padded_name("n", i, name_width));

  // Spanning ring over a shuffled order.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng.uniform(0, i)]);
  std::vector<std::pair<int, int>> edges;
  auto add_edge = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  };
  for (int i = 0; i < n; ++i) add_edge(order[i], order[(i + 1) % n]);

  // Chords until the target link count.
  long long max_links = static_cast<long long>(n) * (n - 1) / 2;
  long long target = std::llround(p.avg_degree * n / 2.0);
  target = std::max<long long>(n, std::min(target, max_links));
  std::vector<std::pair<int, int>> free_pairs;
  {
    std::sort(edges.begin(), edges.end());
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!std::binary_search(edges.begin(), edges.end(),
                                std::make_pair(a, b)))
          free_pairs.emplace_back(a, b);
  }
  while (static_cast<long long>(edges.size()) < target && !free_pairs.empty()) {
    int pick = rng.uniform(0, static_cast<int>(free_pairs.size()) - 1);
    edges.push_back(free_pairs[pick]);
    free_pairs.erase(free_pairs.begin() + pick);
  }
  std::sort(edges.begin(), edges.end());

  int link_width =
      static_cast<int>(std::to_string(edges.size() - 1).size());
  std::vector<std::tuple<std::string, std::string, std::string, Rational, int>>
      link_specs;
  for (std::size_t i = 0; i < edges.size(); ++i)
    link_specs.emplace_back(
        detail::padded_name("e", static_cast<int>(i), link_width),
        names[edges[i].first], names[edges[i].second], Rational{1}, 0);

  GeneratedScenario out{Topology(names, link_specs), {}, "", ""};

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int units = rng.uniform(p.demand_min, p.demand_max);
      if (units > 0) out.demands.push_back({a, b, units});
    }

  std::ostringstream header;
  header << "generated scenario: nodes=" << p.nodes
         << " degree=" << p.avg_degree << " demand=[" << p.demand_min << ","
         << p.demand_max << "] seed=" << p.seed;
  out.scenario_text = emit_scenario(out.topology, header.str());
  std::ostringstream dem;
  for (const Demand& d : out.demands)
    dem << "demand " << names[d.src] << " " << names[d.dst] << " " << d.units
        << "\n";
  out.demands_text = dem.str();
  return out;
}

}  // namespace pcycle
