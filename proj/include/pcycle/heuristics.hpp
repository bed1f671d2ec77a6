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

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pcycle/cycle_gen.hpp"
#include "pcycle/solution.hpp"

namespace pcycle {

/// How a finalized p-cycle's capacity n is chosen.
///  - MinOnCycle: n = smallest positive unprotected capacity among on-cycle
///    links (falls back to the straddling links' ceil(w/2) when the ring is
///    already protected). Fully protects at least one link per placement.
///  - BestRatio: n minimizing the cycle's spare/protected ratio, smaller n
///    on ties.
enum class CapacityPolicy { MinOnCycle, BestRatio };

/// Numerator variant of the actual-efficiency score.
///  - Product: unprotected capacity times protection paths, w * X.
///  - Min: clamped form, min(w, X).
enum class AeMode { Product, Min };

inline const char* to_string(CapacityPolicy p) {
  return p == CapacityPolicy::MinOnCycle ? "min-on-cycle" : "best-ratio";
}
inline const char* to_string(AeMode m) {
  return m == AeMode::Product ? "product" : "min";
}

/// Actual efficiency of a cycle under the current state: protectable score
/// over ring cost. Cycles scoring 0 protect nothing.
inline Rational actual_efficiency(const Topology& t, const Cycle& c,
                                  const NetworkState& s, AeMode mode) {
  Rational numerator{0};
  for (int l = 0; l < t.link_count(); ++l) {
    int x = protection_paths(t, c, l);
    if (x == 0) continue;
    numerator += mode == AeMode::Product
                     ? Rational(s[l]) * x
                     : Rational(std::min(s[l], x));
  }
  return numerator / cycle_cost(t, c);
}

/// Per-cycle redundancy: spare cost over protected cost, both cost-weighted.
/// Infinite when the cycle protects nothing. Lower is better.
struct Redundancy {
  bool finite = false;
  Rational value{0};

  static Redundancy infinity() { return {}; }
  static Redundancy of(Rational v) { return {true, v}; }

  bool operator<(const Redundancy& o) const {
    if (finite && o.finite) return value < o.value;
    return finite && !o.finite;
  }
  bool operator==(const Redundancy& o) const {
    return finite == o.finite && (!finite || value == o.value);
  }
};

inline Redundancy cycle_redundancy(const Topology& t, const Cycle& c,
                                   int capacity, const NetworkState& s) {
  Rational spare = Rational(capacity) * cycle_cost(t, c);
  Rational protected_cost{0};
  for (int l = 0; l < t.link_count(); ++l) {
    int x = protection_paths(t, c, l);
    if (x == 0) continue;
    protected_cost += Rational(std::min(s[l], capacity * x)) * t.link(l).cost;
  }
  if (protected_cost == 0) return Redundancy::infinity();
  return Redundancy::of(spare / protected_cost);
}

/// Capacity for finalizing cycle c under the active policy. Throws
/// std::invalid_argument when c covers no unprotected capacity at all.
inline int choose_capacity(const Topology& t, const Cycle& c,
                           const NetworkState& s, CapacityPolicy policy) {
  int min_on = 0, max_on = 0;
  for (int l : c.links())
    if (s[l] > 0) {
      min_on = min_on == 0 ? s[l] : std::min(min_on, s[l]);
      max_on = std::max(max_on, s[l]);
    }
  int min_straddle = 0, max_straddle = 0;
  for (int l : straddling_links(t, c))
    if (s[l] > 0) {
      int need = (s[l] + 1) / 2;
      min_straddle = min_straddle == 0 ? need : std::min(min_straddle, need);
      max_straddle = std::max(max_straddle, need);
    }
  if (min_on == 0 && min_straddle == 0)
    throw std::invalid_argument("cycle protects nothing under this state");

  if (policy == CapacityPolicy::MinOnCycle)
    return min_on > 0 ? min_on : min_straddle;

  int upper = std::max(max_on, max_straddle);
  int best_n = 1;
  Redundancy best = cycle_redundancy(t, c, 1, s);
  for (int n = 2; n <= upper; ++n) {
    Redundancy r = cycle_redundancy(t, c, n, s);
    if (r < best) {
      best = r;
      best_n = n;
    }
  }
  return best_n;
}

/// Seed for an aggregation round: among links still carrying the smallest
/// positive unprotected capacity and lying on some candidate cycle, pick
/// the cycle with the most unprotected on-cycle links; remaining ties go to
/// canonical ring order. Null when nothing coverable is left.
inline const Cycle* select_seed_cycle(const std::vector<Cycle>& cycles,
                                      const NetworkState& s,
                                      const Topology& t) {
  (void)t;
  int min_w = 0;
  for (const Cycle& c : cycles)
    for (int l : c.links())
      if (s[l] > 0 && (min_w == 0 || s[l] < min_w)) min_w = s[l];
  if (min_w == 0) return nullptr;

  const Cycle* best = nullptr;
  int best_unprotected = -1;
  for (const Cycle& c : cycles) {
    bool carries_min = false;
    int unprotected = 0;
    for (int l : c.links()) {
      if (s[l] == min_w) carries_min = true;
      if (s[l] > 0) ++unprotected;
    }
    if (!carries_min) continue;
    if (unprotected > best_unprotected) {
      best_unprotected = unprotected;
      best = &c;
    }
  }
  return best;
}

namespace detail {

/// On-cycle links common to both cycles, sorted.
inline std::vector<int> shared_links(const Cycle& a, const Cycle& b) {
  std::vector<int> out;
  std::set_intersection(a.links().begin(), a.links().end(),
                        b.links().begin(), b.links().end(),
                        std::back_inserter(out));
  return out;
}

/// Structural merge conditions: exactly one shared link, and no shared ring
/// nodes beyond that link's endpoints. Returns the shared link, or nullopt.
inline std::optional<int> mergeable_share(const Topology& t, const Cycle& cyc,
                                          const Cycle& cand) {
  auto shared = shared_links(cyc, cand);
  if (shared.size() != 1) return std::nullopt;
  int common_nodes = 0;
  for (int n : cand.ring())
    if (cyc.contains_node(n)) ++common_nodes;
  if (common_nodes != 2) return std::nullopt;
  const Link& e = t.link(shared[0]);
  if (!cand.contains_node(e.u) || !cand.contains_node(e.v))
    return std::nullopt;
  return shared[0];
}

/// Redundancy of a cycle finalized at its policy capacity; infinite when it
/// protects nothing (so merge comparisons are total).
inline Redundancy redundancy_at_policy(const Topology& t, const Cycle& c,
                                       const NetworkState& s,
                                       CapacityPolicy policy) {
  try {
    return cycle_redundancy(t, c, choose_capacity(t, c, s, policy), s);
  } catch (const std::invalid_argument&) {
    return Redundancy::infinity();
  }
}

}  // namespace detail

/// Merges two cycles sharing exactly one link into the cycle over the
/// symmetric difference of their link sets; the shared link becomes a
/// straddling link. Throws std::invalid_argument when the merge
/// preconditions do not hold.
inline Cycle aggregate(const Topology& t, const Cycle& cyc,
                       const Cycle& cand) {
  auto shared = detail::shared_links(cyc, cand);
  if (shared.size() != 1)
    throw std::invalid_argument("cycles must share exactly one link");
  std::vector<int> merged;
  for (int l : cyc.links())
    if (l != shared[0]) merged.push_back(l);
  for (int l : cand.links())
    if (l != shared[0]) merged.push_back(l);
  auto cycle = Cycle::from_link_set(t, merged);
  if (!cycle)
    throw std::invalid_argument("merged link set is not an elementary cycle");
  return *cycle;
}

/// The aggregation acceptance test:
///  (a) the cycles share exactly one link,
///  (b) they share no ring nodes beyond that link's endpoints,
///  (c) the merged cycle's redundancy at its policy capacity improves on
///      the current cycle's.
inline bool can_aggregate(const Topology& t, const Cycle& cyc,
                          const Cycle& cand, const NetworkState& s,
                          CapacityPolicy policy = CapacityPolicy::MinOnCycle) {
  if (!detail::mergeable_share(t, cyc, cand)) return false;
  Cycle merged = aggregate(t, cyc, cand);
  return detail::redundancy_at_policy(t, merged, s, policy) <
         detail::redundancy_at_policy(t, cyc, s, policy);
}

/// One accepted merge inside the aggregation loop, for instrumentation.
struct MergeEvent {
  Cycle before;
  Cycle partner;
  Cycle merged;
  Redundancy redundancy_before;
  Redundancy redundancy_after;
};
using MergeObserver = std::function<void(const MergeEvent&)>;

/// Incremental-aggregation design: grow a seed cycle by merging candidate
/// shortest cycles while redundancy improves, finalize it, remove the
/// protected capacity, and repeat until nothing coverable remains.
inline Solution run_aggregation_heuristic(
    const Topology& t, const NetworkState& s0,
    CapacityPolicy policy = CapacityPolicy::MinOnCycle,
    const MergeObserver& observer = {}) {
  const std::vector<Cycle> cycles = enumerate_shortest_cycles(t);
  NetworkState s = s0;
  Solution sol;
  sol.algorithm = "aggregation";

  while (const Cycle* seed = select_seed_cycle(cycles, s, t)) {
    Cycle cyc = *seed;
    for (;;) {
      Redundancy before = detail::redundancy_at_policy(t, cyc, s, policy);
      std::optional<Cycle> best_merged;
      Redundancy best_after = Redundancy::infinity();
      const Cycle* best_partner = nullptr;
      for (const Cycle& cand : cycles) {
        if (!detail::mergeable_share(t, cyc, cand)) continue;
        Cycle merged = aggregate(t, cyc, cand);
        Redundancy after = detail::redundancy_at_policy(t, merged, s, policy);
        if (!(after < before)) continue;  // condition (c)
        if (!best_merged || after < best_after) {
          best_merged = std::move(merged);
          best_after = after;
          best_partner = &cand;
        }
      }
      if (!best_merged) break;
      if (observer)
        observer({cyc, *best_partner, *best_merged, before, best_after});
      cyc = std::move(*best_merged);
    }
    int n = choose_capacity(t, cyc, s, policy);
    sol.pcycles.push_back(detail::apply_pcycle(t, cyc, n, s));
  }

  sol.leftover = s.values();
  sol.unprotectable = detail::unprotectable_links(t);
  return sol;
}

/// CIDA baseline: expand the straddling-link cycles into a candidate pool,
/// then repeatedly deploy the highest-actual-efficiency candidate at unit
/// capacity until no candidate protects anything.
///
/// When `backstop` is set (the default) and some coverable link is missing
/// from the pool — straddling-link cycles do not exist everywhere — the
/// per-link shortest cycles are added so the baseline can attempt full
/// protection; the solution is flagged.
inline Solution run_cida(const Topology& t, const NetworkState& s0,
                         AeMode mode = AeMode::Product, bool backstop = true) {
  std::vector<Cycle> sla;
  {
    std::set<Cycle> dedup;
    for (int l = 0; l < t.link_count(); ++l)
      if (auto c = sla_cycle_for_link(t, l)) dedup.insert(*c);
    sla.assign(dedup.begin(), dedup.end());
  }
  std::vector<Cycle> candidates = expand_candidates(t, sla);

  Solution sol;
  sol.algorithm = "cida";

  std::vector<std::vector<std::uint8_t>> cover;
  auto rebuild_cover = [&] {
    cover.clear();
    for (const Cycle& c : candidates) cover.push_back(coverage_vector(t, c));
  };
  rebuild_cover();

  if (backstop) {
    std::vector<bool> bridge(t.link_count(), false);
    for (int l : find_bridges(t)) bridge[l] = true;
    bool gap = false;
    for (int l = 0; l < t.link_count() && !gap; ++l) {
      if (t.link(l).working == 0 || bridge[l]) continue;
      bool covered = false;
      for (const auto& x : cover)
        if (x[l] > 0) {
          covered = true;
          break;
        }
      if (!covered) gap = true;
    }
    if (gap) {
      std::set<Cycle> merged(candidates.begin(), candidates.end());
      for (const Cycle& c : enumerate_shortest_cycles(t)) merged.insert(c);
      candidates.assign(merged.begin(), merged.end());
      rebuild_cover();
      sol.cida_backstop = true;
    }
  }

  std::vector<Rational> ring_cost;
  for (const Cycle& c : candidates) ring_cost.push_back(cycle_cost(t, c));

  NetworkState s = s0;
  for (;;) {
    int best = -1;
    Rational best_ae{0};
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
      Rational numerator{0};
      for (int l = 0; l < t.link_count(); ++l) {
        if (cover[i][l] == 0) continue;
        numerator += mode == AeMode::Product
                         ? Rational(s[l]) * cover[i][l]
                         : Rational(std::min(s[l], int(cover[i][l])));
      }
      Rational ae = numerator / ring_cost[i];
      if (ae > best_ae) {
        best_ae = ae;
        best = i;
      }
    }
    if (best < 0) break;  // every candidate's AE is zero
    sol.pcycles.push_back(detail::apply_pcycle(t, candidates[best], 1, s));
  }

  sol.leftover = s.values();
  sol.unprotectable = detail::unprotectable_links(t);
  return sol;
}

/// Straddling-link baseline: one pass deploying each link's straddling
/// cycle with enough capacity to clear that link, then a unit-capacity
/// sweep of the shortest cycles to mop up links only coverable on-cycle.
inline Solution run_sla(const Topology& t, const NetworkState& s0) {
  Solution sol;
  sol.algorithm = "sla";
  NetworkState s = s0;

  for (int x = 0; x < t.link_count(); ++x) {
    if (s[x] == 0) continue;
    auto c = sla_cycle_for_link(t, x);
    if (!c) continue;
    int n = (s[x] + 1) / 2;  // x straddles c, so n covers 2n >= s[x]
    sol.pcycles.push_back(detail::apply_pcycle(t, *c, n, s));
  }

  const std::vector<Cycle> shortest = enumerate_shortest_cycles(t);
  for (bool progress = true; progress;) {
    progress = false;
    for (const Cycle& c : shortest) {
      bool useful = false;
      for (int l = 0; l < t.link_count() && !useful; ++l)
        useful = s[l] > 0 && protection_paths(t, c, l) > 0;
      if (!useful) continue;
      sol.pcycles.push_back(detail::apply_pcycle(t, c, 1, s));
      progress = true;
    }
  }

  sol.leftover = s.values();
  sol.unprotectable = detail::unprotectable_links(t);
  return sol;
}

}  // namespace pcycle
