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
#include <sstream>
#include <string>
#include <vector>

#include "pcycle/solution.hpp"

namespace pcycle {

/// Outcome of simulating the failure of one link against a solution.
struct LinkVerdict {
  int link = -1;
  int working = 0;      // channels that must survive the failure
  int claimed = 0;      // channels the solution says it protects
  int restoration = 0;  // channels the deployed p-cycles can actually carry
  bool protected_ = false;
};

namespace detail {

// Checks that each restoration arc the ring promises for a failed link is a
// real path in the topology minus that link. For an on-cycle failure the
// complementary arc restores it; for a straddling failure both arcs do.
inline bool restoration_arcs_exist(const Topology& t, const Cycle& c,
                                   int failed) {
  const auto& ring = c.ring();
  const int n = static_cast<int>(ring.size());
  const Link& e = t.link(failed);
  int pu = -1, pv = -1;
  for (int i = 0; i < n; ++i) {
    if (ring[i] == e.u) pu = i;
    if (ring[i] == e.v) pv = i;
  }
  if (pu < 0 || pv < 0) return false;
  // Walk both ring arcs between the failure's endpoints and verify every
  // hop exists and avoids the failed link itself.
  for (int dir = 0; dir < 2; ++dir) {
    int from = dir == 0 ? pu : pv;
    int to = dir == 0 ? pv : pu;
    bool ok = true;
    for (int i = from; i != to; i = (i + 1) % n) {
      int l = t.find_link(ring[i], ring[(i + 1) % n]);
      if (l < 0 || l == failed) {
        ok = false;
        break;
      }
    }
    if (c.on_cycle(failed)) {
      // One arc is the failed link itself; the other must survive.
      if (ok) return true;
    } else if (!ok) {
      return false;  // straddling failures need both arcs
    }
  }
  return !c.on_cycle(failed);
}

}  // namespace detail

/// Independent feasibility check: simulate every single-link failure and
/// confirm the deployed p-cycles restore all working capacity the solution
/// claims to protect. One verdict per link with working > 0.
/// Throws ValidationError when a p-cycle is structurally inconsistent with
/// the topology.
inline std::vector<LinkVerdict> verify_protection(const Topology& t,
                                                  const Solution& sol) {
  for (const auto& p : sol.pcycles) {
    if (p.capacity < 1) throw ValidationError("p-cycle with capacity < 1");
    for (int l : p.cycle.ring_links())
      if (l < 0 || l >= t.link_count())
        throw ValidationError("p-cycle references a missing link");
    for (const auto& [l, amount] : p.protects) {
      if (l < 0 || l >= t.link_count())
        throw ValidationError("p-cycle protects a missing link");
      if (amount < 0) throw ValidationError("negative protected amount");
    }
  }

  std::vector<LinkVerdict> verdicts;
  for (int j = 0; j < t.link_count(); ++j) {
    if (t.link(j).working == 0) continue;
    LinkVerdict v;
    v.link = j;
    v.working = t.link(j).working;
    bool arcs_ok = true;
    bool per_cycle_ok = true;
    for (const auto& p : sol.pcycles) {
      int x = protection_paths(t, p.cycle, j);
      auto it = p.protects.find(j);
      int claimed = it == p.protects.end() ? 0 : it->second;
      v.claimed += claimed;
      v.restoration += p.capacity * x;
      if (claimed > p.capacity * x) per_cycle_ok = false;
      if (claimed > 0 && !detail::restoration_arcs_exist(t, p.cycle, j))
        arcs_ok = false;
    }
    v.protected_ = per_cycle_ok && arcs_ok && v.claimed == v.working &&
                   v.restoration >= v.claimed;
    verdicts.push_back(v);
  }
  return verdicts;
}

inline bool all_protected(const std::vector<LinkVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const LinkVerdict& v) { return v.protected_; });
}

/// Network redundancy: total spare capacity over total working capacity,
/// both cost-weighted, working taken from the topology's initial values.
/// Throws std::invalid_argument when there is no working capacity.
inline Rational total_redundancy(const Topology& t, const Solution& sol) {
  Rational working = t.total_working_cost();
  if (working == 0)
    throw std::invalid_argument("no working capacity to protect");
  return sol.total_spare(t) / working;
}

/// Routes each demand over the unrestricted shortest path and accumulates
/// the traversed units into the links' working capacities. Returns the
/// updated topology; seed a NetworkState from it to start a design run.
inline Topology route_demands(const Topology& t,
                              const std::vector<Demand>& demands) {
  std::vector<int> working;
  working.reserve(t.link_count());
  for (int l = 0; l < t.link_count(); ++l)
    working.push_back(t.link(l).working);
  for (const Demand& d : demands) {
    auto path = shortest_path(t, d.src, d.dst);
    if (!path)
      throw ValidationError("demand endpoints '" + t.node_name(d.src) +
                            "' and '" + t.node_name(d.dst) +
                            "' are disconnected");
    for (int l : path->links) working[l] += d.units;
  }
  return t.with_working(working);
}

/// Evaluation summary for one algorithm run on one scenario.
struct SolutionReport {
  std::string scenario;
  std::string algorithm;
  int pcycle_count = 0;
  Rational total_spare{0};
  Rational total_working{0};  // cost-weighted
  Rational redundancy{0};     // 0 when total_working is 0
  bool fully_protected = false;
  Rational unprotectable_working{0};
  std::vector<LinkVerdict> per_link;
  double runtime_ms = 0.0;
  bool cida_backstop = false;
};

inline SolutionReport build_report(const Topology& t, const Solution& sol,
                                   std::string scenario = "",
                                   double runtime_ms = 0.0) {
  SolutionReport r;
  r.scenario = std::move(scenario);
  r.algorithm = sol.algorithm;
  r.pcycle_count = static_cast<int>(sol.pcycles.size());
  r.total_spare = sol.total_spare(t);
  r.total_working = t.total_working_cost();
  if (r.total_working > 0) r.redundancy = r.total_spare / r.total_working;
  for (int l : sol.unprotectable)
    r.unprotectable_working += Rational(t.link(l).working) * t.link(l).cost;
  r.per_link = verify_protection(t, sol);
  r.fully_protected = all_protected(r.per_link);
  r.runtime_ms = runtime_ms;
  r.cida_backstop = sol.cida_backstop;
  return r;
}

/// CSV comparison table, one row per (scenario, algorithm), sorted.
inline std::string compare_csv(std::vector<SolutionReport> reports) {
  std::sort(reports.begin(), reports.end(),
            [](const SolutionReport& a, const SolutionReport& b) {
              return std::tie(a.scenario, a.algorithm) <
                     std::tie(b.scenario, b.algorithm);
            });
  std::ostringstream out;
  out << "scenario,algorithm,redundancy,pcycle_count,fully_protected,"
         "runtime_ms\n";
  for (const auto& r : reports) {
    out << r.scenario << "," << r.algorithm << ","
        << format_decimal(r.redundancy, 6) << "," << r.pcycle_count << ","
        << (r.fully_protected ? "true" : "false") << ","
        << format_decimal(Rational(static_cast<long long>(r.runtime_ms * 1000),
                                   1000),
                          3)
        << "\n";
  }
  return out.str();
}

}  // namespace pcycle
