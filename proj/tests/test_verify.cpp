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

#include <catch2/catch_amalgamated.hpp>

#include "pcycle/heuristics.hpp"
#include "pcycle/verify.hpp"

#include "helpers.hpp"

using namespace pcycle;
using testutil::topo;

namespace {

std::vector<int> ring_of(const Topology& t,
                         const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) out.push_back(t.node_index(n));
  return out;
}

Solution hamiltonian_solution(const Topology& k4) {
  Solution sol;
  sol.algorithm = "manual";
  PCycle p;
  p.cycle = Cycle::from_ring(k4, ring_of(k4, {"a", "b", "c", "d"}));
  p.capacity = 1;
  for (int l = 0; l < k4.link_count(); ++l) {
    int x = protection_paths(k4, p.cycle, l);
    int amount = std::min(k4.link(l).working, x);
    if (amount > 0) p.protects[l] = amount;
  }
  sol.pcycles.push_back(p);
  sol.leftover.assign(k4.link_count(), 0);
  return sol;
}

}  // namespace

TEST_CASE("straddling failure sees two restoration arcs, on-cycle sees one") {
  Topology k4 = topo(testutil::k4_text());
  Solution sol = hamiltonian_solution(k4);
  auto verdicts = verify_protection(k4, sol);
  REQUIRE(verdicts.size() == 6);
  for (const auto& v : verdicts) {
    CHECK(v.protected_);
    if (v.link == k4.link_index("ac") || v.link == k4.link_index("bd")) {
      CHECK(v.restoration == 2);  // both ring arcs
    } else {
      CHECK(v.restoration == 1);  // the complementary arc
    }
    CHECK(v.claimed == 1);
  }
}

TEST_CASE("empty solution leaves working links unprotected") {
  Topology t = topo(testutil::triangle_text());
  Solution empty;
  empty.leftover = {1, 1, 1};
  auto verdicts = verify_protection(t, empty);
  REQUIRE(verdicts.size() == 3);
  for (const auto& v : verdicts) {
    CHECK_FALSE(v.protected_);
    CHECK(v.restoration == 0);
  }
  CHECK_FALSE(all_protected(verdicts));
}

TEST_CASE("claims beyond a p-cycle's capability fail verification") {
  Topology k4 = topo(testutil::k4_text());
  Solution sol = hamiltonian_solution(k4);
  // claim two channels on an on-cycle link backed by capacity 1
  sol.pcycles[0].protects[k4.link_index("ab")] = 2;
  Topology heavier = k4.with_working([&] {
    std::vector<int> w(k4.link_count(), 1);
    w[k4.link_index("ab")] = 2;
    return w;
  }());
  auto verdicts = verify_protection(heavier, sol);
  for (const auto& v : verdicts)
    if (v.link == k4.link_index("ab")) CHECK_FALSE(v.protected_);
}

TEST_CASE("structural garbage is rejected") {
  Topology t = topo(testutil::triangle_text());
  Solution sol;
  PCycle p;
  p.cycle = Cycle::from_ring(t, ring_of(t, {"a", "b", "c"}));
  p.capacity = 1;
  p.protects[7] = 1;  // no such link
  sol.pcycles.push_back(p);
  CHECK_THROWS_AS(verify_protection(t, sol), ValidationError);
}

TEST_CASE("total redundancy uses initial working capacity") {
  Topology k4 = topo(testutil::k4_text());
  Solution sol = hamiltonian_solution(k4);
  CHECK(total_redundancy(k4, sol) == Rational(2, 3));

  Topology ring = topo(testutil::ring_text(5));
  Solution rsol;
  PCycle p;
  p.cycle = Cycle::from_ring(
      ring, ring_of(ring, {"v0", "v1", "v2", "v3", "v4"}));
  p.capacity = 1;
  for (int l = 0; l < ring.link_count(); ++l) p.protects[l] = 1;
  rsol.pcycles.push_back(p);
  rsol.leftover.assign(ring.link_count(), 0);
  CHECK(total_redundancy(ring, rsol) == Rational{1});

  Topology idle = topo(testutil::k4_text(0));
  CHECK_THROWS_AS(total_redundancy(idle, Solution{}), std::invalid_argument);
}

TEST_CASE("demand routing accumulates working capacity") {
  Topology t = topo(testutil::triangle_text(0));
  Topology routed = route_demands(t, {{t.node_index("a"), t.node_index("b"), 3}});
  CHECK(routed.link(routed.link_index("ab")).working == 3);
  CHECK(routed.link(routed.link_index("bc")).working == 0);
  CHECK(routed.link(routed.link_index("ca")).working == 0);

  Topology sym = route_demands(
      t, {{t.node_index("a"), t.node_index("b"), 1},
          {t.node_index("b"), t.node_index("c"), 1},
          {t.node_index("a"), t.node_index("c"), 1}});
  for (int l = 0; l < sym.link_count(); ++l) CHECK(sym.link(l).working == 1);
}

TEST_CASE("demand routing follows the lexicographic tie-break") {
  Topology t = topo(testutil::ring_text(4, 0));
  // v0 to v2: v0-v1-v2 beats v0-v3-v2 on the node-sequence tie-break.
  Topology routed =
      route_demands(t, {{t.node_index("v0"), t.node_index("v2"), 2}});
  CHECK(routed.link(routed.link_index("r0")).working == 2);  // v0-v1
  CHECK(routed.link(routed.link_index("r1")).working == 2);  // v1-v2
  CHECK(routed.link(routed.link_index("r2")).working == 0);
  CHECK(routed.link(routed.link_index("r3")).working == 0);
}

TEST_CASE("routing conserves units times hops") {
  detail::Rng rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    Topology t = testutil::random_bridgeless(rng, rng.uniform(4, 8),
                                             rng.uniform(0, 5), {0});
    int u = rng.uniform(0, t.node_count() - 1);
    int v = rng.uniform(0, t.node_count() - 1);
    if (u == v) continue;
    int units = rng.uniform(1, 9);
    Topology routed = route_demands(t, {{u, v, units}});
    auto path = shortest_path(t, u, v);
    REQUIRE(path);
    CHECK(routed.total_working_units() == units * path->hops());
  }
}

TEST_CASE("reports summarize a run") {
  Topology k4 = topo(testutil::k4_text());
  Solution sol = run_aggregation_heuristic(k4, NetworkState(k4));
  SolutionReport r = build_report(k4, sol, "k4", 1.5);
  CHECK(r.scenario == "k4");
  CHECK(r.algorithm == "aggregation");
  CHECK(r.pcycle_count == 1);
  CHECK(r.total_spare == Rational{4});
  CHECK(r.total_working == Rational{6});
  CHECK(r.redundancy == Rational(2, 3));
  CHECK(r.fully_protected);
  CHECK(r.unprotectable_working == Rational{0});
}

TEST_CASE("comparison CSV is sorted and deterministic") {
  Topology k4 = topo(testutil::k4_text());
  SolutionReport a = build_report(k4, run_sla(k4, NetworkState(k4)), "z", 2.0);
  SolutionReport b = build_report(
      k4, run_aggregation_heuristic(k4, NetworkState(k4)), "z", 1.0);
  SolutionReport c = build_report(k4, run_cida(k4, NetworkState(k4)), "a", 0.5);
  std::string csv = compare_csv({a, b, c});
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line ==
        "scenario,algorithm,redundancy,pcycle_count,fully_protected,runtime_ms");
  std::getline(in, line);
  CHECK_THAT(line, Catch::Matchers::StartsWith("a,cida,"));
  std::getline(in, line);
  CHECK_THAT(line, Catch::Matchers::StartsWith("z,aggregation,0.666667,1,true,"));
  std::getline(in, line);
  CHECK_THAT(line, Catch::Matchers::StartsWith("z,sla,"));
  CHECK_FALSE(std::getline(in, line));

  CHECK(compare_csv({}) ==
        "scenario,algorithm,redundancy,pcycle_count,fully_protected,"
        "runtime_ms\n");
}

TEST_CASE("verification accepts every algorithm on random scenarios") {
  detail::Rng rng(61);
  for (int iter = 0; iter < 20; ++iter) {
    Topology t = testutil::random_bridgeless(rng, rng.uniform(4, 8),
                                             rng.uniform(0, 6), {1, 2});
    NetworkState s(t);
    for (const Solution& sol :
         {run_aggregation_heuristic(t, s), run_cida(t, s), run_sla(t, s)})
      CHECK(all_protected(verify_protection(t, sol)));
  }
}
