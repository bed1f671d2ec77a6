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

// Command-line front end: scenario generation, demand routing, candidate
// dumps, the three design algorithms, failure-simulation verification, the
// exact small-instance solver, and CSV comparison runs.
//
// Exit codes: 0 success, 1 validation or verification failure, 2 usage.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcycle/pcycle.hpp"

namespace {

using namespace pcycle;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

std::string stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

CapacityPolicy parse_policy(const std::string& name) {
  return name == "best-ratio" ? CapacityPolicy::BestRatio
                              : CapacityPolicy::MinOnCycle;
}

AeMode parse_ae(const std::string& name) {
  return name == "min" ? AeMode::Min : AeMode::Product;
}

Solution run_algorithm(const std::string& algorithm, const Topology& t,
                       CapacityPolicy policy, AeMode ae, bool backstop) {
  NetworkState s(t);
  if (algorithm == "aggregation")
    return run_aggregation_heuristic(t, s, policy);
  if (algorithm == "cida") return run_cida(t, s, ae, backstop);
  return run_sla(t, s);
}

int cmd_gen(int nodes, double degree, int demand_min, int demand_max,
            std::uint64_t seed, const std::string& out,
            const std::string& demands_out) {
  GenParams p;
  p.nodes = nodes;
  p.avg_degree = degree;
  p.demand_min = demand_min;
  p.demand_max = demand_max;
  p.seed = seed;
  GeneratedScenario g = generate_scenario(p);
  if (demands_out.empty()) {
    write_output(out, g.scenario_text + g.demands_text);
  } else {
    write_output(out, g.scenario_text);
    write_output(demands_out, g.demands_text);
  }
  return 0;
}

int cmd_route(const std::string& scenario_path, const std::string& demands_path,
              const std::string& out) {
  Topology t = load_topology(read_file(scenario_path));
  auto demands = parse_demands(read_file(demands_path), t);
  Topology routed = route_demands(t, demands);
  write_output(out, emit_scenario(routed, "routed: " + stem(scenario_path) +
                                              " + " + stem(demands_path)));
  return 0;
}

int cmd_candidates(const std::string& scenario_path, const std::string& set,
                   const std::string& out) {
  Topology t = load_topology(read_file(scenario_path));
  std::vector<Cycle> cycles;
  if (set == "shortest") {
    cycles = enumerate_shortest_cycles(t);
  } else {
    std::set<Cycle> sla;
    for (int l = 0; l < t.link_count(); ++l)
      if (auto c = sla_cycle_for_link(t, l)) sla.insert(*c);
    cycles.assign(sla.begin(), sla.end());
    if (set == "cida") cycles = expand_candidates(t, cycles);
  }
  std::ostringstream text;
  for (const Cycle& c : cycles) {
    text << "cycle " << format_ring(t, c) << " straddling";
    for (int l : straddling_links(t, c)) text << " " << t.link(l).id;
    text << "\n";
  }
  write_output(out, text.str());
  return 0;
}

int cmd_design(const std::string& scenario_path, const std::string& algorithm,
               const std::string& policy, const std::string& ae, bool backstop,
               const std::string& out) {
  Topology t = load_topology(read_file(scenario_path));
  Solution sol = run_algorithm(algorithm, t, parse_policy(policy),
                               parse_ae(ae), backstop);
  write_output(out, emit_solution(t, sol));
  return 0;
}

int cmd_verify(const std::string& solution_path,
               const std::string& scenario_path) {
  Topology t = load_topology(read_file(scenario_path));
  Solution sol = parse_solution(t, read_file(solution_path));
  auto verdicts = verify_protection(t, sol);
  std::cout << format_verdicts(t, verdicts);
  int bad = 0;
  for (const auto& v : verdicts)
    if (!v.protected_) ++bad;
  if (bad > 0) {
    std::cout << "verdict: unprotected (" << bad << " of " << verdicts.size()
              << " links)\n";
    return 1;
  }
  std::cout << "verdict: fully protected (" << verdicts.size() << " links)\n";
  return 0;
}

int cmd_oracle(const std::string& scenario_path, const std::string& out) {
  Topology t = load_topology(read_file(scenario_path));
  Solution sol = optimal_pcycle_cover(t, NetworkState(t));
  write_output(out, emit_solution(t, sol));
  return 0;
}

int cmd_compare(const std::vector<std::string>& scenario_paths,
                const std::vector<std::string>& algorithms,
                const std::string& policy, const std::string& ae,
                const std::string& out) {
  std::vector<SolutionReport> reports;
  for (const auto& path : scenario_paths) {
    Topology t = load_topology(read_file(path));
    for (const auto& algorithm : algorithms) {
      auto start = std::chrono::steady_clock::now();
      Solution sol = run_algorithm(algorithm, t, parse_policy(policy),
                                   parse_ae(ae), true);
      std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;
      reports.push_back(build_report(t, sol, stem(path), elapsed.count()));
    }
  }
  write_output(out, compare_csv(reports));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-cycle protection design toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random survivable scenario");
  int gen_nodes = 8;
  double gen_degree = 3.0;
  int gen_dmin = 1, gen_dmax = 3;
  std::uint64_t gen_seed = 0;
  std::string gen_out, gen_demands_out;
  gen->add_option("--nodes", gen_nodes, "node count (>= 3)");
  gen->add_option("--degree", gen_degree, "target average degree (>= 2)");
  gen->add_option("--demand-min", gen_dmin, "minimum units per node pair");
  gen->add_option("--demand-max", gen_dmax, "maximum units per node pair");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "scenario output path (default stdout)");
  gen->add_option("--demands-out", gen_demands_out,
                  "write the demand matrix to its own file");

  // route
  auto* route = app.add_subcommand("route", "route demands into working capacity");
  std::string route_scenario, route_demands, route_out;
  route->add_option("scenario", route_scenario, "scenario file")->required();
  route->add_option("demands", route_demands, "demand file (may equal scenario)")
      ->required();
  route->add_option("--out", route_out, "output path (default stdout)");

  // candidates
  auto* cand = app.add_subcommand("candidates", "dump candidate cycles");
  std::string cand_scenario, cand_set = "shortest", cand_out;
  cand->add_option("scenario", cand_scenario, "scenario file")->required();
  cand->add_option("--set", cand_set, "candidate family")
      ->check(CLI::IsMember({"shortest", "sla", "cida"}));
  cand->add_option("--out", cand_out, "output path (default stdout)");

  // design
  auto* design = app.add_subcommand("design", "compute a p-cycle protection set");
  std::string design_scenario, design_alg, design_out;
  std::string design_policy = "min-on-cycle", design_ae = "product";
  bool design_no_backstop = false;
  design->add_option("scenario", design_scenario, "scenario file")->required();
  design->add_option("--algorithm", design_alg, "design algorithm")
      ->required()
      ->check(CLI::IsMember({"aggregation", "cida", "sla"}));
  design->add_option("--capacity-policy", design_policy, "capacity policy")
      ->check(CLI::IsMember({"min-on-cycle", "best-ratio"}));
  design->add_option("--ae-mode", design_ae, "actual-efficiency numerator")
      ->check(CLI::IsMember({"product", "min"}));
  design->add_flag("--no-backstop", design_no_backstop,
                   "disable CIDA's shortest-cycle backstop");
  design->add_option("--out", design_out, "output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a solution by failure simulation");
  std::string verify_solution, verify_scenario;
  verify->add_option("solution", verify_solution, "solution file")->required();
  verify->add_option("scenario", verify_scenario, "scenario file")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact minimum-spare cover (small instances)");
  std::string oracle_scenario, oracle_out;
  oracle->add_option("scenario", oracle_scenario, "scenario file")->required();
  oracle->add_option("--out", oracle_out, "output path (default stdout)");

  // compare
  auto* compare = app.add_subcommand("compare", "run algorithms and emit a CSV table");
  std::vector<std::string> compare_scenarios, compare_algs;
  std::string compare_policy = "min-on-cycle", compare_ae = "product",
              compare_out;
  bool compare_all = false;
  compare->add_option("scenario", compare_scenarios, "scenario file(s)")
      ->required();
  compare->add_flag("--all", compare_all, "run all three algorithms");
  compare->add_option("--algorithm", compare_algs, "algorithm(s) to run")
      ->check(CLI::IsMember({"aggregation", "cida", "sla"}));
  compare->add_option("--capacity-policy", compare_policy, "capacity policy")
      ->check(CLI::IsMember({"min-on-cycle", "best-ratio"}));
  compare->add_option("--ae-mode", compare_ae, "actual-efficiency numerator")
      ->check(CLI::IsMember({"product", "min"}));
  compare->add_option("--out", compare_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed())
      return cmd_gen(gen_nodes, gen_degree, gen_dmin, gen_dmax, gen_seed,
                     gen_out, gen_demands_out);
    if (route->parsed()) return cmd_route(route_scenario, route_demands, route_out);
    if (cand->parsed()) return cmd_candidates(cand_scenario, cand_set, cand_out);
    if (design->parsed())
      return cmd_design(design_scenario, design_alg, design_policy, design_ae,
                        !design_no_backstop, design_out);
    if (verify->parsed()) return cmd_verify(verify_solution, verify_scenario);
    if (oracle->parsed()) return cmd_oracle(oracle_scenario, oracle_out);
    if (compare->parsed()) {
      std::vector<std::string> algs = compare_algs;
      if (algs.empty() || compare_all)
        algs = {"aggregation", "cida", "sla"};
      return cmd_compare(compare_scenarios, algs, compare_policy, compare_ae,
                         compare_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
