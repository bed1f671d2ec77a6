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

#include <sstream>
#include <string>

#include "pcycle/verify.hpp"

namespace pcycle {

/// Solution file: one `pcycle <n> ring <nodes...> protects <link=amt ...>`
/// line per p-cycle in placement order, then `summary` lines. Byte-stable
/// for identical solutions.
inline std::string emit_solution(const Topology& t, const Solution& sol) {
  std::ostringstream out;
  for (const auto& p : sol.pcycles) {
    out << "pcycle " << p.capacity << " ring " << format_ring(t, p.cycle)
        << " protects";
    for (const auto& [l, amount] : p.protects)
      out << " " << t.link(l).id << "=" << amount;
    out << "\n";
  }
  SolutionReport r = build_report(t, sol);
  out << "summary algorithm " << sol.algorithm << "\n";
  out << "summary pcycles " << r.pcycle_count << "\n";
  out << "summary spare " << format_rational(r.total_spare) << "\n";
  out << "summary working " << format_rational(r.total_working) << "\n";
  if (r.total_working > 0)
    out << "summary redundancy " << format_rational(r.redundancy) << "\n";
  out << "summary fully_protected " << (r.fully_protected ? "true" : "false")
      << "\n";
  out << "summary unprotectable";
  if (sol.unprotectable.empty()) {
    out << " none";
  } else {
    for (int l : sol.unprotectable) out << " " << t.link(l).id;
  }
  out << "\n";
  if (sol.cida_backstop) out << "summary backstop engaged\n";
  return out.str();
}

/// Parses a solution file against its scenario's topology. Unknown summary
/// keys are ignored; the pcycle lines are validated structurally (rings
/// must be real cycles, protected links must exist, claims must not exceed
/// the link's working capacity).
inline Solution parse_solution(const Topology& t, const std::string& text) {
  Solution sol;
  std::vector<int> claimed(t.link_count(), 0);
  for (const auto& [lineno, toks] : detail::tokenize_lines(text)) {
    if (toks[0] == "summary") {
      if (toks.size() >= 3 && toks[1] == "algorithm") sol.algorithm = toks[2];
      if (toks.size() >= 3 && toks[1] == "backstop") sol.cida_backstop = true;
      continue;
    }
    if (toks[0] != "pcycle")
      throw ParseError("unknown directive '" + toks[0] + "'", lineno);
    auto it = toks.begin() + 1;
    if (it == toks.end()) throw ParseError("missing capacity", lineno);
    int capacity = detail::parse_count(*it++, lineno, "capacity");
    if (capacity < 1) throw ParseError("capacity must be positive", lineno);
    if (it == toks.end() || *it != "ring")
      throw ParseError("expected 'ring'", lineno);
    ++it;
    std::vector<int> ring;
    while (it != toks.end() && *it != "protects") {
      int n = t.node_index(*it);
      if (n < 0) throw ParseError("unknown node '" + *it + "'", lineno);
      ring.push_back(n);
      ++it;
    }
    PCycle p;
    try {
      p.cycle = Cycle::from_ring(t, std::move(ring));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), lineno);
    }
    p.capacity = capacity;
    if (it != toks.end()) {
      ++it;  // skip 'protects'
      for (; it != toks.end(); ++it) {
        auto eq = it->rfind('=');
        if (eq == std::string::npos)
          throw ParseError("expected <link>=<amount>, got '" + *it + "'",
                           lineno);
        int l = t.link_index(it->substr(0, eq));
        if (l < 0)
          throw ParseError("unknown link '" + it->substr(0, eq) + "'", lineno);
        int amount =
            detail::parse_count(it->substr(eq + 1), lineno, "amount");
        if (amount > 0) {
          p.protects[l] += amount;
          claimed[l] += amount;
        }
      }
    }
    sol.pcycles.push_back(std::move(p));
  }
  sol.leftover.reserve(t.link_count());
  for (int l = 0; l < t.link_count(); ++l) {
    if (claimed[l] > t.link(l).working)
      throw ValidationError("solution claims more than link '" +
                            t.link(l).id + "' carries");
    sol.leftover.push_back(t.link(l).working - claimed[l]);
  }
  sol.unprotectable = detail::unprotectable_links(t);
  return sol;
}

/// Plain-text verdict table, one row per link with working capacity.
inline std::string format_verdicts(const Topology& t,
                                   const std::vector<LinkVerdict>& verdicts) {
  std::ostringstream out;
  for (const auto& v : verdicts)
    out << "link " << t.link(v.link).id << " working " << v.working
        << " claimed " << v.claimed << " restoration " << v.restoration
        << " verdict " << (v.protected_ ? "protected" : "unprotected")
        << "\n";
  return out.str();
}

}  // namespace pcycle
