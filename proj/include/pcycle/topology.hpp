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
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcycle/errors.hpp"
#include "pcycle/rational.hpp"

namespace pcycle {

/// Undirected link between two switches. Endpoints are node indices with
/// u < v; `working` counts the wavelength channels carrying traffic.
struct Link {
  std::string id;
  int u = -1;
  int v = -1;
  Rational cost{1};
  int working = 0;

  int other(int node) const { return node == u ? v : u; }
  bool joins(int a, int b) const {
    return (u == a && v == b) || (u == b && v == a);
  }
};

/// Validated network topology: a connected simple graph with positive link
/// costs. Nodes and links are addressed by dense indices assigned in sorted
/// id order, so every iteration over the topology is deterministic.
/// Immutable after construction.
class Topology {
 public:
  Topology(std::vector<std::string> node_ids,
           std::vector<std::tuple<std::string, std::string, std::string,
                                  Rational, int>> link_specs) {
    std::sort(node_ids.begin(), node_ids.end());
    for (std::size_t i = 1; i < node_ids.size(); ++i)
      if (node_ids[i] == node_ids[i - 1])
        throw ValidationError("duplicate node id '" + node_ids[i] + "'");
    node_names_ = std::move(node_ids);
    if (node_names_.empty()) throw ValidationError("topology has no nodes");
    for (int i = 0; i < static_cast<int>(node_names_.size()); ++i)
      node_index_[node_names_[i]] = i;

    std::sort(link_specs.begin(), link_specs.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    for (const auto& [id, us, vs, cost, working] : link_specs) {
      Link l;
      l.id = id;
      l.u = require_node(us);
      l.v = require_node(vs);
      if (l.u == l.v)
        throw ValidationError("self-loop on link '" + id + "'");
      if (l.u > l.v) std::swap(l.u, l.v);
      if (cost <= 0)
        throw ValidationError("non-positive cost on link '" + id + "'");
      if (working < 0)
        throw ValidationError("negative working capacity on link '" + id + "'");
      l.cost = cost;
      l.working = working;
      links_.push_back(std::move(l));
    }
    for (std::size_t i = 1; i < links_.size(); ++i)
      if (links_[i].id == links_[i - 1].id)
        throw ValidationError("duplicate link id '" + links_[i].id + "'");
    std::map<std::pair<int, int>, std::string> seen;
    for (const auto& l : links_) {
      auto key = std::make_pair(l.u, l.v);
      auto it = seen.find(key);
      if (it != seen.end())
        throw ValidationError("parallel link '" + l.id + "' duplicates '" +
                              it->second + "'");
      seen.emplace(key, l.id);
    }
    for (int i = 0; i < static_cast<int>(links_.size()); ++i)
      link_index_[links_[i].id] = i;

    adjacency_.assign(node_names_.size(), {});
    for (int i = 0; i < static_cast<int>(links_.size()); ++i) {
      adjacency_[links_[i].u].emplace_back(links_[i].v, i);
      adjacency_[links_[i].v].emplace_back(links_[i].u, i);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

    check_connected();
  }

  int node_count() const { return static_cast<int>(node_names_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }

  const std::string& node_name(int n) const { return node_names_[n]; }
  const Link& link(int l) const { return links_[l]; }

  /// -1 when the id is unknown.
  int node_index(const std::string& id) const {
    auto it = node_index_.find(id);
    return it == node_index_.end() ? -1 : it->second;
  }
  int link_index(const std::string& id) const {
    auto it = link_index_.find(id);
    return it == link_index_.end() ? -1 : it->second;
  }

  /// Link joining u and v, or -1. The graph is simple so it is unique.
  int find_link(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& [nbr, l] : adjacency_[u])
      if (nbr == v) return l;
    return -1;
  }

  /// Neighbors of `node` as (neighbor, link) pairs sorted by neighbor index.
  const std::vector<std::pair<int, int>>& neighbors(int node) const {
    return adjacency_[node];
  }

  Rational total_working_cost() const {
    Rational sum{0};
    for (const auto& l : links_) sum += Rational(l.working) * l.cost;
    return sum;
  }

  int total_working_units() const {
    int sum = 0;
    for (const auto& l : links_) sum += l.working;
    return sum;
  }

  /// Copy of this topology with replaced per-link working capacities.
  Topology with_working(const std::vector<int>& working) const {
    assert(static_cast<int>(working.size()) == link_count());
    Topology t(*this);
    for (int i = 0; i < link_count(); ++i) {
      if (working[i] < 0) throw ValidationError("negative working capacity");
      t.links_[i].working = working[i];
    }
    return t;
  }

 private:
  int require_node(const std::string& id) const {
    int n = node_index(id);
    if (n < 0) throw ValidationError("unknown node '" + id + "'");
    return n;
  }

  void check_connected() const {
    if (node_names_.empty()) return;
    std::vector<bool> seen(node_names_.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int n = stack.back();
      stack.pop_back();
      for (const auto& [nbr, l] : adjacency_[n]) {
        (void)l;
        if (!seen[nbr]) {
          seen[nbr] = true;
          stack.push_back(nbr);
        }
      }
    }
    for (int i = 0; i < static_cast<int>(seen.size()); ++i)
      if (!seen[i])
        throw ValidationError("graph is disconnected (node '" +
                              node_names_[i] + "' unreachable)");
  }

  std::vector<std::string> node_names_;
  std::vector<Link> links_;
  std::map<std::string, int> node_index_;
  std::map<std::string, int> link_index_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

/// Remaining unprotected working capacity per link. The single mutable type
/// in the toolkit; the design algorithms consume it as they place p-cycles.
class NetworkState {
 public:
  explicit NetworkState(const Topology& t) {
    unprotected_.reserve(t.link_count());
    for (int i = 0; i < t.link_count(); ++i)
      unprotected_.push_back(t.link(i).working);
  }
  explicit NetworkState(std::vector<int> unprotected)
      : unprotected_(std::move(unprotected)) {}

  int operator[](int link) const { return unprotected_[link]; }
  int size() const { return static_cast<int>(unprotected_.size()); }

  void reduce(int link, int amount) {
    assert(amount >= 0 && amount <= unprotected_[link]);
    unprotected_[link] -= amount;
  }

  bool all_zero() const {
    return std::all_of(unprotected_.begin(), unprotected_.end(),
                       [](int w) { return w == 0; });
  }
  int total() const {
    return std::accumulate(unprotected_.begin(), unprotected_.end(), 0);
  }
  const std::vector<int>& values() const { return unprotected_; }

  bool operator==(const NetworkState& o) const = default;

 private:
  std::vector<int> unprotected_;
};

struct Demand {
  int src = -1;
  int dst = -1;
  int units = 0;
};

namespace detail {

inline std::vector<std::pair<int, std::vector<std::string>>> tokenize_lines(
    const std::string& text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (!toks.empty()) out.emplace_back(lineno, std::move(toks));
  }
  return out;
}

inline int parse_count(const std::string& s, int line, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0 || v > 1000000000)
      throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + s + "'", line);
  }
}

inline void check_id(const std::string& id, int line) {
  for (char c : id)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '-' || c == '.' || c == ':'))
      throw ParseError("bad identifier '" + id + "'", line);
}

}  // namespace detail

/// Parses and validates a scenario file:
///   nodes <n>
///   node <id>                         (n times)
///   link <id> <u> <v> <cost> <working>
/// `#` starts a comment; `demand` lines are tolerated so a scenario and its
/// demand matrix can live in one file.
inline Topology load_topology(const std::string& text) {
  std::optional<int> declared;
  std::vector<std::string> nodes;
  std::vector<std::tuple<std::string, std::string, std::string, Rational, int>>
      links;
  for (const auto& [lineno, toks] : detail::tokenize_lines(text)) {
    const std::string& kw = toks[0];
    if (kw == "nodes") {
      if (toks.size() != 2) throw ParseError("expected: nodes <count>", lineno);
      if (declared) throw ParseError("duplicate 'nodes' line", lineno);
      declared = detail::parse_count(toks[1], lineno, "node count");
    } else if (kw == "node") {
      if (toks.size() != 2) throw ParseError("expected: node <id>", lineno);
      detail::check_id(toks[1], lineno);
      nodes.push_back(toks[1]);
    } else if (kw == "link") {
      if (toks.size() != 6)
        throw ParseError("expected: link <id> <u> <v> <cost> <working>",
                         lineno);
      detail::check_id(toks[1], lineno);
      Rational cost;
      try {
        cost = parse_rational(toks[4]);
      } catch (const std::exception& e) {
        throw ParseError(std::string("bad cost: ") + e.what(), lineno);
      }
      int working = detail::parse_count(toks[5], lineno, "working capacity");
      links.emplace_back(toks[1], toks[2], toks[3], cost, working);
    } else if (kw == "demand") {
      continue;  // demand matrix may share the file
    } else {
      throw ParseError("unknown directive '" + kw + "'", lineno);
    }
  }
  if (!declared) throw ValidationError("missing 'nodes' header");
  if (*declared != static_cast<int>(nodes.size()))
    throw ValidationError("node count mismatch: header says " +
                          std::to_string(*declared) + ", found " +
                          std::to_string(nodes.size()));
  return Topology(std::move(nodes), std::move(links));
}

/// Parses `demand <src> <dst> <units>` lines against an existing topology.
/// Scenario directives are tolerated so both may share one file.
inline std::vector<Demand> parse_demands(const std::string& text,
                                         const Topology& t) {
  std::vector<Demand> out;
  for (const auto& [lineno, toks] : detail::tokenize_lines(text)) {
    const std::string& kw = toks[0];
    if (kw == "nodes" || kw == "node" || kw == "link") continue;
    if (kw != "demand") throw ParseError("unknown directive '" + kw + "'", lineno);
    if (toks.size() != 4)
      throw ParseError("expected: demand <src> <dst> <units>", lineno);
    Demand d;
    d.src = t.node_index(toks[1]);
    d.dst = t.node_index(toks[2]);
    if (d.src < 0) throw ValidationError("unknown node '" + toks[1] + "'");
    if (d.dst < 0) throw ValidationError("unknown node '" + toks[2] + "'");
    if (d.src == d.dst)
      throw ValidationError("demand endpoints coincide ('" + toks[1] + "')");
    d.units = detail::parse_count(toks[3], lineno, "demand units");
    if (d.units == 0) throw ValidationError("zero-unit demand");
    out.push_back(d);
  }
  return out;
}

/// Serializes a topology back to scenario text. Output is canonical
/// (sorted ids, normalized rationals) and byte-stable.
inline std::string emit_scenario(const Topology& t,
                                 const std::string& header = "") {
  std::ostringstream out;
  if (!header.empty()) out << "# " << header << "\n";
  out << "nodes " << t.node_count() << "\n";
  for (int i = 0; i < t.node_count(); ++i)
    out << "node " << t.node_name(i) << "\n";
  for (int i = 0; i < t.link_count(); ++i) {
    const Link& l = t.link(i);
    out << "link " << l.id << " " << t.node_name(l.u) << " "
        << t.node_name(l.v) << " " << format_rational(l.cost) << " "
        << l.working << "\n";
  }
  return out.str();
}

}  // namespace pcycle
