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

#include "pcycle/cycle_gen.hpp"
#include "pcycle/topology.hpp"

#include "helpers.hpp"

using namespace pcycle;
using testutil::topo;

TEST_CASE("triangle scenario loads with sorted ids") {
  Topology t = topo(testutil::triangle_text());
  REQUIRE(t.node_count() == 3);
  REQUIRE(t.link_count() == 3);
  CHECK(t.node_name(0) == "a");
  CHECK(t.node_name(2) == "c");
  CHECK(t.link(0).id == "ab");
  CHECK(t.link(2).id == "ca");
  CHECK(t.link(0).joins(t.node_index("a"), t.node_index("b")));
  CHECK(t.link(0).cost == Rational{1});
  CHECK(t.link(0).working == 1);
}

TEST_CASE("self-loop is rejected") {
  std::string text = "nodes 2\nnode a\nnode b\nlink aa a a 1 0\nlink ab a b 1 0\n";
  CHECK_THROWS_MATCHES(load_topology(text), ValidationError,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("self-loop")));
}

TEST_CASE("parallel links are rejected") {
  std::string text =
      "nodes 2\nnode a\nnode b\nlink e1 a b 1 0\nlink e2 b a 2 0\n";
  CHECK_THROWS_MATCHES(load_topology(text), ValidationError,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("parallel")));
}

TEST_CASE("duplicate ids are rejected") {
  CHECK_THROWS_AS(
      load_topology("nodes 2\nnode a\nnode a\nlink e a a 1 0\n"),
      ValidationError);
  CHECK_THROWS_AS(load_topology("nodes 3\nnode a\nnode b\nnode c\n"
                                "link e a b 1 0\nlink e b c 1 0\n"),
                  ValidationError);
}

TEST_CASE("disconnected graph is rejected") {
  std::string text =
      "nodes 4\nnode a\nnode b\nnode c\nnode d\n"
      "link ab a b 1 0\nlink cd c d 1 0\n";
  CHECK_THROWS_MATCHES(
      load_topology(text), ValidationError,
      Catch::Matchers::MessageMatches(
          Catch::Matchers::ContainsSubstring("disconnected")));
}

TEST_CASE("non-positive cost and bad numbers are rejected") {
  CHECK_THROWS_AS(
      load_topology("nodes 2\nnode a\nnode b\nlink ab a b 0 0\n"),
      ValidationError);
  CHECK_THROWS_AS(
      load_topology("nodes 2\nnode a\nnode b\nlink ab a b -1 0\n"),
      ValidationError);
  CHECK_THROWS_AS(
      load_topology("nodes 2\nnode a\nnode b\nlink ab a b 1 -3\n"),
      ParseError);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    load_topology("nodes 2\nnode a\nnode b\nfrobnicate x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("frobnicate"));
  }
}

TEST_CASE("unknown endpoint is rejected") {
  CHECK_THROWS_MATCHES(
      load_topology("nodes 2\nnode a\nnode b\nlink ax a x 1 0\n"),
      ValidationError,
      Catch::Matchers::MessageMatches(
          Catch::Matchers::ContainsSubstring("unknown node 'x'")));
}

TEST_CASE("node count mismatch is rejected") {
  CHECK_THROWS_AS(load_topology("nodes 3\nnode a\nnode b\nlink ab a b 1 0\n"),
                  ValidationError);
  CHECK_THROWS_AS(load_topology("node a\nnode b\nlink ab a b 1 0\n"),
                  ValidationError);
}

TEST_CASE("comments, blank lines and rational costs parse") {
  std::string text =
      "# header\n\nnodes 2\nnode a\nnode b   # trailing\n"
      "link ab a b 2.5 7\n";
  Topology t = load_topology(text);
  CHECK(t.link(0).cost == Rational(5, 2));
  CHECK(t.link(0).working == 7);

  Topology t2 = load_topology("nodes 2\nnode a\nnode b\nlink ab a b 7/4 0\n");
  CHECK(t2.link(0).cost == Rational(7, 4));
}

TEST_CASE("path graph loads but yields no cycles") {
  Topology t = topo(testutil::path4_text());
  REQUIRE(t.node_count() == 4);
  CHECK(enumerate_shortest_cycles(t).empty());
}

TEST_CASE("demand lines coexist with scenario lines") {
  std::string text = testutil::triangle_text() + "demand a b 3\ndemand b c 1\n";
  Topology t = load_topology(text);
  auto demands = parse_demands(text, t);
  REQUIRE(demands.size() == 2);
  CHECK(demands[0].src == t.node_index("a"));
  CHECK(demands[0].dst == t.node_index("b"));
  CHECK(demands[0].units == 3);

  CHECK_THROWS_AS(parse_demands("demand a a 1\n", t), ValidationError);
  CHECK_THROWS_AS(parse_demands("demand a x 1\n", t), ValidationError);
  CHECK_THROWS_AS(parse_demands("demand a b 0\n", t), ValidationError);
}

TEST_CASE("emit_scenario round-trips") {
  Topology t = topo(testutil::k4_text(2));
  std::string text = emit_scenario(t, "fixture");
  Topology back = load_topology(text);
  REQUIRE(back.node_count() == t.node_count());
  REQUIRE(back.link_count() == t.link_count());
  for (int l = 0; l < t.link_count(); ++l) {
    CHECK(back.link(l).id == t.link(l).id);
    CHECK(back.link(l).cost == t.link(l).cost);
    CHECK(back.link(l).working == t.link(l).working);
  }
  CHECK(emit_scenario(back, "fixture") == text);
}

TEST_CASE("network state tracks reductions") {
  Topology t = topo(testutil::triangle_text(4));
  NetworkState s(t);
  CHECK(s.total() == 12);
  s.reduce(0, 3);
  CHECK(s[0] == 1);
  CHECK_FALSE(s.all_zero());
  s.reduce(0, 1);
  s.reduce(1, 4);
  s.reduce(2, 4);
  CHECK(s.all_zero());
}

TEST_CASE("rational arithmetic stays normalized and exact") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).denominator() == 2);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(4) / Rational(6) == Rational(2, 3));
  CHECK(Rational(1, 3) - Rational(1, 3) == 0);
  CHECK(-Rational(1, 3) < 0);
  CHECK(Rational(5) != 0);
  CHECK(Rational(5) == 5);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(1, 3) >= Rational(1, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX, 3) * Rational(INT64_MAX, 5),
                  std::overflow_error);
  Rational sum{0};
  for (int i = 1; i <= 10; ++i) sum += Rational(1, i);
  CHECK(sum == Rational(7381, 2520));
}

TEST_CASE("rational formatting") {
  CHECK(format_rational(Rational(4)) == "4");
  CHECK(format_rational(Rational(2, 3)) == "2/3");
  CHECK(format_decimal(Rational(2, 3), 6) == "0.666667");
  CHECK(format_decimal(Rational(-1, 8), 3) == "-0.125");
  CHECK(format_decimal(Rational(5), 0) == "5");
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
