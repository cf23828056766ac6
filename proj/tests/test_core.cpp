#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphsim/fixtures.hpp"
#include "graphsim/hash.hpp"
#include "graphsim/predicate.hpp"
#include "testutil.hpp"

using namespace graphsim;
namespace tu = testutil;

TEST_CASE("property values reject non-finite numbers") {
  CHECK_THROWS_AS(PropertyValue(std::numeric_limits<double>::quiet_NaN()), Error);
  CHECK_THROWS_AS(PropertyValue(std::numeric_limits<double>::infinity()), Error);
  CHECK(PropertyValue(5.0).is_number());
}

TEST_CASE("node and edge invariants") {
  PropertyGraph g;
  g.add_node(tu::node("a"));
  CHECK_THROWS_AS(g.add_node(tu::node("a")), Error);
  CHECK_THROWS_AS(g.add_node(tu::node("")), Error);
  CHECK_THROWS_AS(g.add_edge(tu::edge("a", "ghost")), Error);
  g.add_node(tu::node("b"));
  g.add_edge(tu::edge("a", "b"));
  CHECK_THROWS_AS(g.add_edge(tu::edge("a", "b")), Error);  // duplicate key
  g.add_edge(tu::edge("a", "b", "OTHER"));                 // distinct rel_type is fine
  CHECK_THROWS_AS(g.add_edge(tu::edge("b", "a", "W", -1.0)), Error);
  CHECK(g.validate().empty());
}

TEST_CASE("predicate evaluation semantics") {
  NodeRecord n = tu::node("x", "Widget", {{"ijudgemethod", PropertyValue("1")},
                                          {"w", PropertyValue(5.0)}});

  auto pred = [](const std::string &field, const json &doc) {
    return Predicate::from_json(field, doc);
  };

  // Table-style exclusion predicate: matching value does not satisfy `ne`.
  CHECK_FALSE(eval_predicate(n, pred("ijudgemethod", {{"op", "ne"}, {"value", "1"}})));
  CHECK(eval_predicate(n, pred("ijudgemethod", {{"op", "eq"}, {"value", "1"}})));
  CHECK(eval_predicate(n, pred("w", {{"op", "gt"}, {"value", 3}})));
  CHECK_FALSE(eval_predicate(n, pred("w", {{"op", "lt"}, {"value", 3}})));
  CHECK(eval_predicate(n, pred("w", {{"op", "in"}, {"value", json::array({4, 5})}})));

  // Absence semantics: false for every op except exists=false.
  CHECK(eval_predicate(n, pred("missing", {{"op", "exists"}, {"value", false}})));
  CHECK_FALSE(eval_predicate(n, pred("missing", {{"op", "exists"}, {"value", true}})));
  CHECK_FALSE(eval_predicate(n, pred("missing", {{"op", "eq"}, {"value", "1"}})));
  CHECK_FALSE(eval_predicate(n, pred("missing", {{"op", "ne"}, {"value", "1"}})));

  // Label addressing via the reserved field.
  CHECK(eval_predicate(n, pred("label", {{"op", "eq"}, {"value", "Widget"}})));

  // Numeric op on a text value: false plus a diagnostic, not an error.
  std::vector<std::string> diagnostics;
  CHECK_FALSE(eval_predicate(n, pred("ijudgemethod", {{"op", "gt"}, {"value", 0}}), &diagnostics));
  REQUIRE(diagnostics.size() == 1);
  CHECK(diagnostics[0].find("type mismatch") != std::string::npos);

  // Cross-type eq/ne compare as plain inequality.
  CHECK_FALSE(eval_predicate(n, pred("w", {{"op", "eq"}, {"value", "5"}})));
  CHECK(eval_predicate(n, pred("w", {{"op", "ne"}, {"value", "5"}})));
}

TEST_CASE("malformed predicates are rejected") {
  CHECK_THROWS_AS(Predicate::from_json("f", json{{"op", "gt"}, {"value", "text"}}), Error);
  CHECK_THROWS_AS(Predicate::from_json("f", json{{"op", "in"}, {"value", json::array()}}), Error);
  CHECK_THROWS_AS(Predicate::from_json("f", json{{"op", "frobnicate"}, {"value", 1}}), Error);
  CHECK_THROWS_AS(Predicate::from_json("", json{{"op", "eq"}, {"value", 1}}), Error);
}

TEST_CASE("induced subgraph drops bridges and keeps identity") {
  PropertyGraph g = tu::chain({"a", "b", "c"});
  PropertyGraph cut = induced_subgraph(g, {"a", "c"});
  CHECK(cut.node_count() == 2);
  CHECK(cut.edge_count() == 0);

  std::set<std::string> all(g.node_names().begin(), g.node_names().end());
  CHECK(induced_subgraph(g, all) == g);
  CHECK_THROWS_AS(induced_subgraph(g, {"ghost"}), Error);
}

TEST_CASE("induced subgraph on the 17-node fixture leaves 14 nodes and 19 edges") {
  PropertyGraph g = fixtures::approval_routing_snapshot();
  REQUIRE(g.node_count() == 17);
  REQUIRE(g.edge_count() == 26);

  std::set<std::string> keep;
  for (const auto &name : g.node_names()) {
    if (name != "Node_B" && name != "Node_C" && name != "Node_F") keep.insert(name);
  }
  PropertyGraph restricted = induced_subgraph(g, keep);
  CHECK(restricted.node_count() == 14);
  CHECK(restricted.edge_count() == 19);
}

TEST_CASE("induced subgraph laws hold on random graphs") {
  Rng rng(7071);
  for (int round = 0; round < 50; ++round) {
    PropertyGraph g = tu::random_graph(rng, rng.uniform(1, 7), 0.3, false);
    std::set<std::string> keep;
    for (const auto &name : g.node_names()) {
      if (rng.chance(0.6)) keep.insert(name);
    }
    PropertyGraph once = induced_subgraph(g, keep);
    // Exact law: kept edges are precisely those with both endpoints kept.
    for (const auto &[key, e] : once.edges()) {
      (void)e;
      CHECK(keep.count(key.source));
      CHECK(keep.count(key.target));
    }
    for (const auto &[key, e] : g.edges()) {
      if (keep.count(key.source) && keep.count(key.target)) {
        CHECK(once.has_edge(key));
      }
      (void)e;
    }
    // Idempotence.
    CHECK(induced_subgraph(once, keep) == once);
  }
}

TEST_CASE("state hash is canonical") {
  // Fixed digest of the empty graph (SHA-256 of the canonical form).
  PropertyGraph empty;
  CHECK(state_hash(empty).digest ==
        "65eeb2095360f57ed8bf1349d038a7fc25797c07ab0e65bfec565980bec41c54");

  // Insertion order must not matter.
  PropertyGraph g1;
  g1.add_node(tu::node("a", "L", {{"p", PropertyValue(1.5)}, {"q", PropertyValue("x")}}));
  g1.add_node(tu::node("b"));
  g1.add_edge(tu::edge("a", "b", "R", 2.0));
  g1.add_edge(tu::edge("b", "a", "R"));

  PropertyGraph g2;
  g2.add_node(tu::node("b"));
  NodeRecord a = tu::node("a", "L");
  a.properties.emplace("q", PropertyValue("x"));
  a.properties.emplace("p", PropertyValue(1.5));
  g2.add_node(a);
  g2.add_edge(tu::edge("b", "a", "R"));
  g2.add_edge(tu::edge("a", "b", "R", 2.0));

  CHECK(state_hash(g1) == state_hash(g2));

  // One changed weight must change the digest.
  PropertyGraph g3 = g1;
  g3.set_edge_weight(EdgeKey{"a", "b", "R"}, 3.0);
  CHECK_FALSE(state_hash(g1) == state_hash(g3));
}

TEST_CASE("state hash permutation invariance on random graphs") {
  Rng rng(411);
  for (int round = 0; round < 25; ++round) {
    PropertyGraph g = tu::random_graph(rng, rng.uniform(2, 8), 0.4, true);
    // Rebuild by shuffled insertion order.
    std::vector<NodeRecord> nodes;
    for (const auto &[name, record] : g.nodes()) {
      (void)name;
      nodes.push_back(record);
    }
    std::vector<EdgeRecord> edges;
    for (const auto &[key, record] : g.edges()) {
      (void)key;
      edges.push_back(record);
    }
    rng.shuffle(nodes);
    rng.shuffle(edges);
    PropertyGraph rebuilt;
    for (const auto &n : nodes) rebuilt.add_node(n);
    for (const auto &e : edges) rebuilt.add_edge(e);
    CHECK(state_hash(rebuilt) == state_hash(g));
  }
}

TEST_CASE("snapshot document round-trips and is order-insensitive") {
  PropertyGraph g = fixtures::approval_routing_snapshot();
  json doc = g.to_snapshot();
  PropertyGraph loaded = PropertyGraph::from_snapshot(doc);
  CHECK(loaded == g);
  CHECK(state_hash(loaded) == state_hash(g));

  // Reversing list order in the document must not change the graph.
  json reversed = doc;
  std::reverse(reversed["nodes"].begin(), reversed["nodes"].end());
  std::reverse(reversed["edges"].begin(), reversed["edges"].end());
  CHECK(state_hash(PropertyGraph::from_snapshot(reversed)) == state_hash(g));

  CHECK_THROWS_AS(
      PropertyGraph::from_snapshot(json{{"nodes", json::array({json{{"name", "a"}}})},
                                        {"edges", json::array({json{{"source", "a"},
                                                                    {"target", "ghost"}}})}}),
      Error);
}

TEST_CASE("canonical numbers render in shortest round-trip form") {
  CHECK(canonical_number(5.0) == "5");
  CHECK(canonical_number(0.1) == "0.1");
  CHECK(canonical_number(-0.0) == "0");
  CHECK(canonical_number(42000.0) == "42000");
  CHECK(parse_number("42000") == 42000.0);
  CHECK_FALSE(parse_number("4two").has_value());
  CHECK(canonicalize_answer("  True ") == "true");
  CHECK(canonicalize_answer("5.0") == "5");
  CHECK(canonicalize_answer("Hello") == "Hello");
}
