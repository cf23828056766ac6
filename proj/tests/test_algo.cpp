#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphsim/algo.hpp"
#include "graphsim/hash.hpp"
#include "testutil.hpp"

using namespace graphsim;
namespace tu = testutil;

TEST_CASE("shortest path basics") {
  PropertyGraph g = tu::chain({"a", "b", "c"});

  algo::PathResult hop = algo::shortest_path(g, "a", "c");
  CHECK(hop.found);
  CHECK(hop.path == std::vector<std::string>{"a", "b", "c"});
  CHECK(hop.cost == 2.0);

  algo::PathResult self = algo::shortest_path(g, "b", "b");
  CHECK(self.found);
  CHECK(self.path == std::vector<std::string>{"b"});
  CHECK(self.cost == 0.0);

  algo::PathResult reverse = algo::shortest_path(g, "c", "a");
  CHECK_FALSE(reverse.found);
  CHECK(reverse.annotation == std::string(algo::kNoPathAnnotation));

  CHECK_THROWS_AS(algo::shortest_path(g, "ghost", "a"), Error);
}

TEST_CASE("shortest path prefers the lexicographically smallest tie") {
  PropertyGraph g;
  for (const char *n : {"s", "t", "m1", "m2"}) g.add_node(tu::node(n));
  g.add_edge(tu::edge("s", "m2"));
  g.add_edge(tu::edge("m2", "t"));
  g.add_edge(tu::edge("s", "m1"));
  g.add_edge(tu::edge("m1", "t"));
  CHECK(algo::shortest_path(g, "s", "t").path == std::vector<std::string>{"s", "m1", "t"});
}

TEST_CASE("weighted shortest path uses weights when all edges carry them") {
  PropertyGraph g;
  for (const char *n : {"s", "a", "t"}) g.add_node(tu::node(n));
  g.add_edge(tu::edge("s", "t", "R", 10.0));
  g.add_edge(tu::edge("s", "a", "R", 2.0));
  g.add_edge(tu::edge("a", "t", "R", 3.0));

  algo::PathResult weighted = algo::shortest_path(g, "s", "t");  // auto: all weighted
  CHECK(weighted.path == std::vector<std::string>{"s", "a", "t"});
  CHECK(weighted.cost == 5.0);

  algo::PathResult hops = algo::shortest_path(g, "s", "t", false);
  CHECK(hops.path == std::vector<std::string>{"s", "t"});
  CHECK(hops.cost == 1.0);
}

TEST_CASE("shortest path cost matches exhaustive enumeration") {
  Rng rng(31337);
  for (int round = 0; round < 60; ++round) {
    bool weighted = rng.chance(0.5);
    PropertyGraph g = tu::random_graph(rng, rng.uniform(2, 8), 0.35, weighted);
    auto names = g.node_names();
    std::string s = names[rng.uniform(0, names.size() - 1)];
    std::string t = names[rng.uniform(0, names.size() - 1)];
    auto expected = tu::path_cost_oracle(g, s, t, weighted);
    algo::PathResult got = algo::shortest_path(g, s, t, weighted);
    REQUIRE(got.found == expected.has_value());
    if (expected) {
      CHECK(got.cost == *expected);
      // Returned path must be real and consistent with the cost.
      REQUIRE(got.path.front() == s);
      REQUIRE(got.path.back() == t);
      double walked = 0.0;
      for (std::size_t i = 0; i + 1 < got.path.size(); ++i) {
        auto keys = g.edges_between(got.path[i], got.path[i + 1]);
        REQUIRE_FALSE(keys.empty());
        if (weighted) {
          double best = std::numeric_limits<double>::infinity();
          for (const auto &key : keys) best = std::min(best, *g.edge(key).weight);
          walked += best;
        } else {
          walked += 1.0;
        }
      }
      CHECK(walked == got.cost);
    }
  }
}

TEST_CASE("max flow on the spec diamond and corner cases") {
  PropertyGraph g;
  for (const char *n : {"s", "a", "b", "t"}) g.add_node(tu::node(n));
  g.add_edge(tu::edge("s", "a", "R", 3.0));
  g.add_edge(tu::edge("s", "b", "R", 2.0));
  g.add_edge(tu::edge("a", "t", "R", 2.0));
  g.add_edge(tu::edge("b", "t", "R", 3.0));
  CHECK(algo::max_flow(g, "s", "t").max_flow_value == tu::min_cut_oracle(g, "s", "t"));
  CHECK(algo::max_flow(g, "s", "t").max_flow_value == 4.0);

  PropertyGraph single;
  single.add_node(tu::node("s"));
  single.add_node(tu::node("t"));
  single.add_edge(tu::edge("s", "t", "R", 5.0));
  CHECK(algo::max_flow(single, "s", "t").max_flow_value == 5.0);

  PropertyGraph split;
  split.add_node(tu::node("s"));
  split.add_node(tu::node("t"));
  CHECK(algo::max_flow(split, "s", "t").max_flow_value == 0.0);

  CHECK_THROWS_AS(algo::max_flow(single, "s", "s"), Error);
  CHECK_THROWS_AS(algo::max_flow(single, "s", "ghost"), Error);

  // A reachable unweighted edge is an invalid argument naming the edge.
  PropertyGraph missing = single;
  missing.add_node(tu::node("u"));
  missing.add_edge(tu::edge("t", "u", "R"));
  try {
    algo::max_flow(missing, "s", "u");
    FAIL("expected invalid-argument");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
    CHECK(e.message().find("t -> u") != std::string::npos);
  }
}

TEST_CASE("max flow equals exhaustive min cut with valid flow decomposition") {
  Rng rng(77);
  for (int round = 0; round < 60; ++round) {
    PropertyGraph g = tu::random_graph(rng, rng.uniform(2, 8), 0.4, true);
    auto names = g.node_names();
    std::string s = names[rng.uniform(0, names.size() - 1)];
    std::string t = names[rng.uniform(0, names.size() - 1)];
    if (s == t) continue;
    algo::FlowResult flow = algo::max_flow(g, s, t);
    CHECK(flow.max_flow_value == tu::min_cut_oracle(g, s, t));

    // Capacity constraints and conservation.
    std::map<std::string, double> net;
    for (const auto &[key, f] : flow.edge_flows) {
      CHECK(f > 0.0);
      CHECK(f <= *g.edge(key).weight);
      net[key.source] += f;
      net[key.target] -= f;
    }
    for (const auto &[name, balance] : net) {
      if (name == s) {
        CHECK(balance == flow.max_flow_value);
      } else if (name == t) {
        CHECK(balance == -flow.max_flow_value);
      } else {
        CHECK(balance == 0.0);
      }
    }
  }
}

TEST_CASE("bipartite matching basics") {
  PropertyGraph k22;
  k22.add_node(tu::node("l1", "L"));
  k22.add_node(tu::node("l2", "L"));
  k22.add_node(tu::node("r1", "R"));
  k22.add_node(tu::node("r2", "R"));
  for (const char *l : {"l1", "l2"}) {
    for (const char *r : {"r1", "r2"}) k22.add_edge(tu::edge(l, r));
  }
  algo::MatchingResult m = algo::max_matching(k22, "L", "R");
  CHECK(m.size == 2);
  for (const auto &[l, r] : m.pairs) {
    CHECK(k22.node(l).label == "L");
    CHECK(k22.node(r).label == "R");
  }

  // Alternating path a-b-c-d: maximum matching has size 2.
  PropertyGraph path;
  path.add_node(tu::node("a", "L"));
  path.add_node(tu::node("b", "R"));
  path.add_node(tu::node("c", "L"));
  path.add_node(tu::node("d", "R"));
  path.add_edge(tu::edge("a", "b"));
  path.add_edge(tu::edge("c", "b"));  // direction ignored
  path.add_edge(tu::edge("c", "d"));
  CHECK(algo::max_matching(path, "L", "R").size == 2);
  CHECK(algo::max_matching(path, "L", "R").size == tu::matching_size_oracle(path, "L", "R"));

  PropertyGraph no_cross;
  no_cross.add_node(tu::node("a", "L"));
  no_cross.add_node(tu::node("b", "L"));
  no_cross.add_edge(tu::edge("a", "b"));
  CHECK(algo::max_matching(no_cross, "L", "R").size == 0);

  PropertyGraph unlabeled = no_cross;
  unlabeled.add_node(tu::node("c"));
  unlabeled.add_edge(tu::edge("a", "c"));
  CHECK_THROWS_AS(algo::max_matching(unlabeled, "L", "R"), Error);
  CHECK_THROWS_AS(algo::max_matching(no_cross, "L", "L"), Error);
}

TEST_CASE("matching size equals exhaustive enumeration") {
  Rng rng(909);
  for (int round = 0; round < 60; ++round) {
    PropertyGraph g = tu::random_graph(rng, rng.uniform(2, 10), 0.3, false, {"L", "R"});
    algo::MatchingResult m = algo::max_matching(g, "L", "R");
    CHECK(m.size == tu::matching_size_oracle(g, "L", "R"));
    std::set<std::string> used;
    for (const auto &[l, r] : m.pairs) {
      CHECK(used.insert(l).second);  // vertex-disjoint
      CHECK(used.insert(r).second);
      bool is_edge = !g.edges_between(l, r).empty() || !g.edges_between(r, l).empty();
      CHECK(is_edge);
    }
  }
}

TEST_CASE("greedy coloring basics") {
  PropertyGraph empty;
  algo::ColoringResult none = algo::greedy_coloring(empty);
  CHECK(none.colors_used == 0);
  CHECK(none.color_sum == 0);

  // Triangle: greedy order forces colors 0, 1, 2.
  PropertyGraph tri;
  for (const char *n : {"a", "b", "c"}) tri.add_node(tu::node(n));
  tri.add_edge(tu::edge("a", "b"));
  tri.add_edge(tu::edge("b", "c"));
  tri.add_edge(tu::edge("c", "a"));
  algo::ColoringResult coloring = algo::greedy_coloring(tri);
  CHECK(coloring.assignment.at("a") == 0);
  CHECK(coloring.assignment.at("b") == 1);
  CHECK(coloring.assignment.at("c") == 2);
  CHECK(coloring.color_sum == 3);
  CHECK(coloring.colors_used == 3);
  CHECK(coloring.budget == 3);  // max in+out degree 2, plus 1
}

TEST_CASE("greedy coloring is proper, bounded, and name-order deterministic") {
  Rng rng(606);
  for (int round = 0; round < 40; ++round) {
    PropertyGraph g = tu::random_graph(rng, rng.uniform(1, 8), 0.4, false);
    algo::ColoringResult coloring = algo::greedy_coloring(g);
    std::size_t max_degree = g.max_degree();
    for (const auto &[key, e] : g.edges()) {
      (void)e;
      if (key.source == key.target) continue;
      CHECK(coloring.assignment.at(key.source) != coloring.assignment.at(key.target));
    }
    for (const auto &[name, color] : coloring.assignment) {
      (void)name;
      CHECK(color <= max_degree);
    }
    CHECK(coloring.colors_used <= max_degree + 1);

    // Renaming all nodes with an order-preserving map keeps the color sum.
    PropertyGraph renamed;
    std::map<std::string, std::string> names;
    for (const auto &name : g.node_names()) {
      names[name] = "z_" + name;  // order preserved
      renamed.add_node(tu::node(names[name]));
    }
    for (const auto &[key, e] : g.edges()) {
      (void)e;
      renamed.add_edge(tu::edge(names[key.source], names[key.target], key.rel_type));
    }
    CHECK(algo::greedy_coloring(renamed).color_sum == coloring.color_sum);
  }
}

TEST_CASE("fusion merges by name and prunes beyond two hops") {
  PropertyGraph g = tu::chain({"a", "b", "c", "d"});
  for (const auto &name : g.node_names()) {
    g.node_mut(name).properties.emplace("tag", PropertyValue(name));
  }

  algo::FusedGraph fused = algo::fuse_graphs({g}, {"a"});
  CHECK(fused.graph.node_count() == 4);             // structure retained
  CHECK(fused.graph.node("d").properties.empty());  // three hops away
  CHECK(fused.graph.node("c").properties.size() == 1);
  CHECK(fused.pruned_attribute_count == 1);

  // Identity when targets cover everything.
  std::set<std::string> all(g.node_names().begin(), g.node_names().end());
  algo::FusedGraph identity = algo::fuse_graphs({g}, all);
  CHECK(identity.graph == g);
  CHECK(identity.pruned_attribute_count == 0);

  // Later graphs win property conflicts.
  PropertyGraph other;
  other.add_node(tu::node("a", "", {{"tag", PropertyValue("override")}}));
  algo::FusedGraph merged = algo::fuse_graphs({g, other}, {"a"});
  CHECK(merged.graph.node("a").properties.at("tag") == PropertyValue("override"));

  // Idempotence: fusing the fused graph is a fixed point.
  algo::FusedGraph twice = algo::fuse_graphs({fused.graph}, {"a"});
  CHECK(twice.graph == fused.graph);
  CHECK(twice.pruned_attribute_count == 0);

  CHECK_THROWS_AS(algo::fuse_graphs({g}, {}), Error);
  CHECK_THROWS_AS(algo::fuse_graphs({g}, {"ghost"}), Error);
}

TEST_CASE("connectivity helpers") {
  PropertyGraph g = tu::chain({"a", "b", "c"});
  CHECK(algo::reachable(g, "a", "c"));
  CHECK_FALSE(algo::reachable(g, "c", "a"));
  CHECK(algo::weakly_connected(g));
  g.add_node(tu::node("island"));
  CHECK_FALSE(algo::weakly_connected(g));
  PropertyGraph empty;
  CHECK_FALSE(algo::weakly_connected(empty));
}
