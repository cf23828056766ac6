#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphsim/fixtures.hpp"
#include "graphsim/hash.hpp"
#include "graphsim/ops.hpp"
#include "graphsim/predicate.hpp"
#include "testutil.hpp"

using namespace graphsim;
namespace tu = testutil;

namespace {

json run(PropertyGraph &g, const std::string &name, const json &args) {
  return ops::default_registry().execute(g, name, args);
}

json run_err(PropertyGraph &g, const std::string &name, const json &args) {
  try {
    ops::default_registry().execute(g, name, args);
  } catch (const Error &e) {
    return e.to_result();
  }
  FAIL("expected an error from " << name);
  return {};
}

}  // namespace

TEST_CASE("match_nodes finds the excluded set on the approval fixture") {
  PropertyGraph g = fixtures::approval_routing_snapshot();
  json result = run(g, "match_nodes",
                    json{{"properties", json{{"ijudgemethod", {{"op", "ne"}, {"value", "1"}}}}}});
  CHECK(result["nodes"] == json::array({"Node_B", "Node_C", "Node_F"}));

  // Empty spec matches everything, absent property matches nothing.
  CHECK(run(g, "match_nodes", json::object())["nodes"].size() == 17);
  CHECK(run(g, "match_nodes",
            json{{"properties", json{{"nope", {{"op", "eq"}, {"value", "x"}}}}}})["nodes"]
            .empty());
}

TEST_CASE("match_nodes agrees with pointwise predicate evaluation") {
  Rng rng(99);
  for (int round = 0; round < 30; ++round) {
    PropertyGraph g = tu::random_graph(rng, rng.uniform(1, 8), 0.3, false, {"L", "R"});
    json spec{{"label", rng.chance(0.5) ? "L" : "R"}};
    json result = run(g, "match_nodes", spec);
    MatchSpec parsed = MatchSpec::from_json(spec);
    std::set<std::string> reported(result["nodes"].begin(), result["nodes"].end());
    for (const auto &[name, node] : g.nodes()) {
      CHECK(parsed.matches(node) == (reported.count(name) > 0));
    }
  }
}

TEST_CASE("match_edges filters by rel_type and weight") {
  PropertyGraph g;
  for (const char *n : {"a", "b", "c"}) g.add_node(tu::node(n));
  g.add_edge(tu::edge("a", "b", "CONFLICT", 10.0));
  g.add_edge(tu::edge("b", "c", "ROUTES", 3.0));
  g.add_edge(tu::edge("a", "c", "CONFLICT"));

  json conflicts = run(g, "match_edges", json{{"rel_type", "CONFLICT"}});
  CHECK(conflicts["edges"].size() == 2);

  json heavy = run(g, "match_edges", json{{"weight", {{"op", "gt"}, {"value", 5}}}});
  REQUIRE(heavy["edges"].size() == 1);
  CHECK(heavy["edges"][0]["target"] == "b");

  PropertyGraph empty;
  CHECK(run(empty, "match_edges", json::object())["edges"].empty());
}

TEST_CASE("create_nodes is an atomic batch") {
  PropertyGraph g;
  g.add_node(tu::node("existing"));
  StateHash before = state_hash(g);

  json err = run_err(g, "create_nodes",
                     json{{"nodes", json::array({json{{"name", "fresh"}},
                                                 json{{"name", "existing"}}})}});
  CHECK(err["error"]["code"] == "conflict");
  CHECK(err["error"]["details"]["names"] == json::array({"existing"}));
  CHECK(state_hash(g) == before);  // nothing applied

  json ok = run(g, "create_nodes", json{{"nodes", json::array({json{{"name", "fresh"}}})}});
  CHECK(ok["created"]["nodes"] == json::array({"fresh"}));
  CHECK(run(g, "create_nodes", json{{"nodes", json::array()}})["created"]["nodes"].empty());
}

TEST_CASE("delete_nodes removes incident edges and treats repeats as a set") {
  PropertyGraph g = fixtures::approval_routing_snapshot();
  json result = run(g, "delete_nodes",
                    json{{"node_names", json::array({"Node_B", "Node_C", "Node_F", "Node_B"})}});
  CHECK(result["deleted_nodes"] == 3);
  CHECK(result["deleted_edges"] == 7);
  CHECK(g.node_count() == 14);
  CHECK(g.edge_count() == 19);

  CHECK(run(g, "delete_nodes", json{{"node_names", json::array()}})["deleted_nodes"] == 0);

  StateHash before = state_hash(g);
  json err = run_err(g, "delete_nodes", json{{"node_names", json::array({"ghost"})}});
  CHECK(err["error"]["code"] == "not-found");
  CHECK(state_hash(g) == before);
}

TEST_CASE("update_nodes feeds back into match_nodes") {
  PropertyGraph g = fixtures::approval_routing_snapshot();
  run(g, "update_nodes",
      json{{"node_names", json::array({"Node_A"})},
           {"set", json{{"ijudgemethod", "0"}}}});
  json matched = run(g, "match_nodes",
                     json{{"properties", json{{"ijudgemethod", {{"op", "ne"}, {"value", "1"}}}}}});
  CHECK(matched["nodes"] == json::array({"Node_A", "Node_B", "Node_C", "Node_F"}));

  // Empty set map is a counted no-op.
  json noop = run(g, "update_nodes",
                  json{{"node_names", json::array({"Node_A", "Node_D"})}, {"set", json::object()}});
  CHECK(noop["updated"] == 2);
  CHECK(run_err(g, "update_nodes",
                json{{"node_names", json::array({"ghost"})}, {"set", json::object()}})["error"]
            ["code"] == "not-found");
}

TEST_CASE("create_edges validates endpoints and batch uniqueness") {
  PropertyGraph g;
  for (const char *n : {"a", "b"}) g.add_node(tu::node(n));
  StateHash before = state_hash(g);

  json err = run_err(
      g, "create_edges",
      json{{"edges", json::array({json{{"source", "a"}, {"target", "ghost"}}})}});
  CHECK(err["error"]["code"] == "not-found");
  CHECK(state_hash(g) == before);

  json ok = run(g, "create_edges",
                json{{"edges", json::array({json{{"source", "a"}, {"target", "b"},
                                                 {"rel_type", "R"}, {"weight", 2}}})}});
  CHECK(ok["created"]["edges"].size() == 1);
  CHECK(run_err(g, "create_edges",
                json{{"edges", json::array({json{{"source", "a"}, {"target", "b"},
                                                 {"rel_type", "R"}}})}})["error"]["code"] ==
        "conflict");
}

TEST_CASE("delete_edges selector semantics") {
  PropertyGraph g;
  for (const char *n : {"a", "b"}) g.add_node(tu::node(n));
  g.add_edge(tu::edge("a", "b", "R1"));
  g.add_edge(tu::edge("a", "b", "R2"));

  SUBCASE("exact key") {
    json result = run(g, "delete_edges",
                      json{{"edges", json::array({json{{"source", "a"}, {"target", "b"},
                                                       {"rel_type", "R1"}}})}});
    CHECK(result["deleted_edges"] == 1);
    CHECK(g.edge_count() == 1);
  }
  SUBCASE("pair without rel_type removes both") {
    json result = run(g, "delete_edges",
                      json{{"edges", json::array({json{{"source", "a"}, {"target", "b"}}})}});
    CHECK(result["deleted_edges"] == 2);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("no match is an error with no change") {
    StateHash before = state_hash(g);
    json err = run_err(g, "delete_edges",
                       json{{"edges", json::array({json{{"source", "b"}, {"target", "a"}}})}});
    CHECK(err["error"]["code"] == "not-found");
    CHECK(state_hash(g) == before);
  }
}

TEST_CASE("update_edges applies the surcharge transform atomically") {
  PropertyGraph g;
  for (const char *n : {"hub", "out1", "out2"}) g.add_node(tu::node(n));
  g.add_edge(tu::edge("hub", "out1", "LEG", 100.0));
  g.add_edge(tu::edge("hub", "out2", "LEG", 40.0));

  json result = run(g, "update_edges",
                    json{{"source", "hub"},
                         {"target", "out1"},
                         {"weight", json{{"op", "scale"}, {"value", 1.12}}}});
  CHECK(result["updated"] == 1);
  CHECK(*g.edge(EdgeKey{"hub", "out1", "LEG"}).weight == doctest::Approx(112.0));

  // Negative outcome fails with no change.
  StateHash before = state_hash(g);
  json err = run_err(g, "update_edges",
                     json{{"source", "hub"},
                          {"target", "out2"},
                          {"weight", json{{"op", "scale"}, {"value", -1}}}});
  CHECK(err["error"]["code"] == "invalid-argument");
  CHECK(state_hash(g) == before);

  // Property merge without weight change.
  json merged = run(g, "update_edges",
                    json{{"source", "hub"}, {"target", "out2"}, {"set", json{{"flagged", true}}}});
  CHECK(merged["updated"] == 1);
  CHECK(g.edge(EdgeKey{"hub", "out2", "LEG"}).properties.at("flagged").boolean());
}

TEST_CASE("set_edge_weights batches absolute assignments") {
  PropertyGraph g;
  for (const char *n : {"a", "b", "c"}) g.add_node(tu::node(n));
  g.add_edge(tu::edge("a", "b", "R", 1.0));
  g.add_edge(tu::edge("b", "c", "R", 1.0));

  json result = run(g, "set_edge_weights",
                    json{{"assignments",
                          json::array({json{{"source", "a"}, {"target", "b"}, {"weight", 5}},
                                       json{{"source", "b"}, {"target", "c"}, {"weight", 7}}})}});
  CHECK(result["updated"] == 2);
  CHECK(*g.edge(EdgeKey{"a", "b", "R"}).weight == 5.0);

  CHECK(run(g, "set_edge_weights", json{{"assignments", json::array()}})["updated"] == 0);

  StateHash before = state_hash(g);
  json err = run_err(g, "set_edge_weights",
                     json{{"assignments", json::array({json{{"source", "a"},
                                                            {"target", "b"},
                                                            {"weight", -1}}})}});
  CHECK(err["error"]["code"] == "invalid-argument");
  CHECK(state_hash(g) == before);
}

TEST_CASE("retrieval operations") {
  PropertyGraph g = tu::chain({"a", "b", "c"});

  json info = run(g, "get_graph_info", json::object());
  CHECK(info["node_count"] == 3);
  CHECK(info["edge_count"] == 2);
  CHECK(info["max_degree"] == 2);
  CHECK(info["nodes"] == json::array({"a", "b", "c"}));

  CHECK(run(g, "get_node_neighbors", json{{"name", "b"}})["neighbors"] == json::array({"c"}));
  CHECK(run(g, "get_node_neighbors", json{{"name", "b"}, {"direction", "in"}})["neighbors"] ==
        json::array({"a"}));
  CHECK(run(g, "get_node_neighbors", json{{"name", "b"}, {"direction", "both"}})["neighbors"] ==
        json::array({"a", "c"}));

  json node_info = run(g, "get_node_info", json{{"name", "a"}});
  CHECK(node_info["node"]["name"] == "a");
  CHECK(run_err(g, "get_node_info", json{{"name", "ghost"}})["error"]["code"] == "not-found");

  PropertyGraph empty;
  json empty_info = run(empty, "get_graph_info", json::object());
  CHECK(empty_info["node_count"] == 0);
  CHECK(empty_info["max_degree"] == 0);

  // Directed triangle: every node has in+out = 2.
  PropertyGraph tri;
  for (const char *n : {"x", "y", "z"}) tri.add_node(tu::node(n));
  tri.add_edge(tu::edge("x", "y"));
  tri.add_edge(tu::edge("y", "z"));
  tri.add_edge(tu::edge("z", "x"));
  CHECK(run(tri, "get_graph_info", json::object())["max_degree"] == 2);
}

TEST_CASE("node info reflects prior updates") {
  PropertyGraph g;
  run(g, "create_nodes", json{{"nodes", json::array({json{{"name", "n"}}})}});
  run(g, "update_nodes",
      json{{"node_names", json::array({"n"})}, {"set", json{{"level", 3}}}});
  json info = run(g, "get_node_info", json{{"name", "n"}});
  CHECK(info["node"]["properties"]["level"] == 3.0);
}

TEST_CASE("phase-2 law: match plus delete equals the induced subgraph") {
  Rng rng(2024);
  for (int round = 0; round < 25; ++round) {
    PropertyGraph g = tu::random_graph(rng, rng.uniform(2, 8), 0.3, false, {"L", "R"});
    // r(v): label == L. The wire predicate matches the complement.
    json match_args{{"label", "R"}};
    PropertyGraph mutated = g;
    json matched = run(mutated, "match_nodes", match_args);
    run(mutated, "delete_nodes", json{{"node_names", matched["nodes"]}});

    std::set<std::string> keep;
    for (const auto &[name, node] : g.nodes()) {
      if (node.label != "R") keep.insert(name);
    }
    CHECK(state_hash(mutated) == state_hash(induced_subgraph(g, keep)));
  }
}

TEST_CASE("batch atomicity: one poisoned element leaves the hash unchanged") {
  Rng rng(515);
  PropertyGraph g = tu::random_graph(rng, 6, 0.4, true);
  StateHash before = state_hash(g);

  auto names = g.node_names();
  run_err(g, "delete_nodes", json{{"node_names", json::array({names[0], "ghost"})}});
  run_err(g, "create_nodes",
          json{{"nodes", json::array({json{{"name", "new1"}}, json{{"name", names[1]}}})}});
  run_err(g, "create_edges",
          json{{"edges", json::array({json{{"source", names[0]}, {"target", names[1]},
                                           {"rel_type", "FRESH"}},
                                      json{{"source", "ghost"}, {"target", names[0]}}})}});
  run_err(g, "update_nodes",
          json{{"node_names", json::array({names[0], "ghost"})}, {"set", json{{"x", 1}}}});
  run_err(g, "set_edge_weights",
          json{{"assignments", json::array({json{{"source", names[0]}, {"target", names[0]},
                                                 {"rel_type", "NONE"}, {"weight", 1}}})}});
  CHECK(state_hash(g) == before);
}

TEST_CASE("aliases normalize to the plural forms") {
  const ops::Registry &registry = ops::default_registry();
  auto [name, args] =
      registry.normalize("create_node", json{{"node", json{{"name", "solo"}}}});
  CHECK(name == "create_nodes");
  CHECK(args["nodes"].size() == 1);

  PropertyGraph g;
  json result = registry.execute(g, "create_node", json{{"node", json{{"name", "solo"}}}});
  CHECK(result["created"]["nodes"] == json::array({"solo"}));
  json result2 = registry.execute(
      g, "create_edge",
      json{{"edge", json{{"source", "solo"}, {"target", "solo"}, {"rel_type", "SELF"}}}});
  CHECK(result2["created"]["edges"].size() == 1);

  CHECK_THROWS_AS(registry.normalize("create_node", json{{"nodes", json::array()}}), Error);
}

TEST_CASE("argument schema validation") {
  PropertyGraph g;
  g.add_node(tu::node("a"));

  // Unknown argument name.
  CHECK(run_err(g, "get_node_info", json{{"name", "a"}, {"bogus", 1}})["error"]["code"] ==
        "invalid-argument");
  // Wrong type.
  CHECK(run_err(g, "get_node_info", json{{"name", 42}})["error"]["code"] == "invalid-argument");
  // Missing required argument.
  CHECK(run_err(g, "get_node_info", json::object())["error"]["code"] == "invalid-argument");
  // Enum violation.
  CHECK(run_err(g, "get_node_neighbors",
                json{{"name", "a"}, {"direction", "sideways"}})["error"]["code"] ==
        "invalid-argument");
  // Unknown operation.
  CHECK_THROWS_AS(ops::default_registry().execute(g, "frobnicate", json::object()), Error);
}
