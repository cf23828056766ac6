#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphsim/graph.hpp"

namespace graphsim::algo {

inline constexpr const char *kNoPathAnnotation = "no valid path exists";

struct PathResult {
  bool found = false;
  std::vector<std::string> path;
  double cost = 0.0;  // hop count unweighted, weight sum weighted
  std::optional<std::string> annotation;

  json to_json() const;
};

struct FlowResult {
  double max_flow_value = 0.0;
  std::map<EdgeKey, double> edge_flows;  // nonzero flows only

  json to_json() const;
};

struct MatchingResult {
  std::size_t size = 0;
  std::vector<std::pair<std::string, std::string>> pairs;  // (left, right), sorted by left

  json to_json() const;
};

struct ColoringResult {
  std::size_t budget = 0;  // max degree + 1
  std::map<std::string, std::size_t> assignment;
  std::size_t colors_used = 0;
  std::size_t color_sum = 0;  // sum of assigned color indices

  json to_json() const;
};

struct FusedGraph {
  PropertyGraph graph;
  std::set<std::string> targets;
  std::size_t pruned_attribute_count = 0;
};

// Directed shortest path, minimum hops (unweighted) or minimum weight sum
// (weighted, non-negative). Ties broken by lexicographically smallest node
// name sequence. `weighted` unset = auto: weighted iff every edge carries a
// weight. Unknown endpoints throw Error(kNotFound); an absent route is a
// found=false result, not an error.
PathResult shortest_path(const PropertyGraph &g, const std::string &source,
                         const std::string &target, std::optional<bool> weighted = std::nullopt);

// Directed reachability.
bool reachable(const PropertyGraph &g, const std::string &source, const std::string &target);

// Single undirected component covering all nodes; false on the empty graph.
bool weakly_connected(const PropertyGraph &g);

// Maximum s-t flow with edge weights as capacities (augmenting paths,
// breadth-first, deterministic under canonical edge order). Self-loops are
// excluded from the network. Any edge leaving a node reachable from `source`
// must carry a weight.
FlowResult max_flow(const PropertyGraph &g, const std::string &source, const std::string &sink);

// Maximum-cardinality bipartite matching between the two label classes.
// Direction is ignored, self-loops are ignored, same-class edges are ignored.
// Any non-loop edge endpoint carrying neither label is an error, as is
// left_label == right_label.
MatchingResult max_matching(const PropertyGraph &g, const std::string &left_label,
                            const std::string &right_label);

// Greedy coloring in ascending node-name order: each node takes the smallest
// color absent from its already-colored neighbors (adjacency symmetrized,
// self-loops ignored). Budget is max degree + 1.
ColoringResult greedy_coloring(const PropertyGraph &g);

// Union of the input graphs by node name / edge key (later inputs win value
// conflicts), then node properties are stripped from every node farther than
// two undirected hops from all targets. Structure is retained everywhere.
FusedGraph fuse_graphs(const std::vector<PropertyGraph> &graphs,
                       const std::set<std::string> &targets);

}  // namespace graphsim::algo
