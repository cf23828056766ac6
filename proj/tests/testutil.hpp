#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graphsim/graph.hpp"
#include "graphsim/rng.hpp"
#include "graphsim/sandbox.hpp"

namespace graphsim::testutil {

inline NodeRecord node(const std::string &name, const std::string &label = "",
                       PropertyMap properties = {}) {
  NodeRecord out;
  out.name = name;
  out.label = label;
  out.properties = std::move(properties);
  return out;
}

inline EdgeRecord edge(const std::string &source, const std::string &target,
                       const std::string &rel_type = "REL",
                       std::optional<double> weight = std::nullopt) {
  EdgeRecord out;
  out.key = EdgeKey{source, target, rel_type};
  out.weight = weight;
  return out;
}

// Chain a -> b -> c -> ... with one rel_type.
inline PropertyGraph chain(const std::vector<std::string> &names) {
  PropertyGraph g;
  for (const auto &name : names) g.add_node(node(name));
  for (std::size_t i = 0; i + 1 < names.size(); ++i) g.add_edge(edge(names[i], names[i + 1]));
  return g;
}

// Random directed graph for oracle suites: n nodes, each ordered pair gets an
// edge with probability p; weights drawn uniformly from [1, 9] when weighted.
inline PropertyGraph random_graph(Rng &rng, std::size_t n, double p, bool weighted,
                                  const std::vector<std::string> &labels = {}) {
  PropertyGraph g;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = "n" + std::to_string(i);
    std::string label = labels.empty() ? "" : labels[rng.uniform(0, labels.size() - 1)];
    g.add_node(node(name, label));
    names.push_back(name);
  }
  for (const auto &a : names) {
    for (const auto &b : names) {
      if (a == b || !rng.chance(p)) continue;
      g.add_edge(edge(a, b, "REL",
                      weighted ? std::optional<double>(static_cast<double>(rng.uniform(1, 9)))
                               : std::nullopt));
    }
  }
  return g;
}

// Exhaustive minimum s-t cut over all source-side subsets. Self-loops are not
// cut edges. Unweighted edges are treated as absent (callers pass weighted
// graphs).
inline double min_cut_oracle(const PropertyGraph &g, const std::string &source,
                             const std::string &sink) {
  std::vector<std::string> others;
  for (const auto &name : g.node_names()) {
    if (name != source && name != sink) others.push_back(name);
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (1ull << others.size()); ++mask) {
    std::set<std::string> side{source};
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask & (1ull << i)) side.insert(others[i]);
    }
    double cut = 0.0;
    for (const auto &[key, e] : g.edges()) {
      if (key.source == key.target) continue;
      if (side.count(key.source) && !side.count(key.target)) cut += e.weight.value_or(0.0);
    }
    best = std::min(best, cut);
  }
  return best;
}

// Minimum path cost by exhaustive simple-path enumeration; nullopt when no
// path exists. Parallel edges collapse to the cheapest one.
inline std::optional<double> path_cost_oracle(const PropertyGraph &g, const std::string &source,
                                              const std::string &target, bool weighted) {
  std::map<std::string, std::map<std::string, double>> adj;
  for (const auto &[key, e] : g.edges()) {
    double w = weighted ? e.weight.value_or(0.0) : 1.0;
    auto [it, inserted] = adj[key.source].emplace(key.target, w);
    if (!inserted) it->second = std::min(it->second, w);
  }
  std::optional<double> best;
  std::set<std::string> on_path{source};
  std::function<void(const std::string &, double)> dfs = [&](const std::string &u, double cost) {
    if (u == target) {
      if (!best || cost < *best) best = cost;
      return;
    }
    for (const auto &[v, w] : adj[u]) {
      if (on_path.count(v)) continue;
      on_path.insert(v);
      dfs(v, cost + w);
      on_path.erase(v);
    }
  };
  dfs(source, 0.0);
  return best;
}

// Maximum matching size by branch-on-every-cross-edge enumeration.
inline std::size_t matching_size_oracle(const PropertyGraph &g, const std::string &left_label,
                                        const std::string &right_label) {
  std::vector<std::pair<std::string, std::string>> cross;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto &[key, e] : g.edges()) {
    (void)e;
    if (key.source == key.target) continue;
    const std::string &sl = g.node(key.source).label;
    const std::string &tl = g.node(key.target).label;
    if (sl == tl) continue;
    std::string left = sl == left_label ? key.source : key.target;
    std::string right = sl == left_label ? key.target : key.source;
    if (g.node(left).label != left_label || g.node(right).label != right_label) continue;
    if (seen.insert({left, right}).second) cross.emplace_back(left, right);
  }
  std::set<std::string> used;
  std::function<std::size_t(std::size_t)> best = [&](std::size_t i) -> std::size_t {
    if (i == cross.size()) return 0;
    std::size_t skip = best(i + 1);
    const auto &[l, r] = cross[i];
    if (used.count(l) || used.count(r)) return skip;
    used.insert(l);
    used.insert(r);
    std::size_t take = 1 + best(i + 1);
    used.erase(l);
    used.erase(r);
    return std::max(skip, take);
  };
  return best(0);
}

// One random operation against the session: usually valid, sometimes aimed at
// ghosts or duplicates so error results (which must replay identically) are
// exercised too. Returns the call result.
inline json random_call(Sandbox &sandbox, const GraphId &id, Rng &rng) {
  PropertyGraph g = sandbox.export_snapshot(id);
  std::vector<std::string> names = g.node_names();
  auto any_name = [&]() -> std::string {
    if (names.empty() || rng.chance(0.08)) return "ghost_" + std::to_string(rng.uniform(0, 99));
    return names[rng.uniform(0, names.size() - 1)];
  };

  switch (rng.uniform(0, 12)) {
    case 0: {
      json nodes = json::array();
      std::size_t count = rng.uniform(1, 3);
      for (std::size_t i = 0; i < count; ++i) {
        std::string name = rng.chance(0.15) && !names.empty()
                               ? names[rng.uniform(0, names.size() - 1)]  // duplicate -> error
                               : "r" + std::to_string(rng.next() % 100000);
        nodes.push_back(json{{"name", name},
                             {"label", rng.chance(0.5) ? "L" : "R"},
                             {"properties", json{{"ijudgemethod", rng.chance(0.5) ? "1" : "0"}}}});
      }
      return sandbox.call(id, "create_nodes", json{{"nodes", nodes}});
    }
    case 1:
      return sandbox.call(id, "delete_nodes",
                          json{{"node_names", json::array({any_name()})}});
    case 2:
      return sandbox.call(id, "update_nodes",
                          json{{"node_names", json::array({any_name()})},
                               {"set", json{{"priority", static_cast<double>(rng.uniform(0, 9))}}}});
    case 3: {
      json edges = json::array(
          {json{{"source", any_name()},
                {"target", any_name()},
                {"rel_type", rng.chance(0.5) ? "REL" : "ALT"},
                {"weight", static_cast<double>(rng.uniform(1, 9))}}});
      return sandbox.call(id, "create_edges", json{{"edges", edges}});
    }
    case 4:
      return sandbox.call(id, "delete_edges",
                          json{{"edges", json::array({json{{"source", any_name()},
                                                           {"target", any_name()}}})}});
    case 5:
      return sandbox.call(
          id, "update_edges",
          json{{"source", any_name()},
               {"target", any_name()},
               {"weight", json{{"op", rng.chance(0.5) ? "scale" : "set"},
                               {"value", static_cast<double>(rng.uniform(0, 3))}}}});
    case 6:
      return sandbox.call(id, "set_edge_weights",
                          json{{"assignments",
                                json::array({json{{"source", any_name()},
                                                  {"target", any_name()},
                                                  {"weight", static_cast<double>(rng.uniform(0, 9))}}})}});
    case 7:
      return sandbox.call(id, "match_nodes",
                          json{{"properties", json{{"ijudgemethod",
                                                    json{{"op", rng.chance(0.5) ? "eq" : "ne"},
                                                         {"value", "1"}}}}}});
    case 8:
      return sandbox.call(id, "get_graph_info", json::object());
    case 9:
      return sandbox.call(id, "get_node_neighbors",
                          json{{"name", any_name()},
                               {"direction", rng.chance(0.5) ? "out" : "both"}});
    case 10:
      return sandbox.call(id, "shortest_path",
                          json{{"source", any_name()}, {"target", any_name()}});
    case 11:
      return sandbox.call(id, "check_graph_connectivity", json::object());
    case 12:
    default:
      return sandbox.call(id, "analyze_graph_node", json{{"name", any_name()}});
  }
}

}  // namespace graphsim::testutil
