#include <deque>

#include "graphsim/algo.hpp"

namespace graphsim::algo {

json ColoringResult::to_json() const {
  json assignment_doc = json::object();
  for (const auto &[name, color] : assignment) assignment_doc[name] = color;
  return json{{"budget", budget},
              {"assignment", assignment_doc},
              {"colors_used", colors_used},
              {"color_sum", color_sum}};
}

ColoringResult greedy_coloring(const PropertyGraph &g) {
  std::map<std::string, std::set<std::string>> adj;
  for (const auto &[key, edge] : g.edges()) {
    (void)edge;
    if (key.source == key.target) continue;  // a node cannot conflict with itself
    adj[key.source].insert(key.target);
    adj[key.target].insert(key.source);
  }

  ColoringResult result;
  result.budget = g.max_degree() + 1;
  std::set<std::size_t> used_colors;
  for (const auto &[name, node] : g.nodes()) {  // ascending name order
    (void)node;
    std::set<std::size_t> taken;
    for (const auto &neighbor : adj[name]) {
      auto it = result.assignment.find(neighbor);
      if (it != result.assignment.end()) taken.insert(it->second);
    }
    std::size_t color = 0;
    while (taken.count(color)) ++color;
    result.assignment[name] = color;
    used_colors.insert(color);
    result.color_sum += color;
  }
  result.colors_used = used_colors.size();
  return result;
}

FusedGraph fuse_graphs(const std::vector<PropertyGraph> &graphs,
                       const std::set<std::string> &targets) {
  if (targets.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "fusion requires at least one target node");
  }

  FusedGraph fused;
  fused.targets = targets;

  // Node union first so edge endpoints always resolve; later graphs win
  // per-field conflicts (label, individual property keys, edge weight).
  for (const auto &g : graphs) {
    for (const auto &[name, node] : g.nodes()) {
      if (!fused.graph.has_node(name)) {
        fused.graph.add_node(node);
      } else {
        NodeRecord &existing = fused.graph.node_mut(name);
        existing.label = node.label;
        for (const auto &[key, value] : node.properties) existing.properties[key] = value;
      }
    }
  }
  for (const auto &g : graphs) {
    for (const auto &[key, edge] : g.edges()) {
      if (!fused.graph.has_edge(key)) {
        fused.graph.add_edge(edge);
      } else {
        EdgeRecord &existing = fused.graph.edge_mut(key);
        if (edge.weight) existing.weight = edge.weight;
        for (const auto &[prop, value] : edge.properties) existing.properties[prop] = value;
      }
    }
  }

  for (const auto &target : targets) {
    if (!fused.graph.has_node(target)) {
      throw Error(ErrorCode::kInvalidArgument, "fusion target '" + target + "' is not present");
    }
  }

  // Attributes survive only within two undirected hops of some target.
  std::map<std::string, std::set<std::string>> adj;
  for (const auto &[key, edge] : fused.graph.edges()) {
    (void)edge;
    adj[key.source].insert(key.target);
    adj[key.target].insert(key.source);
  }
  std::map<std::string, std::size_t> hops;
  std::deque<std::string> queue;
  for (const auto &target : targets) {
    hops[target] = 0;
    queue.push_back(target);
  }
  while (!queue.empty()) {
    std::string u = queue.front();
    queue.pop_front();
    if (hops[u] >= 2) continue;
    for (const auto &v : adj[u]) {
      if (!hops.count(v)) {
        hops[v] = hops[u] + 1;
        queue.push_back(v);
      }
    }
  }
  for (const auto &name : fused.graph.node_names()) {
    if (!hops.count(name)) {
      NodeRecord &node = fused.graph.node_mut(name);
      fused.pruned_attribute_count += node.properties.size();
      node.properties.clear();
    }
  }
  return fused;
}

}  // namespace graphsim::algo
